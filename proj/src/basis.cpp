#include "permlab/basis.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "permlab/parallel.hpp"
#include "permlab/patterns.hpp"

namespace permlab {

std::map<std::size_t, std::size_t> BasisResult::length_histogram() const {
  std::map<std::size_t, std::size_t> h;
  for (const auto& e : elements) ++h[e.size()];
  return h;
}

std::uint64_t basis_length_bound(unsigned longest_pattern, unsigned t) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t b = longest_pattern;
  for (unsigned i = 0; i < t; ++i) {
    if (b != 0 && b + 1 > kMax / b) return kMax;
    b = b * (b + 1);
  }
  return b;
}

std::vector<Permutation> one_point_extensions(std::span<const Permutation> perms) {
  std::unordered_set<Permutation> seen;
  for (const auto& p : perms) {
    const auto n = p.size();
    for (std::size_t pos = 1; pos <= n + 1; ++pos) {
      for (int v = 1; v <= static_cast<int>(n + 1); ++v) seen.insert(insert_entry(p, pos, v));
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

BasisResult compute_basis(std::span<const Permutation> basis_of_c, unsigned t, unsigned max_len,
                          unsigned jobs) {
  unsigned longest = 0;
  for (const auto& b : basis_of_c) {
    if (b.empty()) throw std::invalid_argument("basis patterns must be nonempty");
    longest = std::max<unsigned>(longest, static_cast<unsigned>(b.size()));
  }
  if (basis_of_c.empty()) throw std::invalid_argument("basis of C must be nonempty");
  if (max_len < longest) {
    throw std::invalid_argument("max_len " + std::to_string(max_len) + " is below the longest pattern length " +
                                std::to_string(longest));
  }

  BasisResult result;
  result.search_cap = max_len;
  result.length_bound = basis_length_bound(longest, t);
  result.complete_under_bound = max_len >= result.length_bound;

  std::vector<Permutation> members{Permutation{}};
  std::unordered_set<Permutation> member_set{Permutation{}};
  result.members_per_length.push_back(1);

  for (unsigned n = 1; n <= max_len; ++n) {
    auto candidates = one_point_extensions(members);
    for (const auto& b : basis_of_c) {
      if (b.size() == n && !std::binary_search(candidates.begin(), candidates.end(), b)) {
        candidates.insert(std::upper_bound(candidates.begin(), candidates.end(), b), b);
      }
    }

    enum Verdict : unsigned char { kMember, kBasis, kNeither };
    std::vector<unsigned char> verdict(candidates.size(), kNeither);
    parallel_chunks(candidates.size(), jobs, [&](unsigned, std::uint64_t first, std::uint64_t last) {
      for (auto i = first; i < last; ++i) {
        const auto& cand = candidates[i];
        if (is_member_plus_t(cand, basis_of_c, t)) {
          verdict[i] = kMember;
          continue;
        }
        bool minimal = true;
        for (std::size_t pos = 1; pos <= n && minimal; ++pos) {
          minimal = member_set.count(delete_entry(cand, pos)) > 0;
        }
        if (minimal) verdict[i] = kBasis;
      }
    });

    std::vector<Permutation> next;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (verdict[i] == kMember) next.push_back(candidates[i]);
      else if (verdict[i] == kBasis) result.elements.push_back(candidates[i]);
    }
    members = std::move(next);
    member_set = std::unordered_set<Permutation>(members.begin(), members.end());
    result.members_per_length.push_back(members.size());
  }

  std::sort(result.elements.begin(), result.elements.end(), [](const Permutation& a, const Permutation& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return result;
}

bool verify_antichain(std::span<const Permutation> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      if (i != j && contains(elements[j], elements[i])) return false;
    }
  }
  return true;
}

} // namespace permlab
