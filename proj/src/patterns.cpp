#include "permlab/patterns.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

namespace permlab {

namespace {

// Precomputed value-interval references for backtracking: when placing
// pattern entry j, the host value must exceed the host value matched to
// pattern entry `below[j]` and be smaller than the one matched to `above[j]`
// (-1 when unconstrained).
struct PatternPlan {
  std::vector<int> below;
  std::vector<int> above;

  explicit PatternPlan(std::span<const int> pattern)
      : below(pattern.size(), -1), above(pattern.size(), -1) {
    for (std::size_t j = 0; j < pattern.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (pattern[i] < pattern[j] && (below[j] < 0 || pattern[i] > pattern[below[j]])) {
          below[j] = static_cast<int>(i);
        }
        if (pattern[i] > pattern[j] && (above[j] < 0 || pattern[i] < pattern[above[j]])) {
          above[j] = static_cast<int>(i);
        }
      }
    }
  }
};

// Calls visit(indices) for each occurrence (0-based indices) in lexicographic
// order; stops early when visit returns true. Returns whether it stopped.
template <class Visit>
bool for_each_occurrence(std::span<const int> host, std::span<const int> pattern, Visit&& visit) {
  const std::size_t n = host.size();
  const std::size_t k = pattern.size();
  if (k == 0) {
    std::vector<std::size_t> none;
    return visit(none);
  }
  if (k > n) return false;

  const PatternPlan plan(pattern);
  std::vector<std::size_t> idx(k);
  std::size_t depth = 0;
  idx[0] = 0;
  while (true) {
    // Try to place pattern entry `depth` at host index idx[depth] or later.
    bool placed = false;
    const std::size_t limit = n - (k - depth);
    for (std::size_t i = idx[depth]; i <= limit; ++i) {
      const int v = host[i];
      const int lo = plan.below[depth];
      const int hi = plan.above[depth];
      if (lo >= 0 && v < host[idx[lo]]) continue;
      if (hi >= 0 && v > host[idx[hi]]) continue;
      idx[depth] = i;
      placed = true;
      break;
    }
    if (placed) {
      if (depth + 1 == k) {
        if (visit(idx)) return true;
        ++idx[depth];
        continue;
      }
      ++depth;
      idx[depth] = idx[depth - 1] + 1;
      continue;
    }
    if (depth == 0) return false;
    --depth;
    ++idx[depth];
  }
}

std::vector<std::size_t> first_occurrence_of_any(std::span<const int> host,
                                                 std::span<const Permutation> basis) {
  std::vector<std::size_t> found;
  for (const auto& b : basis) {
    if (for_each_occurrence(host, b.values(), [&](const std::vector<std::size_t>& idx) {
          found = idx;
          return true;
        })) {
      return found;
    }
  }
  return found;
}

std::vector<int> delete_index(std::span<const int> host, std::size_t index) {
  const int removed = host[index];
  std::vector<int> out;
  out.reserve(host.size() - 1);
  for (std::size_t i = 0; i < host.size(); ++i) {
    if (i == index) continue;
    out.push_back(host[i] > removed ? host[i] - 1 : host[i]);
  }
  return out;
}

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    return boost::hash_range(v.begin(), v.end());
  }
};

using Memo = std::unordered_map<std::vector<int>, bool, VectorHash>;

bool member_rec(const std::vector<int>& perm, std::span<const Permutation> basis, unsigned t,
                Memo& memo) {
  const auto occ = first_occurrence_of_any(perm, basis);
  if (occ.empty()) return true;
  if (t == 0) return false;

  // Residuals are only revisited when at least two deletions remain.
  const bool memoize = t >= 2;
  if (memoize) {
    if (auto it = memo.find(perm); it != memo.end()) return it->second;
  }

  // Any witnessing deletion set must hit this occurrence, so only its
  // entries need to be tried.
  bool result = false;
  for (std::size_t i : occ) {
    if (member_rec(delete_index(perm, i), basis, t - 1, memo)) {
      result = true;
      break;
    }
  }
  if (memoize) memo.emplace(perm, result);
  return result;
}

} // namespace

bool contains(std::span<const int> host, std::span<const int> pattern) {
  return for_each_occurrence(host, pattern, [](const auto&) { return true; });
}

bool contains(const Permutation& host, const Permutation& pattern) {
  return contains(host.values(), pattern.values());
}

std::vector<Occurrence> occurrences(const Permutation& host, const Permutation& pattern) {
  std::vector<Occurrence> out;
  for_each_occurrence(host.values(), pattern.values(), [&](const std::vector<std::size_t>& idx) {
    Occurrence o;
    o.indices.reserve(idx.size());
    for (auto i : idx) o.indices.push_back(i + 1);
    out.push_back(std::move(o));
    return false;
  });
  return out;
}

std::uint64_t count_occurrences(const Permutation& host, const Permutation& pattern) {
  std::uint64_t count = 0;
  for_each_occurrence(host.values(), pattern.values(), [&](const auto&) {
    ++count;
    return false;
  });
  return count;
}

bool has_two_disjoint_occurrences(const Permutation& host, const Permutation& pattern) {
  if (pattern.empty()) return true;
  if (2 * pattern.size() > host.size()) return false;
  std::vector<std::vector<std::size_t>> seen;
  return for_each_occurrence(host.values(), pattern.values(), [&](const std::vector<std::size_t>& idx) {
    for (const auto& other : seen) {
      bool disjoint = true;
      std::size_t a = 0, b = 0;
      while (a < idx.size() && b < other.size()) {
        if (idx[a] == other[b]) {
          disjoint = false;
          break;
        }
        idx[a] < other[b] ? ++a : ++b;
      }
      if (disjoint) return true;
    }
    seen.push_back(idx);
    return false;
  });
}

bool avoids_all(std::span<const int> host, std::span<const Permutation> basis) {
  return std::none_of(basis.begin(), basis.end(),
                      [&](const Permutation& b) { return contains(host, b.values()); });
}

bool avoids_all(const Permutation& host, std::span<const Permutation> basis) {
  return avoids_all(host.values(), basis);
}

bool is_member_plus_t(const Permutation& perm, std::span<const Permutation> basis, unsigned t) {
  // The empty pattern is contained in everything, including the empty permutation.
  for (const auto& b : basis) {
    if (b.empty()) return false;
  }
  Memo memo;
  return member_rec(perm.vector(), basis, t, memo);
}

bool is_member_321p1_structural(const Permutation& perm) {
  return !contains(perm, patterns::p4321) && !has_two_disjoint_occurrences(perm, patterns::p321);
}

const char* to_string(EssentialClass c) {
  switch (c) {
  case EssentialClass::NotEssential: return "not-essential";
  case EssentialClass::SmallEssential: return "small";
  case EssentialClass::LargeEssential: return "large";
  }
  return "?";
}

std::vector<std::size_t> essential_positions(const Permutation& perm) {
  std::vector<std::size_t> out;
  const auto host = perm.values();
  for (std::size_t i = 0; i < host.size(); ++i) {
    if (!contains(delete_index(host, i), patterns::p231.values())) out.push_back(i + 1);
  }
  return out;
}

MinimumParticipation minimum_participation_231(const Permutation& perm, std::size_t position) {
  if (position < 1 || position > perm.size()) throw std::out_of_range("position out of range");
  MinimumParticipation mp;
  // In 231 the minimum is the third entry of the occurrence.
  for_each_occurrence(perm.values(), patterns::p231.values(), [&](const std::vector<std::size_t>& idx) {
    ++mp.total;
    if (idx[2] + 1 == position) ++mp.as_minimum;
    return false;
  });
  return mp;
}

EssentialClass classify_essential(const Permutation& perm, std::size_t position) {
  if (position < 1 || position > perm.size()) throw std::out_of_range("position out of range");
  if (!contains(perm, patterns::p231)) {
    throw std::invalid_argument("classification undefined: permutation avoids 231");
  }
  if (contains(delete_entry(perm, position), patterns::p231)) {
    throw std::invalid_argument("position " + std::to_string(position) + " is not essential");
  }
  const auto mp = minimum_participation_231(perm, position);
  if (mp.as_minimum == mp.total) return EssentialClass::SmallEssential;
  if (mp.as_minimum == 0) return EssentialClass::LargeEssential;
  throw std::logic_error("essential entry is the minimum of some but not all 231 occurrences");
}

} // namespace permlab
