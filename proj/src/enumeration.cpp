#include "permlab/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

#include "permlab/patterns.hpp"
#include "permlab/symmetric_group.hpp"

namespace permlab {

namespace {

Integer exact_quotient(const Rational& q, const char* what) {
  if (denominator(q) != 1) {
    throw std::logic_error(std::string(what) + ": expected an integer, got " + to_string(q));
  }
  return numerator(q);
}

} // namespace

Integer catalan(unsigned n) {
  std::vector<Integer> c(n + 1);
  c[0] = 1;
  for (unsigned m = 0; m < n; ++m) {
    Integer next = 0;
    for (unsigned i = 0; i <= m; ++i) next += c[i] * c[m - i];
    c[m + 1] = next;
  }
  return c[n];
}

Integer hook_length_count(const Partition& lambda) {
  const Partition cols = lambda.conjugate();
  Integer hooks = 1;
  for (std::size_t r = 0; r < lambda.rows(); ++r) {
    for (int c = 0; c < lambda.part(r); ++c) {
      const int arm = lambda.part(r) - c - 1;
      const int leg = cols.part(static_cast<std::size_t>(c)) - static_cast<int>(r) - 1;
      hooks *= arm + leg + 1;
    }
  }
  return exact_quotient(Rational(factorial(static_cast<unsigned>(lambda.weight())), hooks),
                        "hook length formula");
}

Integer hook_length_count_kl1(int k, int l) {
  if (l < 1 || k < l) throw std::invalid_argument("shape (k,l,1) requires k >= l >= 1");
  const unsigned n = static_cast<unsigned>(k + l + 1);
  Rational q(factorial(n) * (k - l + 1));
  q /= Rational(Integer(k + 2) * factorial(static_cast<unsigned>(k)) * (l + 1) *
                factorial(static_cast<unsigned>(l - 1)));
  return exact_quotient(q, "f^(k,l,1)");
}

Integer count_321p1_formula(unsigned n) {
  Integer total = catalan(n);
  const int nn = static_cast<int>(n);
  for (int k = nn / 2; k <= nn - 2; ++k) {
    Rational term(factorial(n) * (2 * k - nn + 2));
    term /= Rational(Integer(k + 2) * factorial(static_cast<unsigned>(k)) * (nn - k) *
                     factorial(static_cast<unsigned>(nn - k - 2)));
    const Integer f = exact_quotient(term, "count_321p1_formula summand");
    total += f * f;
  }
  return total;
}

Integer count_321p1_shape_sum(unsigned n) {
  Integer total = 0;
  for (const auto& lambda : partitions_of(static_cast<int>(n))) {
    if (!shape_membership_321p1(lambda)) continue;
    const Integer f = hook_length_count(lambda);
    total += f * f;
  }
  return total;
}

std::uint64_t count_bruteforce(unsigned n, std::span<const Permutation> basis, unsigned t,
                               unsigned jobs, unsigned cap) {
  if (n > cap) {
    throw cap_exceeded("count_bruteforce: n = " + std::to_string(n) + " exceeds cap " +
                       std::to_string(cap));
  }
  return count_permutations(n, jobs,
                            [&](const Permutation& p) { return is_member_plus_t(p, basis, t); });
}

const char* to_string(StructuralPredicateId id) {
  switch (id) {
  case StructuralPredicateId::NoGreatestIn231: return "no-greatest-in-231";
  case StructuralPredicateId::EssentialGreatest: return "essential-greatest";
  case StructuralPredicateId::EssentialLeftmost: return "essential-leftmost";
  case StructuralPredicateId::EssentialRightmost: return "essential-rightmost";
  case StructuralPredicateId::EssentialLeast: return "essential-least";
  case StructuralPredicateId::SmallEssentialCase: return "small-essential";
  case StructuralPredicateId::LargeEssentialCase: return "large-essential";
  }
  return "?";
}

std::optional<StructuralPredicateId> parse_structural_predicate(std::string_view name) {
  for (auto id : kAllStructuralPredicates) {
    if (name == to_string(id)) return id;
  }
  return std::nullopt;
}

bool structural_predicate(const Permutation& perm, StructuralPredicateId id) {
  const auto& p231 = patterns::p231;
  if (!contains(perm, p231)) return false; // every id excludes Av(231)

  const std::size_t n = perm.size();
  const auto essential = [&](std::size_t pos) { return !contains(delete_entry(perm, pos), p231); };
  const auto inverse = perm.inverse();
  const std::size_t greatest_pos = static_cast<std::size_t>(inverse.at(n));

  switch (id) {
  case StructuralPredicateId::EssentialGreatest: return essential(greatest_pos);
  case StructuralPredicateId::EssentialLeftmost: return essential(1);
  case StructuralPredicateId::EssentialRightmost: return essential(n);
  case StructuralPredicateId::EssentialLeast: return essential(static_cast<std::size_t>(inverse.at(1)));
  default: break;
  }

  const auto ess = essential_positions(perm);
  if (ess.empty()) return false; // not in Av(231)^{+1}

  bool greatest_in_231 = false;
  for (const auto& occ : occurrences(perm, p231)) {
    if (std::find(occ.indices.begin(), occ.indices.end(), greatest_pos) != occ.indices.end()) {
      greatest_in_231 = true;
      break;
    }
  }
  if (id == StructuralPredicateId::NoGreatestIn231) return !greatest_in_231;

  const bool greatest_essential = std::find(ess.begin(), ess.end(), greatest_pos) != ess.end();
  if (!greatest_in_231 || greatest_essential) return false;

  bool has_small = false;
  bool has_large = false;
  for (auto pos : ess) {
    (classify_essential(perm, pos) == EssentialClass::SmallEssential ? has_small : has_large) = true;
  }
  if (id == StructuralPredicateId::SmallEssentialCase) return has_small;
  return !has_small && has_large;
}

std::uint64_t count_structural(unsigned n, StructuralPredicateId id, unsigned jobs, unsigned cap) {
  if (n > cap) {
    throw cap_exceeded("count_structural: n = " + std::to_string(n) + " exceeds cap " +
                       std::to_string(cap));
  }
  return count_permutations(n, jobs, [&](const Permutation& p) { return structural_predicate(p, id); });
}

std::string CountTable::to_csv() const {
  std::string out = "n,count\n";
  for (std::size_t n = 0; n < counts.size(); ++n) {
    out += std::to_string(n) + "," + counts[n].str() + "\n";
  }
  return out;
}

std::string CountTable::to_bfile() const {
  std::string out;
  for (std::size_t n = 0; n < counts.size(); ++n) {
    out += std::to_string(n) + " " + counts[n].str() + "\n";
  }
  return out;
}

} // namespace permlab
