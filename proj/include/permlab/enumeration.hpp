#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permlab/numeric.hpp"
#include "permlab/permutation.hpp"
#include "permlab/rsk.hpp"

namespace permlab {

Integer catalan(unsigned n);

/// f^lambda by the Hook Length Formula.
Integer hook_length_count(const Partition& lambda);

/// f^(k,l,1) from the closed row-by-row hook products:
/// n!(k-l+1) / ((k+2) k! (l+1) (l-1)!), with n = k+l+1 and k >= l >= 1.
Integer hook_length_count_kl1(int k, int l);

/// |Av_n(321)^{+1}| = C_n + sum_{k=floor(n/2)}^{n-2} (n!(2k-n+2) / ((k+2) k! (n-k) (n-k-2)!))^2.
/// Each summand is divided exactly and checked to be integral.
Integer count_321p1_formula(unsigned n);

/// Sum of (f^lambda)^2 over the shapes (k), (k,l), (k,l,1) of n.
Integer count_321p1_shape_sum(unsigned n);

inline constexpr unsigned kBruteforceCap = 10;
inline constexpr unsigned kStructuralCap = 9;

/// |S_n ∩ Av(basis)^{+t}| by exhaustive generation. Throws cap_exceeded
/// when n > cap.
std::uint64_t count_bruteforce(unsigned n, std::span<const Permutation> basis, unsigned t,
                               unsigned jobs = 0, unsigned cap = kBruteforceCap);

/// Subsets of Av(231)^{+1} singled out by the structural decomposition of its
/// generating function.
enum class StructuralPredicateId {
  NoGreatestIn231,    // non-avoider whose greatest entry lies in no 231
  EssentialGreatest,  // non-avoider whose greatest entry is essential
  EssentialLeftmost,
  EssentialRightmost,
  EssentialLeast,
  SmallEssentialCase, // has a small essential entry; greatest in a 231 but not essential
  LargeEssentialCase, // no small essential entry; greatest in a 231 but not essential
};

inline constexpr StructuralPredicateId kAllStructuralPredicates[] = {
    StructuralPredicateId::NoGreatestIn231,    StructuralPredicateId::EssentialGreatest,
    StructuralPredicateId::EssentialLeftmost,  StructuralPredicateId::EssentialRightmost,
    StructuralPredicateId::EssentialLeast,     StructuralPredicateId::SmallEssentialCase,
    StructuralPredicateId::LargeEssentialCase,
};

const char* to_string(StructuralPredicateId id);
std::optional<StructuralPredicateId> parse_structural_predicate(std::string_view name);

bool structural_predicate(const Permutation& perm, StructuralPredicateId id);

std::uint64_t count_structural(unsigned n, StructuralPredicateId id, unsigned jobs = 0,
                               unsigned cap = kStructuralCap);

/// Coefficient sequence |C_n| for n = 0, 1, ...
struct CountTable {
  std::string class_id;
  unsigned t = 0;
  std::vector<Integer> counts;

  /// "n,count" header followed by one row per n.
  std::string to_csv() const;
  /// OEIS b-file: "n count" per line.
  std::string to_bfile() const;
};

} // namespace permlab
