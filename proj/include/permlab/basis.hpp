#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

struct BasisResult {
  /// Minimal non-members found, sorted by length then lexicographically.
  std::vector<Permutation> elements;
  unsigned search_cap = 0;
  /// Length bound from iterating m -> m(m+1) t times (m = longest pattern).
  std::uint64_t length_bound = 0;
  /// True when search_cap >= length_bound, i.e. the basis is provably complete.
  bool complete_under_bound = false;
  /// |C^{+t} ∩ S_n| for n = 0..search_cap, a by-product of the search.
  std::vector<std::uint64_t> members_per_length;

  std::map<std::size_t, std::size_t> length_histogram() const;
};

/// m(m+1) iterated t times starting from m; saturates at UINT64_MAX.
std::uint64_t basis_length_bound(unsigned longest_pattern, unsigned t);

/// All permutations obtained by inserting one new entry into one of `perms`,
/// deduplicated and sorted.
std::vector<Permutation> one_point_extensions(std::span<const Permutation> perms);

/// Basis of Av(basis_of_c)^{+t} restricted to lengths <= max_len.
///
/// Level by level, candidates of length n are the one-point extensions of
/// the class members of length n-1 (plus the patterns of length n). A
/// candidate outside the class whose every single deletion is a member is a
/// basis element. Throws std::invalid_argument when max_len is below the
/// longest pattern or a pattern is empty.
BasisResult compute_basis(std::span<const Permutation> basis_of_c, unsigned t, unsigned max_len,
                          unsigned jobs = 0);

/// No element contains another.
bool verify_antichain(std::span<const Permutation> elements);

} // namespace permlab
