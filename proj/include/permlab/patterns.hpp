#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

/// 1-based, strictly increasing positions into a host permutation.
struct Occurrence {
  std::vector<std::size_t> indices;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

bool contains(std::span<const int> host, std::span<const int> pattern);
bool contains(const Permutation& host, const Permutation& pattern);

/// Every occurrence of `pattern` in `host`, in lexicographic index order.
std::vector<Occurrence> occurrences(const Permutation& host, const Permutation& pattern);

std::uint64_t count_occurrences(const Permutation& host, const Permutation& pattern);

bool has_two_disjoint_occurrences(const Permutation& host, const Permutation& pattern);

/// True when `host` contains none of the patterns in `basis`.
bool avoids_all(std::span<const int> host, std::span<const Permutation> basis);
bool avoids_all(const Permutation& host, std::span<const Permutation> basis);

/// Membership in Av(basis)^{+t}: some set of at most t deletions leaves a
/// permutation avoiding every pattern of `basis`.
bool is_member_plus_t(const Permutation& perm, std::span<const Permutation> basis, unsigned t);

/// Av(321)^{+1} membership via its structural description: avoids 4321 and
/// has no two disjoint 321 occurrences.
bool is_member_321p1_structural(const Permutation& perm);

enum class EssentialClass { NotEssential, SmallEssential, LargeEssential };

const char* to_string(EssentialClass c);

/// Positions whose deletion leaves a 231-avoiding permutation.
std::vector<std::size_t> essential_positions(const Permutation& perm);

/// Splits an essential entry of a 231-containing permutation by whether it is
/// the minimum of every 231 occurrence (small) or of none (large). An entry in
/// no occurrence at all is large. Throws std::invalid_argument when `perm`
/// avoids 231 or the position is not essential.
EssentialClass classify_essential(const Permutation& perm, std::size_t position);

/// How often the entry at `position` plays the minimum ("1") role among all 231
/// occurrences, next to the total number of occurrences.
struct MinimumParticipation {
  std::uint64_t as_minimum = 0;
  std::uint64_t total = 0;
};
MinimumParticipation minimum_participation_231(const Permutation& perm, std::size_t position);

/// Patterns used throughout.
namespace patterns {
inline const Permutation p12{1, 2};
inline const Permutation p231{2, 3, 1};
inline const Permutation p321{3, 2, 1};
inline const Permutation p4321{4, 3, 2, 1};
} // namespace patterns

} // namespace permlab
