#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

/// Integer partition; parts are positive and weakly decreasing.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t rows() const noexcept { return parts_.size(); }
  int weight() const noexcept;
  /// Row length, 0 past the last row (0-based row index).
  int part(std::size_t row) const noexcept { return row < parts_.size() ? parts_[row] : 0; }
  /// Column lengths (the conjugate partition).
  Partition conjugate() const;

  /// "(3,2,1)"; the empty partition prints as "()".
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

/// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

struct StandardTableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  /// Rows and columns strictly increase and the entries are exactly 1..n.
  bool is_standard() const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

/// One row per line, entries separated by single spaces.
std::string format_tableau(const StandardTableau& t);

struct TableauPair {
  StandardTableau insertion; // P
  StandardTableau recording; // Q
};

/// Robinson-Schensted row insertion of perm(1), ..., perm(n).
TableauPair rsk(const Permutation& perm);

Partition shape(const Permutation& perm);

/// Longest decreasing subsequence, by an O(n^2) dynamic program.
std::size_t longest_decreasing(const Permutation& perm);

/// Length of the longest subsequence with no decreasing subsequence of
/// length k (i.e. avoiding k...21), found by pruned subset search without
/// reference to RSK. Requires k >= 2 and n <= 16.
std::size_t longest_k21_avoiding(const Permutation& perm, unsigned k);

/// Shape is (k), (k,l) or (k,l,1).
bool shape_membership_321p1(const Partition& lambda);
bool shape_membership_321p1(const Permutation& perm);

/// Every SYT of shape lambda, by backtracking placement of 1..n.
/// Throws cap_exceeded when the weight exceeds 12.
std::vector<StandardTableau> enumerate_syt(const Partition& lambda);

inline constexpr int kMaxSytEnumerationWeight = 12;

} // namespace permlab
