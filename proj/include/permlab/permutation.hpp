#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permlab {

/// A permutation of 1..n in one-line notation.
///
/// Positions and values are 1-based, so `at(1)` is the first entry. The
/// empty permutation (n = 0) is valid. Construction from a raw sequence
/// validates that it is a bijection onto 1..n.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  /// Skips validation; the caller guarantees `values` is a bijection onto 1..n.
  static Permutation from_trusted(std::vector<int> values);

  static Permutation identity(std::size_t n);
  static Permutation decreasing(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }

  int at(std::size_t position) const;
  std::span<const int> values() const noexcept { return values_; }
  const std::vector<int>& vector() const noexcept { return values_; }

  /// 1-based position of each value: inverse()[v - 1] is where v sits.
  Permutation inverse() const;

  /// Comma-separated canonical form, e.g. "4,9,1,8,6,7,5,3,2".
  std::string to_string() const;
  /// Digit string form; only meaningful for n <= 9.
  std::string to_compact_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Parses either a compact digit string ("491867532", n <= 9) or integers
/// separated by whitespace and/or commas ("3 1 4 2", "3,1,4,2").
Permutation parse_permutation(std::string_view text);

/// Parses a list of permutations separated by ';' or '/' or whitespace
/// between compact forms, e.g. "321" or "4321;321654" or "123,2143" when
/// every entry is compact.
std::vector<Permutation> parse_permutation_list(std::string_view text);

/// Relabels an arbitrary sequence of distinct integers to 1..k preserving
/// relative order.
std::vector<int> standardize(std::span<const int> seq);

/// Removes the entry at 1-based `position` and relabels the remainder.
Permutation delete_entry(const Permutation& host, std::size_t position);

/// Inserts a new entry of value `value` (1..n+1) before 1-based `position`
/// (1..n+1), shifting existing values >= value up by one.
Permutation insert_entry(const Permutation& host, std::size_t position, int value);

} // namespace permlab

template <>
struct std::hash<permlab::Permutation> {
  std::size_t operator()(const permlab::Permutation& p) const noexcept;
};
