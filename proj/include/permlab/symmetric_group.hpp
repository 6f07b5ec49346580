#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "permlab/parallel.hpp"
#include "permlab/permutation.hpp"

namespace permlab {

std::uint64_t factorial_u64(unsigned n);

/// The permutation of rank `rank` (0-based) in lexicographic order of S_n.
std::vector<int> unrank_lexicographic(unsigned n, std::uint64_t rank);

/// Lexicographic rank of `perm` within S_n.
std::uint64_t rank_lexicographic(std::span<const int> perm);

/// Visits every permutation of S_n in lexicographic order with ranks in
/// [first, last).
template <class Fn>
void for_each_permutation_in_range(unsigned n, std::uint64_t first, std::uint64_t last, Fn&& fn) {
  if (first >= last) return;
  auto values = unrank_lexicographic(n, first);
  for (std::uint64_t r = first; r < last; ++r) {
    fn(Permutation::from_trusted(values));
    std::next_permutation(values.begin(), values.end());
  }
}

template <class Fn>
void for_each_permutation(unsigned n, Fn&& fn) {
  for_each_permutation_in_range(n, 0, factorial_u64(n), std::forward<Fn>(fn));
}

/// Partitions S_n into contiguous rank ranges, one per worker, and folds
/// each range into its own accumulator with `step(acc, perm)`. Partial
/// results are merged in rank order with `merge(total, part)`.
template <class Acc, class Step, class Merge>
Acc reduce_permutations(unsigned n, unsigned jobs, Acc init, Step step, Merge merge) {
  const std::uint64_t total = factorial_u64(n);
  const unsigned workers = static_cast<unsigned>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs ? jobs : default_jobs(), total)));
  std::vector<Acc> parts(workers, init);
  parallel_chunks(total, workers, [&](unsigned w, std::uint64_t first, std::uint64_t last) {
    for_each_permutation_in_range(n, first, last, [&](const Permutation& p) { step(parts[w], p); });
  });
  Acc acc = init;
  for (auto& part : parts) merge(acc, part);
  return acc;
}

/// Number of permutations in S_n satisfying `pred`.
template <class Pred>
std::uint64_t count_permutations(unsigned n, unsigned jobs, Pred pred) {
  return reduce_permutations<std::uint64_t>(
      n, jobs, 0,
      [&](std::uint64_t& acc, const Permutation& p) {
        if (pred(p)) ++acc;
      },
      [](std::uint64_t& a, const std::uint64_t& b) { a += b; });
}

/// All permutations in S_n satisfying `pred`, in lexicographic order.
template <class Pred>
std::vector<Permutation> collect_permutations(unsigned n, unsigned jobs, Pred pred) {
  return reduce_permutations<std::vector<Permutation>>(
      n, jobs, {},
      [&](std::vector<Permutation>& acc, const Permutation& p) {
        if (pred(p)) acc.push_back(p);
      },
      [](std::vector<Permutation>& a, std::vector<Permutation>& b) {
        a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
      });
}

} // namespace permlab
