#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

enum class MachineKind { Stack, TwoParallelQueues };

const char* to_string(MachineKind kind);
/// Accepts "stack" and "queues2".
std::optional<MachineKind> parse_machine_kind(std::string_view name);

enum class MoveKind { Push, Pop, Enq1, Enq2, Deq1, Deq2, BufIn, BufOut };

struct Move {
  MoveKind kind;
  unsigned slot = 0; // 1-based buffer slot for BufIn/BufOut

  /// "PUSH", "DEQ2", "BUF_IN 1", ...
  std::string to_string() const;
  friend bool operator==(const Move&, const Move&) = default;
};

inline constexpr unsigned kMaxBuffers = 3;
inline constexpr unsigned kMaxSortLength = 10;
inline constexpr unsigned kMaxClassSweepLength = 8;

struct SortOutcome {
  bool sortable = false;
  /// One successful move sequence when sortable, empty otherwise.
  std::vector<Move> witness;
};

/// Decides whether `perm` can be output as 1..n by the machine working in
/// parallel with `buffers` one-time-use buffer slots.
///
/// Input is consumed left to right. The next input entry may enter the
/// machine (stack push, or either queue) or an unused empty buffer slot.
/// Any container exit (stack top, queue front) or occupied slot may emit,
/// but only the next value of the sorted output. A slot holds at most one
/// entry over the whole run. The search is a full DFS over configurations
/// with failing configurations memoized; the two queues are interchangeable
/// in the memo key.
///
/// Throws cap_exceeded when buffers > 3 or n > 10.
SortOutcome sort_with_machine(const Permutation& perm, MachineKind machine, unsigned buffers);

bool sortable(const Permutation& perm, MachineKind machine, unsigned buffers);

/// Replays `moves` on `perm` and checks that they form a valid sorting run.
bool replay_sort(const Permutation& perm, MachineKind machine, unsigned buffers,
                 const std::vector<Move>& moves);

/// Number of permutations in S_n the machine sorts. Throws cap_exceeded when n > 8.
std::uint64_t sortability_class_count(MachineKind machine, unsigned buffers, unsigned n, unsigned jobs = 0);
std::vector<Permutation> sortability_class(MachineKind machine, unsigned buffers, unsigned n, unsigned jobs = 0);

} // namespace permlab
