#include <doctest.h>

#include "oracles.hpp"
#include "permlab/machines.hpp"
#include "permlab/patterns.hpp"
#include "permlab/symmetric_group.hpp"

using namespace permlab;

namespace {

const std::vector<Permutation> b231{patterns::p231};

bool has_large_essential(const Permutation& p) {
  for (auto pos : essential_positions(p))
    if (classify_essential(p, pos) == EssentialClass::LargeEssential) return true;
  return false;
}

} // namespace

TEST_CASE("names and moves") {
  CHECK(parse_machine_kind("stack") == MachineKind::Stack);
  CHECK(parse_machine_kind("queues2") == MachineKind::TwoParallelQueues);
  CHECK_FALSE(parse_machine_kind("deque").has_value());
  CHECK(std::string(to_string(MachineKind::TwoParallelQueues)) == "queues2");
  CHECK(Move{MoveKind::Push}.to_string() == "PUSH");
  CHECK(Move{MoveKind::Deq2}.to_string() == "DEQ2");
  CHECK(Move{MoveKind::BufIn, 1}.to_string() == "BUF_IN 1");
  CHECK(Move{MoveKind::BufOut, 2}.to_string() == "BUF_OUT 2");
}

TEST_CASE("sorting examples") {
  CHECK_FALSE(sortable(patterns::p231, MachineKind::Stack, 0));
  CHECK_FALSE(sortable(patterns::p321, MachineKind::TwoParallelQueues, 0));
  CHECK(sortable(patterns::p4321, MachineKind::Stack, 1));
  CHECK(sortable(patterns::p4321, MachineKind::Stack, 0));
  CHECK(sortable(patterns::p231, MachineKind::Stack, 1));
  CHECK(sortable(patterns::p321, MachineKind::TwoParallelQueues, 1));
  CHECK(sortable(Permutation{}, MachineKind::Stack, 0));
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(sortable(Permutation::identity(11), MachineKind::Stack, 0), cap_exceeded);
  CHECK_THROWS_AS(sortable(Permutation{1}, MachineKind::Stack, 4), cap_exceeded);
  CHECK_THROWS_AS(sortability_class_count(MachineKind::Stack, 0, 9), cap_exceeded);
}

TEST_CASE("witnesses replay and forged runs are rejected") {
  for (auto machine : {MachineKind::Stack, MachineKind::TwoParallelQueues})
    for (unsigned t = 0; t <= 2; ++t)
      for_each_permutation(6, [&](const Permutation& p) {
        const auto out = sort_with_machine(p, machine, t);
        if (out.sortable) REQUIRE(replay_sort(p, machine, t, out.witness));
        else REQUIRE(out.witness.empty());
      });
  const Permutation p{2, 1};
  CHECK(replay_sort(p, MachineKind::Stack, 0, {{MoveKind::Push}, {MoveKind::Push}, {MoveKind::Pop}, {MoveKind::Pop}}));
  CHECK_FALSE(replay_sort(p, MachineKind::Stack, 0, {{MoveKind::Push}, {MoveKind::Pop}, {MoveKind::Push}, {MoveKind::Pop}}));
  CHECK_FALSE(replay_sort(p, MachineKind::Stack, 0, {{MoveKind::Push}, {MoveKind::Push}, {MoveKind::Pop}}));
  CHECK_FALSE(replay_sort(p, MachineKind::Stack, 0, {{MoveKind::BufIn, 1}, {MoveKind::Push}, {MoveKind::Pop}, {MoveKind::BufOut, 1}}));
  CHECK(replay_sort(p, MachineKind::Stack, 1, {{MoveKind::BufIn, 1}, {MoveKind::Push}, {MoveKind::Pop}, {MoveKind::BufOut, 1}}));
  CHECK_FALSE(replay_sort(p, MachineKind::Stack, 0, {{MoveKind::Enq1}, {MoveKind::Push}, {MoveKind::Pop}, {MoveKind::Deq1}}));
}

TEST_CASE("a stack sorts exactly the 231-avoiders") {
  for (unsigned n = 0; n <= 8; ++n)
    for_each_permutation(n, [&](const Permutation& p) {
      const bool s = sortable(p, MachineKind::Stack, 0);
      REQUIRE(s == oracle::greedy_stack_sortable(p.vector()));
      REQUIRE(s == avoids_all(p, b231));
    });
}

TEST_CASE("two parallel queues sort exactly the 321-avoiders") {
  for (unsigned n = 0; n <= 8; ++n)
    for_each_permutation(n, [&](const Permutation& p) {
      REQUIRE(sortable(p, MachineKind::TwoParallelQueues, 0) == (oracle::longest_decreasing(p.vector()) < 3));
    });
}

TEST_CASE("queues with buffers sort exactly Av(321)+t") {
  for (unsigned t = 1; t <= 2; ++t)
    for (int n = 0; n <= 6; ++n)
      for (const auto& s : oracle::all_perms(n))
        REQUIRE(sortable(oracle::perm(s), MachineKind::TwoParallelQueues, t) == oracle::member(s, {{3, 2, 1}}, t));
}

// With an input-side buffer the stack reaches strictly less than Av(231)+1:
// the buffered entry must be one no later stack content blocks.
TEST_CASE("stack with one buffer: avoiders plus permutations with a large essential entry") {
  CHECK_FALSE(sortable(Permutation{2, 3, 4, 1}, MachineKind::Stack, 1));
  CHECK(is_member_plus_t(Permutation{2, 3, 4, 1}, b231, 1));
  for (unsigned n = 0; n <= 7; ++n)
    for_each_permutation(n, [&](const Permutation& p) {
      const bool expected = avoids_all(p, b231) || has_large_essential(p);
      REQUIRE(sortable(p, MachineKind::Stack, 1) == expected);
    });
}

TEST_CASE("extra buffers never hurt") {
  for (auto machine : {MachineKind::Stack, MachineKind::TwoParallelQueues})
    for (unsigned n = 0; n <= 6; ++n)
      for_each_permutation(n, [&](const Permutation& p) {
        for (unsigned t = 0; t < kMaxBuffers; ++t)
          if (sortable(p, machine, t)) REQUIRE(sortable(p, machine, t + 1));
      });
}

TEST_CASE("sortable class sizes") {
  for (unsigned n = 0; n <= 7; ++n) {
    CHECK(Integer(sortability_class_count(MachineKind::Stack, 0, n)) == oracle::catalan(n));
    CHECK(Integer(sortability_class_count(MachineKind::TwoParallelQueues, 0, n)) == oracle::catalan(n));
  }
  const auto listed = sortability_class(MachineKind::Stack, 0, 4);
  CHECK(listed.size() == 14);
  CHECK(std::is_sorted(listed.begin(), listed.end()));
  CHECK(sortability_class_count(MachineKind::TwoParallelQueues, 1, 6, 1) ==
        sortability_class_count(MachineKind::TwoParallelQueues, 1, 6, 2));
}
