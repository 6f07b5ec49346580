#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "permlab/enumeration.hpp"
#include "permlab/patterns.hpp"
#include "permlab/rsk.hpp"
#include "permlab/symmetric_group.hpp"

using namespace permlab;

TEST_CASE("partitions") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition{3, 2, 1}.to_string() == "(3,2,1)");
  CHECK(Partition{}.to_string() == "()");
  CHECK(Partition{4, 2}.weight() == 6);
  CHECK(Partition{4, 2}.part(5) == 0);
  const std::vector<std::size_t> p_of_n{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == p_of_n[n]);
  CHECK(partitions_of(3).front() == Partition{3});
}

TEST_CASE("rsk examples") {
  const auto id = rsk(Permutation::identity(5));
  CHECK(id.insertion.rows == std::vector<std::vector<int>>{{1, 2, 3, 4, 5}});
  CHECK(id.recording == id.insertion);
  CHECK(shape(Permutation::decreasing(5)) == Partition{1, 1, 1, 1, 1});
  CHECK(shape(patterns::p231) == Partition{2, 1});
  const auto t = rsk(patterns::p231);
  CHECK(t.insertion.rows == std::vector<std::vector<int>>{{1, 3}, {2}});
  CHECK(t.recording.rows == std::vector<std::vector<int>>{{1, 2}, {3}});
  CHECK(shape(parse_permutation("321654")) == Partition{2, 2, 2});
  CHECK(shape(Permutation{1, 2}) == Partition{2});
  CHECK(shape(Permutation{2, 1}) == Partition{1, 1});
  CHECK(shape(Permutation{}).rows() == 0);
  CHECK(format_tableau(t.insertion) == "1 3\n2\n");
}

TEST_CASE("rsk yields same-shape standard tableaux and is injective") {
  for (unsigned n = 0; n <= 7; ++n) {
    std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> pairs;
    for_each_permutation(n, [&](const Permutation& p) {
      const auto tp = rsk(p);
      REQUIRE(tp.insertion.is_standard());
      REQUIRE(tp.recording.is_standard());
      REQUIRE(tp.insertion.shape() == tp.recording.shape());
      REQUIRE(tp.insertion.shape().weight() == static_cast<int>(n));
      pairs.emplace(tp.insertion.rows, tp.recording.rows);
    });
    REQUIRE(pairs.size() == factorial_u64(n));
  }
}

TEST_CASE("inverse permutation swaps the tableaux") {
  for_each_permutation(6, [&](const Permutation& p) {
    const auto a = rsk(p), b = rsk(p.inverse());
    REQUIRE(a.insertion == b.recording);
    REQUIRE(a.recording == b.insertion);
  });
}

TEST_CASE("longest decreasing") {
  CHECK(longest_decreasing(patterns::p4321) == 4);
  CHECK(longest_decreasing(Permutation{1, 2, 3}) == 1);
  CHECK(longest_decreasing(Permutation{}) == 0);
  const auto big = parse_permutation("491867532");
  CHECK(longest_decreasing(big) == shape(big).rows());
  CHECK(longest_decreasing(big) == oracle::longest_decreasing(big.vector()));
}

TEST_CASE("shape rows and columns match monotone subsequences") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& s : oracle::all_perms(n)) {
      const auto p = oracle::perm(s);
      const auto lambda = shape(p);
      REQUIRE(longest_decreasing(p) == oracle::longest_decreasing(s));
      REQUIRE(lambda.rows() == oracle::longest_decreasing(s));
      REQUIRE(static_cast<std::size_t>(lambda.part(0)) == oracle::longest_increasing(s));
    }
}

TEST_CASE("longest k..21 avoiding subsequence") {
  CHECK(longest_k21_avoiding(patterns::p4321, 2) == 1);
  CHECK(longest_k21_avoiding(parse_permutation("321654"), 3) == 4);
  CHECK(longest_k21_avoiding(Permutation{1, 2, 3}, 4) == 3);
  CHECK_THROWS_AS(longest_k21_avoiding(Permutation{1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(longest_k21_avoiding(Permutation::identity(17), 2), cap_exceeded);
}

TEST_CASE("Greene: the first k-1 rows measure the longest k..21-avoider") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& s : oracle::all_perms(n)) {
      const auto p = oracle::perm(s);
      const auto lambda = shape(p);
      int prefix = 0;
      for (unsigned k = 2; k <= 4; ++k) {
        prefix += lambda.part(k - 2);
        const auto got = longest_k21_avoiding(p, k);
        REQUIRE(got == static_cast<std::size_t>(prefix));
        if (n <= 6) REQUIRE(got == oracle::longest_without_decreasing(s, k));
      }
    }
}

TEST_CASE("shape membership examples") {
  CHECK(shape_membership_321p1(patterns::p321));
  CHECK_FALSE(shape_membership_321p1(patterns::p4321));
  CHECK_FALSE(shape_membership_321p1(parse_permutation("321654")));
  CHECK(shape_membership_321p1(Partition{}));
  CHECK(shape_membership_321p1(Partition{4, 4, 1}));
  CHECK_FALSE(shape_membership_321p1(Partition{4, 4, 2}));
}

TEST_CASE("shape membership matches deletion membership") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& s : oracle::all_perms(n))
      REQUIRE(shape_membership_321p1(oracle::perm(s)) == oracle::member(s, {{3, 2, 1}}, 1));
}

TEST_CASE("SYT enumeration") {
  CHECK(enumerate_syt(Partition{5}).size() == 1);
  CHECK(enumerate_syt(Partition{1, 1, 1}).size() == 1);
  CHECK(enumerate_syt(Partition{2, 1, 1}).size() == 3);
  CHECK(enumerate_syt(Partition{}).size() == 1);
  CHECK_THROWS_AS(enumerate_syt(Partition{13}), cap_exceeded);
  for (int n = 0; n <= 9; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto all = enumerate_syt(lambda);
      REQUIRE(Integer(all.size()) == oracle::syt_count(lambda.parts()));
      std::set<std::vector<std::vector<int>>> distinct;
      for (const auto& t : all) {
        REQUIRE(t.is_standard());
        REQUIRE(t.shape() == lambda);
        distinct.insert(t.rows);
      }
      REQUIRE(distinct.size() == all.size());
    }
}

TEST_CASE("squared tableau counts sum to n!") {
  for (int n = 0; n <= 10; ++n) {
    Integer total = 0;
    for (const auto& lambda : partitions_of(n)) total += hook_length_count(lambda) * hook_length_count(lambda);
    REQUIRE(total == factorial(n));
  }
}
