#include <doctest.h>

#include "oracles.hpp"
#include "permlab/enumeration.hpp"
#include "permlab/patterns.hpp"
#include "permlab/series.hpp"

using namespace permlab;
using oracle::Seq;

namespace {

const std::vector<Permutation> b231{patterns::p231};
const std::vector<Permutation> b321{patterns::p321};

// Direct reading of each structural subset, built on the naive oracles.
bool naive_structural(const Seq& s, StructuralPredicateId id) {
  const Seq p231{2, 3, 1};
  if (!oracle::member(s, {p231}, 1) || !oracle::contains(s, p231)) return false;
  const std::size_t n = s.size();
  const auto ess = oracle::essential(s);
  const auto is_ess = [&](std::size_t pos) { return std::find(ess.begin(), ess.end(), pos) != ess.end(); };
  const std::size_t greatest = std::find(s.begin(), s.end(), static_cast<int>(n)) - s.begin() + 1;
  const std::size_t least = std::find(s.begin(), s.end(), 1) - s.begin() + 1;
  bool greatest_in_231 = false;
  for (const auto& occ : oracle::occurrences(s, p231))
    greatest_in_231 |= std::find(occ.begin(), occ.end(), greatest) != occ.end();
  bool small = false, large = false;
  for (auto pos : ess) {
    const auto kind = oracle::classify(s, pos);
    small |= kind == "small";
    large |= kind == "large";
  }
  const bool rest = greatest_in_231 && !is_ess(greatest);
  switch (id) {
    case StructuralPredicateId::NoGreatestIn231: return !greatest_in_231;
    case StructuralPredicateId::EssentialGreatest: return is_ess(greatest);
    case StructuralPredicateId::EssentialLeftmost: return is_ess(1);
    case StructuralPredicateId::EssentialRightmost: return is_ess(n);
    case StructuralPredicateId::EssentialLeast: return is_ess(least);
    case StructuralPredicateId::SmallEssentialCase: return rest && small;
    case StructuralPredicateId::LargeEssentialCase: return rest && !small && large;
  }
  return false;
}

} // namespace

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  for (unsigned n = 0; n <= 40; ++n) REQUIRE(catalan(n) == oracle::catalan(n));
  CHECK(Integer(count_bruteforce(10, b231, 0)) == catalan(10));
}

TEST_CASE("hook length formula") {
  CHECK(hook_length_count(Partition{6}) == 1);
  CHECK(hook_length_count(Partition{2, 1, 1}) == 3);
  CHECK(hook_length_count(Partition{}) == 1);
  for (int n = 0; n <= 12; ++n)
    for (const auto& lambda : partitions_of(n)) REQUIRE(hook_length_count(lambda) == oracle::syt_count(lambda.parts()));
  for (int k = 1; k <= 8; ++k)
    for (int l = 1; l <= k; ++l) REQUIRE(hook_length_count_kl1(k, l) == hook_length_count(Partition{k, l, 1}));
}

TEST_CASE("closed form for Av(321)+1") {
  CHECK(count_321p1_formula(0) == 1);
  CHECK(count_321p1_formula(3) == 6);
  CHECK(count_321p1_formula(4) == 23);
  CHECK(count_321p1_formula(5) == 103);
  for (unsigned n = 0; n <= 30; ++n) REQUIRE(count_321p1_formula(n) == count_321p1_shape_sum(n));
  for (int n = 0; n <= 7; ++n) {
    std::uint64_t naive = 0;
    for (const auto& s : oracle::all_perms(n)) naive += oracle::member(s, {{3, 2, 1}}, 1);
    REQUIRE(count_321p1_formula(n) == naive);
  }
}

TEST_CASE("brute-force counts") {
  CHECK(count_bruteforce(4, b321, 1) == 23);
  CHECK(count_bruteforce(3, b231, 1) == 6);
  for (unsigned n = 0; n <= 9; ++n) REQUIRE(Integer(count_bruteforce(n, b231, 0)) == catalan(n));
  CHECK(count_bruteforce(7, b231, 1, 1) == count_bruteforce(7, b231, 1, 3));
  CHECK_THROWS_AS(count_bruteforce(11, b231, 1), cap_exceeded);
  CHECK_THROWS_AS(count_bruteforce(8, b231, 1, 0, 7), cap_exceeded);
}

TEST_CASE("Av(321)+1 stays below Av(231)+1 from n = 4") {
  for (unsigned n = 0; n <= 3; ++n) CHECK(count_bruteforce(n, b321, 1) == count_bruteforce(n, b231, 1));
  for (unsigned n = 4; n <= 8; ++n) CHECK(count_bruteforce(n, b321, 1) < count_bruteforce(n, b231, 1));
}

TEST_CASE("structural predicate names round-trip") {
  for (auto id : kAllStructuralPredicates) CHECK(parse_structural_predicate(to_string(id)) == id);
  CHECK_FALSE(parse_structural_predicate("nonsense").has_value());
}

TEST_CASE("structural predicates match a direct reading") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& s : oracle::all_perms(n))
      for (auto id : kAllStructuralPredicates) REQUIRE(structural_predicate(oracle::perm(s), id) == naive_structural(s, id));
}

TEST_CASE("structural counts equal generating function terms") {
  CHECK(count_structural(2, StructuralPredicateId::EssentialGreatest) == 0);
  CHECK(count_structural(3, StructuralPredicateId::EssentialGreatest) == 1);
  CHECK(count_structural(4, StructuralPredicateId::NoGreatestIn231) == 2);
  for (auto id : kAllStructuralPredicates) {
    const auto gf = structural_gf(id, 12);
    for (unsigned n = 0; n <= 8; ++n) REQUIRE(Integer(count_structural(n, id)) == numerator(gf[n]));
  }
  CHECK_THROWS_AS(count_structural(10, StructuralPredicateId::NoGreatestIn231), cap_exceeded);
}

TEST_CASE("count tables") {
  const CountTable t{"av_321_t1", 1, {1, 1, 2, 6, 23}};
  CHECK(t.to_csv() == "n,count\n0,1\n1,1\n2,2\n3,6\n4,23\n");
  CHECK(t.to_bfile() == "0 1\n1 1\n2 2\n3 6\n4 23\n");
}
