#include <doctest.h>

#include "oracles.hpp"
#include "permlab/enumeration.hpp"
#include "permlab/patterns.hpp"
#include "permlab/series.hpp"

using namespace permlab;

namespace {

TruncatedSeries x_series(std::size_t order) { return TruncatedSeries::from_polynomial({0, 1}, order); }

} // namespace

TEST_CASE("polynomial helpers") {
  CHECK(poly_mul({1, 1}, {1, -1}) == Polynomial{1, 0, -1});
  CHECK(poly_pow({1, -4}, 2) == Polynomial{1, -8, 16});
  CHECK(poly_pow({1, 2}, 0) == Polynomial{1});
  CHECK(poly_trim({1, 2, 0, 0}) == Polynomial{1, 2});
  CHECK(poly_trim({0, 0}).empty());
}

TEST_CASE("truncated arithmetic") {
  const auto a = TruncatedSeries::from_polynomial({1, 2, 3}, 5);
  const auto b = TruncatedSeries::from_polynomial({1, -1}, 3);
  CHECK((a + b).order() == 3);
  CHECK((a * b) == TruncatedSeries(std::vector<Rational>{1, 1, 1, -3}));
  CHECK(a.derivative() == TruncatedSeries(std::vector<Rational>{2, 6, 0, 0, 0}));
  CHECK(a.shifted(2).order() == 7);
  CHECK(a.shifted(2)[4] == 3);
  CHECK(((a * b) / b).agrees_with(a));
  CHECK((Rational(1, 2) * a)[1] == 1);
  CHECK(TruncatedSeries::constant(7, 3)[0] == 7);
  CHECK(TruncatedSeries(std::vector<Rational>{Rational(1, 2)}).is_integral() == false);
  CHECK_THROWS_AS(TruncatedSeries(std::vector<Rational>{Rational(1, 2)}).integers(), std::domain_error);
  CHECK(x_series(5).valuation() == 1);
  CHECK(TruncatedSeries(4).valuation() == 5);
}

TEST_CASE("division cancels a common power of x only") {
  const auto x = x_series(6);
  const auto x2 = x * x;
  CHECK((x2 / x).agrees_with(x));
  CHECK((x2 / x).order() == 5);
  CHECK_THROWS_AS(TruncatedSeries::constant(1, 6) / x, valuation_error);
  CHECK_THROWS_AS(x / TruncatedSeries(6), valuation_error);
}

TEST_CASE("derivative scales by the index") {
  const auto c = catalan_gf(12);
  const auto d = c.derivative();
  for (std::size_t n = 0; n < 12; ++n) REQUIRE(d[n] == Rational(n + 1) * c[n + 1]);
}

TEST_CASE("square root of 1 - 4x") {
  const auto s = sqrt_1m4x(30);
  CHECK(s[0] == 1);
  CHECK(s[1] == -2);
  CHECK(s.is_integral());
  CHECK((s * s) == TruncatedSeries::from_polynomial({1, -4}, 30));
  for (unsigned n = 1; n <= 30; ++n) REQUIRE(s[n] == Rational(-2 * oracle::catalan(n - 1)));
}

TEST_CASE("catalan generating function") {
  const auto c = catalan_gf(30);
  CHECK(c[0] == 1);
  CHECK(c[3] == 5);
  for (unsigned n = 0; n <= 30; ++n) REQUIRE(c[n] == Rational(catalan(n)));
  const auto s = sqrt_1m4x(31);
  CHECK(((TruncatedSeries::constant(1, 31) - s) / (x_series(31) * Rational(2))).agrees_with(c));
  CHECK((x_series(30) * c * Rational(2)).agrees_with(TruncatedSeries::constant(1, 30) - s));
  // c = 1 + x c^2
  CHECK((TruncatedSeries::constant(1, 30) + (x_series(30) * c * c)).agrees_with(c));
}

TEST_CASE("closed form for Av(231)+1") {
  const auto f = expand_algebraic(gf_231p1(), 30);
  REQUIRE(f.order() == 30);
  const std::vector<int> low{1, 1, 2, 6, 24};
  for (std::size_t n = 0; n < low.size(); ++n) CHECK(f[n] == low[n]);
  CHECK(f.agrees_with(solve_functional_equation_231(30)));
  CHECK(solve_functional_equation_231(30).order() == 30);
  const std::vector<Permutation> b231{patterns::p231};
  for (unsigned n = 0; n <= 8; ++n) REQUIRE(f[n] == Rational(count_bruteforce(n, b231, 1)));
  for (const auto& c : f.coefficients()) REQUIRE((denominator(c) == 1 && c >= 0));
}

TEST_CASE("conjectured closed form for Av(321)+1") {
  const auto g = expand_algebraic(gf_321p1_conjectured(), 25);
  for (unsigned n = 0; n <= 25; ++n) REQUIRE(g[n] == Rational(count_321p1_formula(n)));
  for (const auto& c : expand_algebraic(gf_321p1_conjectured(), 30).coefficients())
    REQUIRE((denominator(c) == 1 && c >= 0));
}

TEST_CASE("structural terms add up to the whole class") {
  using enum StructuralPredicateId;
  const std::size_t order = 30;
  auto sum = catalan_gf(order) + structural_gf(NoGreatestIn231, order) + structural_gf(EssentialGreatest, order) +
             structural_gf(SmallEssentialCase, order) + structural_gf(LargeEssentialCase, order);
  CHECK(sum.agrees_with(solve_functional_equation_231(order)));
  CHECK(structural_gf(EssentialGreatest, order) == structural_gf(EssentialLeast, order));
  CHECK(structural_gf(EssentialLeftmost, order) == structural_gf(EssentialRightmost, order));
}

TEST_CASE("algebraic GF text form") {
  const auto g = gf_231p1();
  CHECK(AlgebraicGF::parse(g.to_string()) == g);
  const auto h = AlgebraicGF::parse("(1; -1; 0, 2)");
  CHECK(expand_algebraic(h, 20).agrees_with(catalan_gf(20)));
  CHECK(AlgebraicGF::parse(" ( 1 ; -1 ; 0,2 ; 0 ) ") == h);
  CHECK_THROWS_AS(AlgebraicGF::parse("(1; 2)"), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraicGF::parse("(1; x; 1)"), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraicGF::parse("(1; 1; )"), std::invalid_argument);
}

TEST_CASE("normalization keeps the function") {
  for (const auto& g : {gf_231p1(), gf_321p1_conjectured()}) {
    const auto n = g.normalized();
    CHECK(n.denominator_s_power == 0);
    CHECK(expand_algebraic(n, 25).agrees_with(expand_algebraic(g, 25)));
    CHECK(n.normalized() == n);
  }
  const AlgebraicGF scaled{{2, -2}, {}, {2, -2}};
  CHECK(scaled.normalized() == AlgebraicGF{{1}, {}, {1}});
}

TEST_CASE("a zero divisor is rejected") {
  CHECK_THROWS(expand_algebraic(AlgebraicGF{{1}, {}, {}}, 5));
}
