#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/enumeration.hpp"
#include "permlab/numeric.hpp"

namespace permlab {

/// Integer polynomial, coefficients lowest degree first. Trailing zeros are
/// allowed; an empty vector is the zero polynomial.
using Polynomial = std::vector<Integer>;

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_pow(const Polynomial& a, unsigned e);
/// Drops trailing zero coefficients.
Polynomial poly_trim(Polynomial p);
std::string poly_to_string(const Polynomial& p);

/// Raised when a division would need negative powers of x.
class valuation_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Power series over Q known exactly through x^order.
///
/// Binary operations yield the smaller of the two orders; `shifted(k)`
/// (multiplication by x^k) raises the order by k and `derivative()` lowers it
/// by one.
class TruncatedSeries {
public:
  explicit TruncatedSeries(std::size_t order = 0);
  explicit TruncatedSeries(std::vector<Rational> coefficients);

  static TruncatedSeries constant(const Rational& c, std::size_t order);
  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const;
  TruncatedSeries shifted(std::size_t k) const;
  TruncatedSeries derivative() const;
  /// Index of the first nonzero coefficient, or order()+1 when all vanish.
  std::size_t valuation() const;

  bool is_integral() const;
  /// Coefficients as integers; throws std::domain_error if any is fractional.
  std::vector<Integer> integers() const;

  TruncatedSeries& operator+=(const TruncatedSeries& b);
  TruncatedSeries& operator-=(const TruncatedSeries& b);
  TruncatedSeries& operator*=(const Rational& k);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& k) { return a *= k; }
  friend TruncatedSeries operator*(const Rational& k, TruncatedSeries a) { return a *= k; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Divides, cancelling a leading x^v of the divisor against the dividend.
  /// Throws valuation_error when the dividend's first v coefficients are not zero.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

  /// Equal coefficients through min(order(), b.order()).
  bool agrees_with(const TruncatedSeries& b) const;
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// "n: coefficient" per line.
  std::string to_lines() const;
  /// "n,coefficient" with a header row.
  std::string to_csv() const;

private:
  std::vector<Rational> coeffs_;
};

/// The series s with s^2 = 1 - 4x and s(0) = 1, by coefficient matching.
TruncatedSeries sqrt_1m4x(std::size_t order);

/// (1 - s) / (2x): the Catalan numbers.
TruncatedSeries catalan_gf(std::size_t order);

/// (A + B s) / (D s^k) where s = sqrt(1 - 4x).
struct AlgebraicGF {
  Polynomial a;
  Polynomial b;
  Polynomial d;
  unsigned denominator_s_power = 0;

  /// Same function written as (A' + B' s) / D' with polynomial D' and the
  /// common polynomial factor of A', B', D' removed. Integer content is made
  /// primitive and D' gets a positive leading (lowest-degree) coefficient.
  AlgebraicGF normalized() const;

  /// "(A; B; D)" or "(A; B; D; k)", each polynomial a comma list of integer
  /// coefficients, lowest degree first.
  std::string to_string() const;
  static AlgebraicGF parse(std::string_view text);

  friend bool operator==(const AlgebraicGF&, const AlgebraicGF&) = default;
};

TruncatedSeries expand_algebraic(const AlgebraicGF& g, std::size_t order);

/// The closed form conjectured for Av(321)^{+1}:
/// (1-8x+13x^2+24x^3-48x^4 - (1-6x+x^2+34x^3-26x^4-4x^5) s) / (2x^2 (1-x) (1-4x)^2).
AlgebraicGF gf_321p1_conjectured();

/// The generating function of Av(231)^{+1}:
/// (1-5x-6x^2+45x^3-24x^4 - (1+x-4x^2+x^3)(1-4x)^{3/2}) / (-2x^2 (1-4x)^{3/2}).
AlgebraicGF gf_231p1();

/// Solves f = c + 2xc(f - c) + (remaining structural terms) for f.
TruncatedSeries solve_functional_equation_231(std::size_t order);

/// The generating function attached to each structural subset of
/// Av(231)^{+1} (the essential-entry variants all share one).
TruncatedSeries structural_gf(StructuralPredicateId id, std::size_t order);

inline constexpr std::size_t kDefaultSeriesOrder = 30;

} // namespace permlab
