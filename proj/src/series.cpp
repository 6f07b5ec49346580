#include "permlab/series.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace permlab {

namespace {

using RationalPoly = std::vector<Rational>;

RationalPoly trim(RationalPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

RationalPoly to_rational(const Polynomial& p) { return trim(RationalPoly(p.begin(), p.end())); }

// Remainder and quotient of a / b over Q; b must be nonzero.
std::pair<RationalPoly, RationalPoly> poly_divmod(RationalPoly a, const RationalPoly& b) {
  a = trim(std::move(a));
  RationalPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a = trim(std::move(a));
  }
  return {trim(std::move(q)), a};
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Polynomial exact_integer_poly(const RationalPoly& p) {
  Polynomial out;
  for (const auto& c : p) {
    if (denominator(c) != 1) throw std::logic_error("polynomial coefficient is not integral");
    out.push_back(numerator(c));
  }
  return out;
}

std::string trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

Polynomial parse_polynomial(std::string_view text) {
  Polynomial out;
  const std::string t = trim_view(text);
  if (t.empty()) return out;
  std::stringstream ss(t);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token = trim_view(token);
    if (token.empty()) throw std::invalid_argument("empty polynomial coefficient");
    const std::size_t sign = (token[0] == '-' || token[0] == '+') ? 1 : 0;
    const bool ok = token.size() > sign &&
                    std::all_of(token.begin() + static_cast<std::ptrdiff_t>(sign), token.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!ok) throw std::invalid_argument("malformed polynomial coefficient '" + token + "'");
    out.emplace_back(token[0] == '+' ? token.substr(1) : token);
  }
  return out;
}

const Polynomial kOneMinus4x{1, -4};

} // namespace

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Polynomial poly_pow(const Polynomial& a, unsigned e) {
  Polynomial out{1};
  for (unsigned i = 0; i < e; ++i) out = poly_mul(out, a);
  return out;
}

Polynomial poly_trim(Polynomial p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::string poly_to_string(const Polynomial& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += p[i].str();
  }
  return out;
}

// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  TruncatedSeries s(order);
  for (std::size_t i = 0; i < p.size() && i <= order; ++i) s.coeffs_[i] = Rational(p[i]);
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
  std::vector<Rational> out(k, Rational(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return TruncatedSeries(std::move(out));
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) throw std::invalid_argument("derivative of an order-0 series is unknown");
  std::vector<Rational> out(order());
  for (std::size_t i = 1; i <= order(); ++i) out[i - 1] = coeffs_[i] * static_cast<long long>(i);
  return TruncatedSeries(std::move(out));
}

std::size_t TruncatedSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return coeffs_.size();
}

bool TruncatedSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return denominator(c) == 1; });
}

std::vector<Integer> TruncatedSeries::integers() const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (denominator(c) != 1) throw std::domain_error("series coefficient " + to_string(c) + " is not an integer");
    out.push_back(numerator(c));
  }
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& b) {
  coeffs_.resize(std::min(coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& b) {
  coeffs_.resize(std::min(coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  TruncatedSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t v = b.valuation();
  const std::size_t order = std::min(a.order(), b.order());
  if (v > order) throw valuation_error("division by a series that vanishes to its truncation order");
  for (std::size_t i = 0; i < v; ++i) {
    if (a.coeffs_[i] != 0) {
      throw valuation_error("dividend has a nonzero x^" + std::to_string(i) +
                            " coefficient but the divisor starts at x^" + std::to_string(v));
    }
  }
  const std::size_t out_order = order - v;
  TruncatedSeries out(out_order);
  const Rational& lead = b.coeffs_[v];
  for (std::size_t n = 0; n <= out_order; ++n) {
    Rational acc = a.coeffs_[n + v];
    for (std::size_t i = 1; i <= n; ++i) acc -= b.coeffs_[v + i] * out.coeffs_[n - i];
    out.coeffs_[n] = acc / lead;
  }
  return out;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& b) const {
  const std::size_t order = std::min(this->order(), b.order());
  for (std::size_t i = 0; i <= order; ++i) {
    if (coeffs_[i] != b.coeffs_[i]) return false;
  }
  return true;
}

std::string TruncatedSeries::to_lines() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out += std::to_string(i) + ": " + to_string(coeffs_[i]) + "\n";
  return out;
}

std::string TruncatedSeries::to_csv() const {
  std::string out = "n,coefficient\n";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out += std::to_string(i) + "," + to_string(coeffs_[i]) + "\n";
  return out;
}

// ---------------------------------------------------------------------------

TruncatedSeries sqrt_1m4x(std::size_t order) {
  const auto target = TruncatedSeries::from_polynomial(kOneMinus4x, order);
  TruncatedSeries s(order);
  s[0] = 1;
  // Matching x^n in s^2: 2 s_0 s_n + sum_{i=1}^{n-1} s_i s_{n-i} = target_n.
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = target[n];
    for (std::size_t i = 1; i < n; ++i) acc -= s[i] * s[n - i];
    s[n] = acc / 2;
  }
  return s;
}

TruncatedSeries catalan_gf(std::size_t order) {
  const auto s = sqrt_1m4x(order + 1);
  const auto one = TruncatedSeries::constant(1, order + 1);
  const auto two_x = TruncatedSeries::from_polynomial({0, 2}, order + 1);
  return (one - s) / two_x;
}

// ---------------------------------------------------------------------------

AlgebraicGF AlgebraicGF::normalized() const {
  // Fold D s^k into a polynomial denominator: 1/s = s/(1-4x).
  Polynomial na = a, nb = b, nd = d;
  const unsigned k = denominator_s_power;
  if (k % 2 == 1) {
    na = poly_mul(b, kOneMinus4x);
    nb = a;
    nd = poly_mul(d, poly_pow(kOneMinus4x, (k + 1) / 2));
  } else {
    nd = poly_mul(d, poly_pow(kOneMinus4x, k / 2));
  }
  auto ra = to_rational(na), rb = to_rational(nb), rd = to_rational(nd);
  if (rd.empty()) throw std::invalid_argument("denominator is identically zero");

  auto g = poly_gcd(poly_gcd(ra, rb), rd);
  if (g.empty()) g = {Rational(1)};
  ra = poly_divmod(ra, g).first;
  rb = poly_divmod(rb, g).first;
  rd = poly_divmod(rd, g).first;

  // Clear denominators and remove the integer content.
  Integer lcm = 1, content = 0;
  for (const auto* p : {&ra, &rb, &rd}) {
    for (const auto& c : *p) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  }
  for (auto* p : {&ra, &rb, &rd}) {
    for (auto& c : *p) {
      c *= Rational(lcm);
      content = boost::multiprecision::gcd(content, numerator(c));
    }
  }
  Rational scale(1, content);
  const auto lowest = std::find_if(rd.begin(), rd.end(), [](const Rational& c) { return c != 0; });
  if (*lowest < 0) scale = -scale;
  for (auto* p : {&ra, &rb, &rd}) {
    for (auto& c : *p) c *= scale;
  }
  return AlgebraicGF{exact_integer_poly(ra), exact_integer_poly(rb), exact_integer_poly(rd), 0};
}

std::string AlgebraicGF::to_string() const {
  std::string out = "(" + poly_to_string(a) + "; " + poly_to_string(b) + "; " + poly_to_string(d);
  if (denominator_s_power) out += "; " + std::to_string(denominator_s_power);
  return out + ")";
}

AlgebraicGF AlgebraicGF::parse(std::string_view text) {
  std::string t = trim_view(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') {
    throw std::invalid_argument("algebraic GF must look like (A; B; D) or (A; B; D; k)");
  }
  t = t.substr(1, t.size() - 2);
  std::vector<std::string> fields;
  std::stringstream ss(t);
  std::string field;
  while (std::getline(ss, field, ';')) fields.push_back(field);
  if (!t.empty() && t.back() == ';') fields.emplace_back();
  if (fields.size() != 3 && fields.size() != 4) {
    throw std::invalid_argument("algebraic GF needs 3 or 4 ';'-separated fields");
  }
  AlgebraicGF g{parse_polynomial(fields[0]), parse_polynomial(fields[1]), parse_polynomial(fields[2]), 0};
  if (fields.size() == 4) {
    const std::string k = trim_view(fields[3]);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(k.data(), k.data() + k.size(), value);
    if (ec != std::errc{} || ptr != k.data() + k.size()) {
      throw std::invalid_argument("malformed s-power '" + k + "'");
    }
    g.denominator_s_power = value;
  }
  if (poly_trim(g.d).empty()) throw std::invalid_argument("denominator is identically zero");
  return g;
}

TruncatedSeries expand_algebraic(const AlgebraicGF& g, std::size_t order) {
  // Work with the polynomial-denominator form; (1-4x)^{3/2} becomes (1-4x) s.
  Polynomial a = g.a, b = g.b, d = g.d;
  const unsigned k = g.denominator_s_power;
  if (k % 2 == 1) {
    a = poly_mul(g.b, kOneMinus4x);
    b = g.a;
    d = poly_mul(g.d, poly_pow(kOneMinus4x, (k + 1) / 2));
  } else if (k > 0) {
    d = poly_mul(g.d, poly_pow(kOneMinus4x, k / 2));
  }
  d = poly_trim(std::move(d));
  if (d.empty()) throw std::invalid_argument("denominator is identically zero");
  std::size_t v = 0;
  while (d[v] == 0) ++v;

  const std::size_t work = order + v;
  const auto s = sqrt_1m4x(work);
  const auto numerator = TruncatedSeries::from_polynomial(a, work) + TruncatedSeries::from_polynomial(b, work) * s;
  return numerator / TruncatedSeries::from_polynomial(d, work);
}

AlgebraicGF gf_321p1_conjectured() {
  // 2x^2 (1-x) (1-4x)^2 = 2x^2 - 18x^3 + 48x^4 - 32x^5
  return AlgebraicGF{
      {1, -8, 13, 24, -48},
      {-1, 6, -1, -34, 26, 4},
      poly_mul({0, 0, 2}, poly_mul({1, -1}, poly_pow(kOneMinus4x, 2))),
      0,
  };
}

AlgebraicGF gf_231p1() {
  // Denominator -2x^2 (1-4x)^{3/2} = -2x^2 (1-4x) * s.
  return AlgebraicGF{
      {1, -5, -6, 45, -24},
      poly_mul({-1, -1, 4, -1}, kOneMinus4x),
      poly_mul({0, 0, -2}, kOneMinus4x),
      1,
  };
}

namespace {

// c, c' and the recurring building blocks, all exact through `order`.
struct CatalanTerms {
  TruncatedSeries c, dc, x, one;
  TruncatedSeries x_c, x2_dc, x2_c;
  TruncatedSeries essential_extreme; // x^2 c' + x c - c + 1

  explicit CatalanTerms(std::size_t order)
      : c(catalan_gf(order + 1).truncated(order + 1)),
        dc(c.derivative()),
        x(TruncatedSeries::from_polynomial({0, 1}, order)),
        one(TruncatedSeries::constant(1, order)),
        x_c(c.shifted(1).truncated(order)),
        x2_dc(dc.shifted(2).truncated(order)),
        x2_c(c.shifted(2).truncated(order)),
        essential_extreme(x2_dc + x_c - c.truncated(order) + one) {
    c = c.truncated(order);
  }

  TruncatedSeries small_case() const {
    return (x2_dc * x2_dc) + x_c * essential_extreme;
  }
  TruncatedSeries large_case() const {
    return x2_dc * essential_extreme + (x2_dc + x2_c - c + x + one) * (c - one);
  }
};

} // namespace

TruncatedSeries solve_functional_equation_231(std::size_t order) {
  const CatalanTerms t(order);
  // f = c + 2xc(f - c) + R  =>  f (1 - 2xc) = c - 2xc^2 + R.
  const auto rest = t.essential_extreme + t.small_case() + t.large_case();
  const auto two_xc = t.x_c * Rational(2);
  return (t.c - two_xc * t.c + rest) / (t.one - two_xc);
}

TruncatedSeries structural_gf(StructuralPredicateId id, std::size_t order) {
  const CatalanTerms t(order);
  switch (id) {
  case StructuralPredicateId::NoGreatestIn231: {
    const auto f = expand_algebraic(gf_231p1(), order);
    return (f - t.c) * t.x_c * Rational(2);
  }
  case StructuralPredicateId::EssentialGreatest:
  case StructuralPredicateId::EssentialLeftmost:
  case StructuralPredicateId::EssentialRightmost:
  case StructuralPredicateId::EssentialLeast: return t.essential_extreme;
  case StructuralPredicateId::SmallEssentialCase: return t.small_case();
  case StructuralPredicateId::LargeEssentialCase: return t.large_case();
  }
  throw std::invalid_argument("unknown structural predicate");
}

} // namespace permlab
