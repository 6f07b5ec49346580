#include "permlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "permlab/numeric.hpp"

namespace permlab {

namespace {

void validate_bijection(const std::vector<int>& values) {
  const auto n = values.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw std::invalid_argument("value " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
    }
    if (seen[v]) throw std::invalid_argument("duplicate value " + std::to_string(v));
    seen[v] = true;
  }
}

bool is_separator(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

} // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  validate_bijection(values_);
}

Permutation::Permutation(std::initializer_list<int> values) : values_(values) {
  validate_bijection(values_);
}

Permutation Permutation::from_trusted(std::vector<int> values) {
  Permutation p;
  p.values_ = std::move(values);
  return p;
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return from_trusted(std::move(v));
}

Permutation Permutation::decreasing(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
  return from_trusted(std::move(v));
}

int Permutation::at(std::size_t position) const {
  if (position < 1 || position > values_.size()) {
    throw std::out_of_range("position " + std::to_string(position) + " out of range 1.." +
                            std::to_string(values_.size()));
  }
  return values_[position - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) inv[values_[i] - 1] = static_cast<int>(i + 1);
  return from_trusted(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::string Permutation::to_compact_string() const {
  if (values_.size() > 9) return to_string();
  std::string out;
  for (int v : values_) out += static_cast<char>('0' + v);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  if (text.empty()) return {};

  const bool has_separator = std::any_of(text.begin(), text.end(), is_separator);
  std::vector<int> values;
  if (!has_separator) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument(std::string("unexpected character '") + c + "'");
      }
      values.push_back(c - '0');
    }
    if (values.size() > 9) {
      throw std::invalid_argument("compact form is only valid for n <= 9; separate values");
    }
  } else {
    // Whitespace runs are a single separator; each comma delimits a token.
    std::size_t i = 0;
    bool expect_token = true;
    while (i < text.size()) {
      const char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == ',') {
        if (expect_token) throw std::invalid_argument("empty token");
        expect_token = true;
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !is_separator(text[j])) ++j;
      const auto token = text.substr(i, j - i);
      int v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument("malformed token '" + std::string(token) + "'");
      }
      values.push_back(v);
      expect_token = false;
      i = j;
    }
    if (expect_token) throw std::invalid_argument("empty token");
  }
  return Permutation(std::move(values));
}

std::vector<Permutation> parse_permutation_list(std::string_view text) {
  std::vector<Permutation> out;
  const bool long_form = text.find(';') != std::string_view::npos;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = i;
    if (long_form) {
      while (j < text.size() && text[j] != ';') ++j;
    } else {
      while (j < text.size() && !is_separator(text[j])) ++j;
    }
    auto item = trim(text.substr(i, j - i));
    if (!item.empty()) out.push_back(parse_permutation(item));
    i = j + 1;
  }
  return out;
}

std::vector<int> standardize(std::span<const int> seq) {
  std::vector<int> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return seq[a] < seq[b]; });
  std::vector<int> out(seq.size());
  for (std::size_t r = 0; r < order.size(); ++r) out[order[r]] = static_cast<int>(r + 1);
  return out;
}

Permutation delete_entry(const Permutation& host, std::size_t position) {
  const int removed = host.at(position);
  std::vector<int> out;
  out.reserve(host.size() - 1);
  for (std::size_t i = 0; i < host.size(); ++i) {
    if (i + 1 == position) continue;
    const int v = host.values()[i];
    out.push_back(v > removed ? v - 1 : v);
  }
  return Permutation::from_trusted(std::move(out));
}

Permutation insert_entry(const Permutation& host, std::size_t position, int value) {
  const auto n = host.size();
  if (position < 1 || position > n + 1) throw std::out_of_range("insert position out of range");
  if (value < 1 || static_cast<std::size_t>(value) > n + 1) {
    throw std::out_of_range("insert value out of range");
  }
  std::vector<int> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 == position) out.push_back(value);
    const int v = host.values()[i];
    out.push_back(v >= value ? v + 1 : v);
  }
  if (position == n + 1) out.push_back(value);
  return Permutation::from_trusted(std::move(out));
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

std::string to_string(const Rational& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

} // namespace permlab

std::size_t std::hash<permlab::Permutation>::operator()(const permlab::Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : p.values()) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ULL;
  }
  return h;
}
