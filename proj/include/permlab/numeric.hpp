#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace permlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when a request exceeds an exhaustive-search guard (n, t, weight...).
class cap_exceeded : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

Integer factorial(unsigned n);

inline std::string to_string(const Integer& v) { return v.str(); }
std::string to_string(const Rational& v);

} // namespace permlab
