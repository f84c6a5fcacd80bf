#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "stopset/error.hpp"

namespace stopset {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Divides and fails hard on a nonzero remainder. `what` names the formula
/// in the error message.
inline Integer exact_divide(const Integer& num, const Integer& den, std::string_view what) {
  if (den == 0) {
    throw InvariantError(std::string(what) + ": division by zero");
  }
  Integer q;
  Integer r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw InvariantError(std::string(what) + ": " + num.str() + " is not divisible by " + den.str());
  }
  return q;
}

/// base^exp for a signed base; 0^0 == 1.
inline Integer ipow(const Integer& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline Integer pow2(unsigned exp) {
  Integer r = 1;
  r <<= exp;
  return r;
}

inline std::string to_decimal(const Integer& x) { return x.str(); }

/// Parses an optionally signed decimal string.
inline Integer parse_decimal(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    i = 1;
  }
  if (i == s.size()) {
    throw FormatError("empty integer literal");
  }
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') {
      throw FormatError("invalid integer literal '" + std::string(s) + "'");
    }
  }
  return Integer(std::string(s));
}

/// Exact rational to double. Only used at output boundaries.
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

} // namespace stopset
