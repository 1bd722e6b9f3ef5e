#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mmvp {

/// Arbitrary-precision rational. Always kept canonical.
using Rational = mpq_class;

/// Parses "3", "-1/6", "0.034992", "2.5e-3" exactly. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);

long double to_long_double(const Rational& r);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace mmvp
