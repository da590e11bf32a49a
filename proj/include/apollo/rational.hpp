#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace apollo {

using Integer = mpz_class;
/// Canonical arbitrary-precision rational (GMP keeps gcd = 1 and a positive denominator).
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q"; the result is canonicalized. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Exact decimal parse of strings like "-12.375" or "1e-3" (no rounding).
Rational parse_decimal(std::string_view text);

Rational pow2(long exponent);
Rational pow10(long exponent);

/// Round to the nearest integer, ties to even.
Integer round_half_even(const Rational& q);

/// Formats `scaled / 10^digits` with exactly `digits` fractional digits.
std::string format_fixed(const Integer& scaled, int digits);

/// Best rational approximation of `x` with denominator <= max_den (continued fractions).
Rational approximate_rational(double x, long max_den);

/// Closed interval [lo, hi] with rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);

}  // namespace apollo
