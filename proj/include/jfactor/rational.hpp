#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace jfactor {

// Exact arithmetic backbone. Every factor entry is a normalized fraction
// (gcd(|num|, den) = 1, den >= 1, zero stored as 0/1); denominators grow
// through repeated products, so the integer type is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

Rational rat(std::int64_t numerator, std::int64_t denominator);

double to_double(const Rational& r);

// "p/q" when q != 1, plain "p" otherwise.
std::string to_fraction_string(const Rational& r);

// Accepts "p/q", plain integers, and decimal/scientific notation; decimal
// input is converted exactly (no binary rounding).
Rational parse_rational(const std::string& text);

// Exact value of a decimal literal such as "-2.5e-3".
Rational rational_from_decimal(const std::string& text);

// Decimal rendering with the given number of significant digits (nearest
// double first, so 17 digits round-trips through binary64).
std::string to_decimal_string(const Rational& r, int significant_digits = 17);

}  // namespace jfactor
