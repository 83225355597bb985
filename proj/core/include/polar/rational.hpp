#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polar {

using Integer = mpz_class;

/// Arbitrary-precision rational. GMP keeps mpq values canonical
/// (gcd(num, den) = 1, den > 0) through every arithmetic operation; values
/// built from raw numerator/denominator pairs go through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// "num/den" with den >= 1 always present, e.g. "0/1", "-3/2".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "n", "n/d", with optional sign; throws InvalidArgument otherwise.
Rational parse_rational(std::string_view text);

int sign(const Rational& r);
Rational abs(const Rational& r);

/// Decimal rendering of r rounded to `digits` places after the point.
std::string to_decimal(const Rational& r, unsigned digits);

/// floor(log2 |r|) for nonzero r, a cheap magnitude estimate.
long floor_log2(const Rational& r);

/// 2^e as a rational (e may be negative).
Rational pow2(long e);

}  // namespace polar
