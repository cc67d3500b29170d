#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zsum {

/// Exact rational value. Backed by GMP; always canonical (lowest terms,
/// positive denominator) as long as values are built through the helpers
/// below or mpq_class arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws on den == 0.
Rational make_rational(long num, long den);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "a/b" or "a". Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& text);

/// Renders as "a/b", or just "a" when the denominator is 1.
std::string to_fraction_string(const Rational& q);

/// Fixed-point decimal rendering with `digits` fractional digits,
/// rounded half away from zero. Presentation only; never parsed back.
std::string to_decimal_string(const Rational& q, int digits = 12);

/// floor(q) as a GMP integer.
Integer floor_rational(const Rational& q);

inline Rational rational_of(unsigned long v) { return Rational(static_cast<unsigned long>(v)); }

}  // namespace zsum
