#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nscalc {

using Integer = mpz_class;

// GMP keeps mpq_class canonical through arithmetic; anything built from a raw
// numerator/denominator pair must go through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p/q" or "p" with an optional leading sign and no whitespace.
/// Throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& x);

/// Fixed-point rendering with round-half-even at `places` digits.
std::string to_decimal(const Rational& x, int places = 6);

int sign(const Rational& x);

/// Exact square root when both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational& x);

Integer factorial(unsigned long n);

}  // namespace nscalc
