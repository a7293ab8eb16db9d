#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace hcm {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p/q", a plain integer, or a decimal literal like "0.25" into an
/// exact rational. Throws parse_error on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// Renders a rational as "p/q" (or just "p" when the denominator is 1).
std::string format_rational(const Rational& value);

Int ipow(Int base, unsigned exponent);
Rational rational_pow(const Rational& base, unsigned exponent);

/// floor(value) as an integer.
Int rational_floor(const Rational& value);
/// ceil(value) as an integer.
Int rational_ceil(const Rational& value);

/// Uniform dyadic rational in [0, 1] with `bits` random bits. Uses raw
/// mt19937_64 output so results are identical across standard libraries.
Rational random_unit_rational(std::mt19937_64& rng, unsigned bits = 53);

/// Uniform digit in {0, ..., alphabet-1}, reproducible across platforms.
int random_digit(std::mt19937_64& rng, int alphabet);

} // namespace hcm
