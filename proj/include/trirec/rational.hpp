#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace trirec {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p/q", integers, plain decimals ("1.25") and scientific notation
// ("1e-12", "2.5e3") into an exact rational. Throws ParseError.
Rational parse_rational(std::string_view text);

// "p/q" when the denominator is not 1, otherwise just "p".
std::string to_fraction_string(const Rational& value);

// Exact decimal expansion truncated toward zero after `digits` fractional
// digits; trailing zeros (and a trailing '.') are trimmed. Deterministic.
std::string to_decimal_string(const Rational& value, int digits);

// value^e for e >= 0 (e < 0 requires value != 0).
Rational pow_rational(const Rational& value, long e);

// floor(sqrt(v)) for v >= 0.
Integer isqrt(const Integer& value);

// Exact k-th root when the rational is a perfect k-th power.
std::optional<Rational> exact_root(const Rational& value, unsigned long k);

// Decimal expansion of value^(1/k), truncated after `digits` fractional
// digits (value >= 0). Exact integer root extraction on a scaled integer,
// so the result is deterministic and correct to < 2 ulp of the last digit.
std::string root_decimal_string(const Rational& value, unsigned long k,
                                int digits);

inline Rational rational_abs(const Rational& v) { return abs(v); }

inline int sign_of(const Rational& v) { return sgn(v); }

}  // namespace trirec
