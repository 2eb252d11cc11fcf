#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rpa {

/// Exact rational number, always kept in lowest terms.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational &value);

/// Accepts "p", "-p", "p/q". Throws Error(InvalidArgument) on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational &value);

/// value^exponent for an integer exponent; value must be nonzero when the
/// exponent is negative.
Rational pow_int(const Rational &value, long exponent);

/// Exact k-th root of a nonnegative rational, if it is rational.
std::optional<Rational> exact_root(const Rational &value, unsigned long k);

/// base^exponent for base > 0 when the result is rational.
std::optional<Rational> rational_pow(const Rational &base, const Rational &exponent);

/// Largest integer <= value.
mpz_class floor(const Rational &value);

} // namespace rpa
