#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace smtl {

/// Exact time value. All timestamps, interval endpoints and resolutions use it.
using Rational = mpq_class;

/// Parses "3", "0.25", "1/3" (and, with allow_exponent, "1.5e-2") exactly.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text, bool allow_exponent = false);

/// True when the value has a finite decimal expansion (denominator 2^a 5^b).
bool has_exact_decimal(const Rational& value);

/// Canonical text: integer or exact decimal when possible, otherwise "a/b".
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

} // namespace smtl
