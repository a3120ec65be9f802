#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gperiod {

/// Arbitrary-precision rational. Every exhaustive check in the library runs
/// on this type so verdicts never depend on a tolerance.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal such as "-0.125" or
/// "2.5e-3" into an exact rational. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// The exact binary value of a finite double.
Rational exact_from_double(double value);

/// The rational written by the shortest decimal text that round-trips to
/// value, so 0.4 becomes 2/5 rather than its binary neighbour.
Rational rational_from_decimal(double value);

/// Largest double not exceeding |value|, with the sign of value (rounds
/// toward zero). A rational strictly below 1 therefore never maps to 1.0.
double to_double_toward_zero(const Rational& value);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& value);

}  // namespace gperiod
