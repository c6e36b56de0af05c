#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace confcause {

using big_int = boost::multiprecision::cpp_int;

/// Exact rational arithmetic for responsibility/blame values and measurement
/// thresholds. Always reduced, denominator > 0.
using rational = boost::multiprecision::cpp_rational;

/// "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const rational& r);

/// Decimal rendering for presentation only; never fed back into computations.
std::string to_decimal_string(const rational& r, int significant_digits = 4);

/// Accepts "p/q" and plain decimals with at most nine fractional digits
/// (optional exponent); conversion is exact.
rational parse_rational(std::string_view text);

/// Like parse_rational but rejects the "p/q" form (measurement cells).
rational parse_decimal(std::string_view text);

} // namespace confcause
