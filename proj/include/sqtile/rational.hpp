#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace sqtile {

using Int = boost::multiprecision::cpp_int;

/// Exact rational number; always stored reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

Int rational_floor(const Rational& x);
Int rational_ceil(const Rational& x);

inline Rational rational_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// "n" for integers, "num/den" otherwise.
std::string fraction_str(const Rational& x);

/// Parses "3/4", "-7", "0.25", "1e-6", "2.5e-3" exactly. Returns nullopt on syntax errors
/// or a zero denominator.
std::optional<Rational> parse_fraction(const std::string& s);

}  // namespace sqtile
