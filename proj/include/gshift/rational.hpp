// rational.hpp -- exact rational arithmetic used by every weight and measure.

#ifndef GSHIFT_RATIONAL_HPP
#define GSHIFT_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gshift {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Canonical `p/q` rendering (always with a denominator, e.g. "1/1", "0/1").
std::string to_string(const Rational& value);

/// Parses `p/q`, an integer, or a finite decimal such as `0.45`. Throws
/// Error(ParseError) on malformed input.
Rational parse_rational(std::string_view text);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

} // namespace gshift

#endif // GSHIFT_RATIONAL_HPP
