#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace desire {

/// Exact rational number; no floating point is used anywhere in the engine.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or a plain integer string. Throws MalformedDocument on
/// bad syntax or a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical form: "p" for integers, "p/q" otherwise (q > 0, gcd(p,q)=1).
std::string format_rational(const Rational& value);

}  // namespace desire
