#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hardcore {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "3", "-7/2", "0.25", "1e3" style inputs exactly.
Rational parse_rational(const std::string& text);

// Exact rational from a double (doubles are dyadic).
Rational rational_from_double(double x);

std::string rational_to_string(const Rational& q);

// Scientific decimal rendering with the given significant digits,
// usable for astronomically large or small exact values.
std::string rational_to_scientific(const Rational& q, int digits = 17);

double log10_rational(const Rational& q);  // q > 0

}  // namespace hardcore
