#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace proglab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// log2 of a positive big integer, accurate to the top 64 bits of the operand.
double log2_big(const BigInt& v);

double to_double(const Rational& r);

// Exact rational from a double (doubles are dyadic, so this is lossless).
Rational rational_from_double(double x);

// Parse "3", "-3", "0.25" or "2/7" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace proglab
