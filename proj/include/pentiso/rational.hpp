#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace pentiso {

using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "p/q" and finite decimals such as "32.6".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);
Rational rational_from_double(double x, long max_den = 1000000);

}  // namespace pentiso
