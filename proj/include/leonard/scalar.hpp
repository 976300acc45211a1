#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace leonard {

// Expression templates are disabled so that the types compose cleanly with
// Eigen's own expression templates.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p/q" or "p" (optional sign, no whitespace) into a reduced rational.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& x);

/// Approximate decimal rendering with `digits` digits after the point.
std::string to_decimal(const Rational& x, int digits);

/// x^n for any integer n; x must be nonzero when n < 0.
Rational ipow(const Rational& x, int n);

bool is_integer(const Rational& x);

}  // namespace leonard
