#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace homothets {

// All geometry in this library is exact. Rational is GMP-backed and kept in
// lowest terms with a positive denominator by mpq canonicalization.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Accepts "p", "p/q" and plain decimal strings ("-2.75"). Throws
// std::invalid_argument on anything else (including q == 0).
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& value);

double to_double(const Rational& value);

// Exact: every finite double is a dyadic rational.
Rational rational_from_double(double value);

// Floor/ceil of p/q as integers.
Integer floor_div(const Integer& num, const Integer& den);
Integer rational_ceil(const Rational& value);

}  // namespace homothets
