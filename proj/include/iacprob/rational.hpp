#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace iacprob {

// Exact arbitrary-precision scalars. mpq_rational is kept canonical by GMP:
// gcd(|num|, den) = 1 and den >= 1. No floating point appears in any
// value-bearing path; decimal output is rendering only.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

Integer factorial(unsigned n);

// C(n, k) for integer n >= 0; returns 0 when n < k.
Integer binomial(const Integer& n, unsigned k);

// Accepts "p", "-p", "p/q". Throws InputError on malformed text or q = 0.
Rational parse_rational(const std::string& text);

// "p/q", or just "p" for integers.
std::string rational_to_string(const Rational& value);

// Decimal rendering, truncated toward zero, `digits` places after the point.
std::string rational_to_decimal(const Rational& value, int digits = 10);

}  // namespace iacprob
