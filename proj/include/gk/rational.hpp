#pragma once

#include <gmpxx.h>

#include <string>

namespace gk {

using Integer = mpz_class;
using Rational = mpq_class;

// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& q);

// Accepts "p" or "p/q"; throws gk::Error on malformed input or q = 0.
Rational parse_rational(const std::string& text);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

// m!! for odd m >= -1, with (-1)!! = 1.
Integer double_factorial_odd(long m);

Integer pow_integer(long base, unsigned long exp);

}  // namespace gk
