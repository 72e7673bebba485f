#pragma once

#include <gmpxx.h>

#include <string>

namespace treelab {

using Integer = mpz_class;
using Rational = mpq_class;

// C(n, k); zero when k < 0, k > n or n < 0. Rows up to kPascalRows come from a
// shared Pascal triangle, larger rows from GMP directly.
Integer binomial(long n, long k);

Integer factorial(unsigned long n);

// C_n = binom(2n, n) / (n + 1)
Integer catalan(unsigned long n);

std::string to_string(const Integer& value);
// "p" for integers, "p/q" otherwise (q > 0, lowest terms).
std::string to_string(const Rational& value);

// Parses "p" or "p/q" (optional leading '-'). Throws ParseError.
Rational parse_rational(const std::string& text);

// Exact rational square root, if there is one.
bool rational_sqrt(const Rational& value, Rational& root);

}  // namespace treelab
