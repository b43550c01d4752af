#pragma once

#include <gmpxx.h>

#include <string>

namespace veronese {

// Arbitrary-precision scalars. GMP keeps rationals canonical (reduced,
// positive denominator), which the rest of the library relies on for
// exact equality checks.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional surrounding whitespace). Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

double to_double(const Rational& x);

/// binom(n, k); 0 when k < 0 or k > n or n < 0.
Integer binomial(long n, long k);

Integer int_pow(const Integer& base, unsigned long exp);

Integer factorial(unsigned long n);

}  // namespace veronese
