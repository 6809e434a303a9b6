#pragma once

#include <gmpxx.h>

#include <string>

namespace csfkit {

/// Exact rational scalar. Every coefficient in the library is one of these.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

Rational factorial(int n);
Rational binomial(long n, long k);

}  // namespace csfkit
