#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hilbert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Natural logarithm of a positive integer, valid far beyond the double range.
double log_integer(const Integer& value);

/// Base-10 decimal text.
inline std::string to_decimal(const Integer& value) { return value.get_str(10); }

Integer pow_integer(const Integer& base, unsigned long exponent);

/// C(n, k) with C(n, k) = 0 for k > n.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace hilbert
