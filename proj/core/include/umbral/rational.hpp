#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace umbral {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses "p", "-p", "p/q". Rejects zero denominators, whitespace and decimals.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

/// 1/k! for k >= 0 and 0 for k < 0. Encodes the restricted ("primed") sums
/// of the kernels without per-kernel index clipping.
Rational recip_factorial(long k);

/// n(n-1)...(n-k+1) for n >= k, 0 for n < k; falling_factorial(n, 0) = 1.
Rational falling_factorial(unsigned long n, unsigned long k);

/// Generalized falling factorial x(x-1)...(x-k+1) for any rational x.
Rational falling_factorial(const Rational& x, unsigned long k);

/// Rising factorial (Pochhammer symbol) x(x+1)...(x+k-1).
Rational rising_factorial(const Rational& x, unsigned long k);

Rational pow(const Rational& base, unsigned long exponent);

/// True when value is an integer <= 0.
bool is_nonpositive_integer(const Rational& value);

}  // namespace umbral
