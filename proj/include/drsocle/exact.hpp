#pragma once

// Exact rational arithmetic and the integer sequences used throughout.
//
// Every scalar in the library is a Rational (GMP mpq_class), kept in lowest
// terms with a positive denominator. Nothing here touches floating point.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace drsocle {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form "num/den"; integers are written "n/1".
std::string to_string(const Rational& x);

/// Accepts "n" or "n/d" (d != 0, optional sign on n). Result is canonicalized.
/// Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);

/// Bernoulli number B_k with B_1 = -1/2. Cached; safe to call concurrently.
Rational bernoulli(int k);

Integer factorial(int n);
Integer binomial(int n, int k);

/// m!! for odd m >= -1, with (-1)!! = 1.
Integer double_factorial_odd(int m);

/// base^exp for exp >= 0.
Integer ipow(const Integer& base, int exp);
Rational rpow(const Rational& base, int exp);

/// num/den in lowest terms; den != 0.
Rational ratio(const Integer& num, const Integer& den);

/// (-1)^n as +1 / -1.
inline int sign_pow(int n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace drsocle
