#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace vanprop {

// Exact arbitrary-precision integers and reduced fractions. GMP's canonical
// form already guarantees gcd(|num|, den) = 1 and den >= 1 as long as every
// fraction is built through make_rational (or arithmetic on such values).
using BigInt = mpz_class;
using BigRational = mpq_class;

BigInt factorial(unsigned long n);

/// Reduced num/den with positive denominator; throws InputError on den == 0.
BigRational make_rational(BigInt num, BigInt den);
BigRational rational_from_string(const std::string& s);  // "p/q" or "p"

/// floor(sqrt(n)); exact, no floating point. Throws InputError for n < 0.
BigInt isqrt(const BigInt& n);
uint64_t isqrt_u64(uint64_t n);

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& q);

/// Decimal rendering of a fraction, rounded to `places` digits. Display only.
std::string decimal_approx(const BigRational& q, int places = 6);

}  // namespace vanprop
