#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace wpr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Result of the extended Euclidean algorithm: g = s*a + t*b, g >= 0.
struct ExtendedGcd {
  Integer g, s, t;
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exp);

/// Floor division and the matching nonnegative-remainder modulus (b != 0).
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);

bool is_prime(const Integer& n);
bool is_prime(std::int64_t n);

/// p-adic valuation of n != 0.
unsigned valuation(Integer n, const Integer& p);

/// Prime factorisation as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<Integer, unsigned>> factorize(Integer n);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

}  // namespace wpr
