#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace shg {

using BigInt = mpz_class;
using BigRational = mpq_class;

constexpr long kInfiniteValuation = 1L << 60;

BigRational rat(long num, long den = 1);
BigRational parse_rational(std::string_view text);
std::string to_string(const BigInt& n);
std::string to_string(const BigRational& q);

bool is_prime(unsigned long n);
// throws UnsupportedPrime unless p is a prime >= 5
void require_prime(unsigned long p);

BigInt prime_power(unsigned long p, long e);
BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

// v_p, kInfiniteValuation for zero
long valuation(const BigInt& n, unsigned long p);
long valuation(const BigRational& q, unsigned long p);

bool is_integer(const BigRational& q);
bool is_nonpositive_integer(const BigRational& q);
BigInt floor(const BigRational& q);
BigRational frac(const BigRational& q);

// q mod `modulus` in [0, modulus); q must be integral at every prime dividing modulus
BigInt reduce_mod(const BigRational& q, const BigInt& modulus);

}  // namespace shg
