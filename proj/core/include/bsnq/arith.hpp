#ifndef BSNQ_ARITH_HPP
#define BSNQ_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace bsnq {

// Arbitrary-precision integer. Iterated relations such as t^-k a^m t^k grow
// exponents geometrically, so fixed-width arithmetic is not an option anywhere
// in this library.
using Int = mpz_class;

inline Int abs(const Int& a) { return ::abs(a); }
inline int sign(const Int& a) { return sgn(a); }

Int gcd(const Int& a, const Int& b);

// Floor division and the matching nonnegative remainder: a = q*b + r with
// 0 <= r < |b|.
std::pair<Int, Int> floor_divmod(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);

Int pow(const Int& base, unsigned long exp);

// Deterministic primality by trial division; inputs here are desk scale.
bool is_prime(const Int& n);

// Prime factorization by trial division, (prime, multiplicity) pairs in
// increasing prime order.
std::vector<std::pair<Int, int>> factorize(const Int& n);

// Number of distinct prime factors.
int omega(const Int& n);

bool is_prime_power(const Int& n);

int mobius(long n);

// p-adic valuation: largest r with p^r | n, for n != 0.
int valuation(const Int& n, const Int& p);

}  // namespace bsnq

#endif
