#pragma once

#include <gmpxx.h>

namespace spantree {

// Exact arithmetic carriers for every moment computation. BigRat values are
// kept canonical (reduced, denominator > 0) by GMP; constructors that take a
// raw num/den pair must go through make_rat.
using BigInt = mpz_class;
using BigRat = mpq_class;

BigRat make_rat(const BigInt& num, const BigInt& den);

BigInt factorial(unsigned long k);

// Number of perfect matchings on m labelled points, m!/((m/2)! 2^{m/2}).
// Computed as the running product 1*3*5*...*(m-1) to avoid giant
// intermediate factorials. Odd m is rejected.
BigInt pairing_count(unsigned long m);

// binom(n,k) = 0 for k < 0 and for 0 <= n < k; generalized values for n < 0.
BigInt binom(long n, long k);

// Falling factorial n(n-1)...(n-k+1); k >= 0.
BigInt falling(long n, long k);
BigInt falling(const BigInt& n, long k);

}  // namespace spantree
