#include "spantree/exact.hpp"

#include <stdexcept>

namespace spantree {

BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

BigInt factorial(unsigned long k) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

BigInt pairing_count(unsigned long m) {
    if (m % 2 != 0) throw std::invalid_argument("pairing_count: m must be even");
    BigInt r = 1;
    for (unsigned long i = 3; i < m; i += 2) mpz_mul_ui(r.get_mpz_t(), r.get_mpz_t(), i);
    return r;
}

BigInt binom(long n, long k) {
    if (k < 0) return 0;
    BigInt nn(n), r;
    mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

BigInt falling(const BigInt& n, long k) {
    if (k < 0) throw std::invalid_argument("falling: k must be nonnegative");
    BigInt r = 1, f = n;
    for (long i = 0; i < k; ++i) {
        r *= f;
        f -= 1;
    }
    return r;
}

BigInt falling(long n, long k) { return falling(BigInt(n), k); }

}  // namespace spantree
