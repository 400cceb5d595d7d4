#pragma once

#include "spantree/exact.hpp"
#include "spantree/real.hpp"

namespace spantree {

// Exact short-cycle constants: lambda_j = (d-1)^j/(2j) is the Poisson limit
// mean of the j-cycle count, zeta_j = -(2(d-1)^j - 1)/(d-1)^{2j} is the
// conditioning coefficient, lambda' = lambda (1 + zeta).
struct ShortCycleConstants {
    int d = 0;
    int j = 0;
    BigRat lambda;
    BigRat zeta;
    BigRat lambda_prime;
};

ShortCycleConstants cycle_constants(int d, int j);

// lambda'_j three ways: the closed form ((d-1)^j - 1)^2 / (2j (d-1)^j), a
// direct enumeration over the 2^j - 1 tree/cycle intersection patterns
// (j <= 16), and the path-decomposition recurrence.
BigRat lambda_prime_closed(int d, int j);
BigRat lambda_prime_enumerate(int d, int j);
BigRat lambda_prime_recurrence(int d, int j);

// Exact partial sum of lambda_j zeta_j^2 and the closed-form value of its
// full exponential, d^2 / sqrt((d-1)(d-2)(d^2-d+1)).
BigRat cycle_sum_partial(int d, int j_max);
Real cycle_sum_exp_closed(int d);
Real cycle_sum_exp_truncated(int d, int j_max);

// Pairing-model E[Y]: (n-2)! #P(dn-2(n-1)) d^n binom((d-1)n, n-2) / #P(dn).
// Requires d >= 3, n >= 3, dn even.
BigRat expected_trees_exact(int d, long n);

struct LogValue {
    Real log_e;
    double mantissa10() const;
    long exponent10() const;
};

// Asymptotic expectation for the simple-graph model,
// exp((6d^2-14d+7)/(4(d-1)^2)) (d-1)^{1/2} / (n (d-2)^{3/2})
//   * ((d-1)^{d-1}/(d^2-2d)^{d/2-1})^n, evaluated in log space.
LogValue expected_trees_asymptotic(int d, long n);

// Pairing-model E[Y^2] through the component-series coefficient sum; the
// series powers are built incrementally and the whole computation stays in
// exact rationals.
BigRat second_moment_exact(int d, long n);

// p_d(n) = (E[Y^2]/E[Y]^2) / exp(sum_j lambda_j zeta_j^2).
Real ratio_p(int d, long n);

struct MomentReport {
    int d = 0;
    long n = 0;
    BigRat ey;
    BigRat ey2;
    BigRat ratio;  // ey2 / ey^2
    Real p;
};

MomentReport moment_report(int d, long n);

// Both sides of the asymptotic equivalence that restates the conjecture for
// d >= 4: the exact coefficient sum (lhs) against the displayed closed-form
// asymptotic (rhs), in log space.
struct ConjectureGap {
    Real lhs_log;
    Real rhs_log;
    double ratio;  // exp(lhs - rhs)
};

ConjectureGap conjecture_gap(int d, long n);

}  // namespace spantree
