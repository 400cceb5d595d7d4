#pragma once

#include <array>

#include "spantree/real.hpp"

namespace spantree {

// Saddle-point apparatus for the cubic (d = 3) second moment. Everything here
// runs at the Real working precision; steps for finite differences are chosen
// far above the precision floor.

// Closed form of the scaled component series at d = 3: (1-z)^{-1/2} - 1,
// principal branch, |z| < 1.
CReal component_gf_d3(const CReal& z);
Real component_gf_d3(const Real& x);

// The contour radius r_beta = (8 - 4 beta - beta^2 - sqrt(beta^3 (8+beta)))/8
// solving beta r f'(r) = f(r); beta in (0, 1/2].
Real saddle_radius(const Real& beta);

// phi(beta, theta) = beta log(2 f(r e^{i theta})) - log r - i theta
//                    - beta log beta - (1/2 - beta) log(1/2 - beta)
// and the prefactor psi(beta) = beta^{-1/2} (1/2 - beta)^{-5/2};
// beta strictly inside (0, 1/2).
CReal exponent_phi(const Real& beta, const Real& theta);
Real exponent_phi_real(const Real& beta);  // theta = 0 slice, real-valued
Real prefactor_psi(const Real& beta);

// Bundle of everything the saddle analysis knows at one point of the
// (beta, theta) strip.
struct SaddleState {
    Real beta;
    Real theta;
    Real radius;  // r_beta
    CReal phi;
    Real psi;
};

SaddleState evaluate_saddle(const Real& beta, const Real& theta);

// |d phi / d beta| and |d phi / d theta| by central differences.
std::array<Real, 2> phi_gradient_norms(const Real& beta, const Real& theta, const Real& step);

// Newton iteration for the stationary beta on the theta = 0 line; throws
// after 100 iterations without convergence.
Real stationary_beta(double guess);

struct SaddleHessian {
    Real bb;          // d^2 phi / d beta^2
    Real tt;          // d^2 phi / d theta^2 (real by conjugate symmetry)
    Real mixed_abs;   // |d^2 phi / d beta d theta|, vanishes at the saddle
};

// Central differences at (1/3, 0) with step 1e-6.
SaddleHessian hessian_at_stationary();

// 2 pi psi(x*) det(-H)^{-1/2} from the finite-difference Hessian.
Real gaussian_peak_constant();

// log of the asymptotic coefficient sum (72/(n^3 sqrt 7)) (4 sqrt(2e/3n))^n,
// and its exact counterpart recovered from the second moment; n even, >= 4.
Real log_contour_sum_asymptotic(long n);
Real log_contour_sum_exact(long n);

struct SecondMomentAsymCheck {
    Real ratio_to_asym;     // E[Y^2] / ((18/sqrt 14) n^{-2} (16/3)^n)
    Real normalized_ratio;  // (E[Y^2]/E[Y]^2) / (9/sqrt 14)
};

SecondMomentAsymCheck second_moment_asymptotic_check(long n);

}  // namespace spantree
