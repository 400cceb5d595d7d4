#include "spantree/saddle.hpp"

#include <stdexcept>

#include "spantree/moments.hpp"

namespace spantree {

namespace {

const double kHessianStep = 1e-6;

Real half() { return Real(1) / Real(2); }

}  // namespace

CReal component_gf_d3(const CReal& z) {
    if (!(abs(z) < Real(1))) throw std::domain_error("component_gf_d3: need |z| < 1");
    const CReal w = CReal(Real(1)) - z;
    return pow(w, -half()) - CReal(Real(1));
}

Real component_gf_d3(const Real& x) {
    if (!(abs(x) < Real(1))) throw std::domain_error("component_gf_d3: need |x| < 1");
    return Real(1) / sqrt(Real(1) - x) - Real(1);
}

Real saddle_radius(const Real& beta) {
    if (!(beta > Real(0)) || beta > half())
        throw std::domain_error("saddle_radius: beta must lie in (0, 1/2]");
    const Real disc = sqrt(beta * beta * beta * (Real(8) + beta));
    return (Real(8) - Real(4) * beta - beta * beta - disc) / Real(8);
}

CReal exponent_phi(const Real& beta, const Real& theta) {
    if (!(beta > Real(0)) || !(beta < half()))
        throw std::domain_error("exponent_phi: beta must lie strictly in (0, 1/2)");
    const Real r = saddle_radius(beta);
    const CReal z(r * cos(theta), r * sin(theta));
    const CReal f = component_gf_d3(z);
    const CReal lf = log(CReal(Real(2) * f.re, Real(2) * f.im));
    const Real re_part = beta * lf.re - log(r) - beta * log(beta) - (half() - beta) * log(half() - beta);
    const Real im_part = beta * lf.im - theta;
    return {re_part, im_part};
}

Real exponent_phi_real(const Real& beta) {
    if (!(beta > Real(0)) || !(beta < half()))
        throw std::domain_error("exponent_phi_real: beta must lie strictly in (0, 1/2)");
    const Real r = saddle_radius(beta);
    const Real f = component_gf_d3(r);
    return beta * log(Real(2) * f) - log(r) - beta * log(beta) - (half() - beta) * log(half() - beta);
}

Real prefactor_psi(const Real& beta) {
    if (!(beta > Real(0)) || !(beta < half()))
        throw std::domain_error("prefactor_psi: beta must lie strictly in (0, 1/2)");
    return Real(1) / (sqrt(beta) * pow(half() - beta, 2) * sqrt(half() - beta));
}

SaddleState evaluate_saddle(const Real& beta, const Real& theta) {
    SaddleState s{beta, theta, saddle_radius(beta), exponent_phi(beta, theta), prefactor_psi(beta)};
    return s;
}

std::array<Real, 2> phi_gradient_norms(const Real& beta, const Real& theta, const Real& step) {
    const CReal db = exponent_phi(beta + step, theta) - exponent_phi(beta - step, theta);
    const CReal dt = exponent_phi(beta, theta + step) - exponent_phi(beta, theta - step);
    const Real two_h = Real(2) * step;
    return {abs(db) / two_h, abs(dt) / two_h};
}

Real stationary_beta(double guess) {
    Real beta(guess);
    if (!(beta > Real(0)) || !(beta < half()))
        throw std::domain_error("stationary_beta: guess must lie in (0, 1/2)");
    const Real h(1e-12);
    for (int it = 0; it < 100; ++it) {
        const Real fp = exponent_phi_real(beta + h);
        const Real fm = exponent_phi_real(beta - h);
        const Real f0 = exponent_phi_real(beta);
        const Real g = (fp - fm) / (Real(2) * h);          // phi'
        const Real gp = (fp - Real(2) * f0 + fm) / (h * h);  // phi''
        const Real delta = g / gp;
        beta -= delta;
        if (abs(delta) < Real(1e-20)) return beta;
    }
    throw std::runtime_error("stationary_beta: Newton failed to converge");
}

SaddleHessian hessian_at_stationary() {
    const Real beta = Real(1) / Real(3);
    const Real h(kHessianStep);
    SaddleHessian out;
    {
        const Real fp = exponent_phi_real(beta + h);
        const Real fm = exponent_phi_real(beta - h);
        const Real f0 = exponent_phi_real(beta);
        out.bb = (fp - Real(2) * f0 + fm) / (h * h);
    }
    {
        // phi(beta, -h) = conj(phi(beta, h)), so the second theta-difference
        // is 2 Re phi(beta, h) - 2 phi(beta, 0).
        const CReal fp = exponent_phi(beta, h);
        const Real f0 = exponent_phi_real(beta);
        out.tt = (Real(2) * fp.re - Real(2) * f0) / (h * h);
    }
    {
        // mixed partial is purely imaginary up to rounding; report |.|
        const CReal a = exponent_phi(beta + h, h);
        const CReal b = exponent_phi(beta - h, h);
        out.mixed_abs = abs(a.im - b.im) / (Real(2) * h * h);
    }
    return out;
}

Real gaussian_peak_constant() {
    const SaddleHessian hes = hessian_at_stationary();
    const Real det = hes.bb * hes.tt;  // both negative at the saddle
    return Real(2) * const_pi() * prefactor_psi(Real(1) / Real(3)) / sqrt(det);
}

Real log_contour_sum_asymptotic(long n) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("log_contour_sum_asymptotic: n even, >= 4");
    const Real nn(n);
    Real v = log(Real(72)) - Real(3) * log(nn) - half() * log(Real(7));
    v += nn * (log(Real(4)) + half() * (log(Real(2)) + Real(1) - log(Real(3)) - log(nn)));
    return v;
}

Real log_contour_sum_exact(long n) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("log_contour_sum_exact: n even, >= 4");
    // Unwinds the prefactor between |P| E[Y^2] and the contour sum at d = 3:
    // F_n = 2 pi #P(3n) E[Y^2] 2^{n/2+2} / (4^n (n!)^2 3^n).
    const BigRat ey2 = second_moment_exact(3, n);
    BigInt num = pairing_count(static_cast<unsigned long>(3 * n));
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(n / 2 + 2));
    BigInt den = factorial(static_cast<unsigned long>(n));
    den *= den;
    BigInt twelve_n;
    mpz_ui_pow_ui(twelve_n.get_mpz_t(), 12, static_cast<unsigned long>(n));
    den *= twelve_n;
    const BigRat core = make_rat(num, den) * ey2;
    return log(Real(2) * const_pi()) + log(Real(core));
}

SecondMomentAsymCheck second_moment_asymptotic_check(long n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("second_moment_asymptotic_check: n even, >= 4");
    const BigRat ey2 = second_moment_exact(3, n);
    const BigRat ey = expected_trees_exact(3, n);
    const Real nn(n);

    SecondMomentAsymCheck c;
    // E[Y^2] ~ (18/sqrt 14) n^{-2} (16/3)^n
    const Real log_asym = log(Real(18)) - half() * log(Real(14)) - Real(2) * log(nn) +
                          nn * (log(Real(16)) - log(Real(3)));
    c.ratio_to_asym = exp(log(Real(ey2)) - log_asym);
    c.normalized_ratio = Real(ey2 / (ey * ey)) * sqrt(Real(14)) / Real(9);
    return c;
}

}  // namespace spantree
