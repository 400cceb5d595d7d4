#include <doctest.h>

#include <cmath>

#include "spantree/moments.hpp"
#include "spantree/real.hpp"
#include "spantree/saddle.hpp"

using namespace spantree;

TEST_CASE("closed-form series values at d = 3") {
    CHECK(component_gf_d3(Real(0)).to_double() == 0.0);
    CHECK(std::fabs(component_gf_d3(Real(0.75)).to_double() - 1.0) < 1e-30);
    CHECK_THROWS_AS(component_gf_d3(Real(1.5)), std::domain_error);

    // strict modulus maximum on every circle: |f(r e^{i theta})| < f(r)
    const Real r(0.6);
    const Real fr = component_gf_d3(r);
    for (double theta : {0.1, 1.0, 3.0}) {
        const CReal z(r * cos(Real(theta)), r * sin(Real(theta)));
        CHECK(abs(component_gf_d3(z)) < fr);
    }
}

TEST_CASE("saddle radius") {
    // hand evaluation at beta = 1/3: sqrt(25/81) = 5/9, r = 3/4
    const Real r = saddle_radius(Real(1) / Real(3));
    CHECK(abs(r - Real(0.75)).to_double() < 1e-40);

    // stationarity residual beta r f'(r) = f(r), with f' by central difference
    for (double beta : {0.1, 0.25, 1.0 / 3.0, 0.45}) {
        const Real b(beta);
        const Real rb = saddle_radius(b);
        const Real h(1e-30);
        const Real fp = (component_gf_d3(rb + h) - component_gf_d3(rb - h)) / (Real(2) * h);
        const Real residual = b * rb * fp - component_gf_d3(rb);
        CHECK(abs(residual).to_double() < 1e-12);
    }

    // r -> 1 as beta -> 0+
    CHECK(std::fabs(saddle_radius(Real(1e-9)).to_double() - 1.0) < 1e-8);
    CHECK_THROWS_AS(saddle_radius(Real(0.6)), std::domain_error);
    CHECK_THROWS_AS(saddle_radius(Real(0)), std::domain_error);
}

TEST_CASE("phi and psi at the stationary point") {
    const Real third = Real(1) / Real(3);
    const Real phi_star = exponent_phi_real(third);
    const Real target = log(Real(4) * sqrt(Real(2) / Real(3)));
    CHECK(abs(phi_star - target).to_double() < 1e-12);

    // equivalent closed form (5/2) log 2 - (1/2) log 3
    const Real alt = Real(5) / Real(2) * log(Real(2)) - log(Real(3)) / Real(2);
    CHECK(abs(phi_star - alt).to_double() < 1e-12);

    const Real psi_star = prefactor_psi(third);
    CHECK(abs(psi_star - Real(108) * sqrt(Real(2))).to_double() < 1e-10);

    // complex evaluation at theta = 0 agrees with the real slice
    const CReal both = exponent_phi(third, Real(0));
    CHECK(abs(both.re - phi_star).to_double() < 1e-40);
    CHECK(abs(both.im).to_double() < 1e-40);

    CHECK_THROWS_AS(exponent_phi_real(Real(0.5)), std::domain_error);
    CHECK_THROWS_AS(prefactor_psi(Real(0.5)), std::domain_error);
}

TEST_CASE("theta = 0 is the strict maximum of Re phi") {
    const Real third = Real(1) / Real(3);
    const Real at0 = exponent_phi_real(third);
    for (double theta : {0.1, 1.0, 3.0}) {
        CHECK(exponent_phi(third, Real(theta)).re < at0);
    }
    for (double beta : {0.15, 0.3, 0.42}) {
        const Real b(beta);
        const Real base = exponent_phi_real(b);
        for (double theta : {0.2, 0.9, 2.5}) CHECK(exponent_phi(b, Real(theta)).re < base);
    }
}

TEST_CASE("Newton finds beta* = 1/3 and the gradient vanishes") {
    const Real beta_star = stationary_beta(0.3);
    CHECK(abs(beta_star - Real(1) / Real(3)).to_double() < 1e-12);

    const auto grad = phi_gradient_norms(Real(1) / Real(3), Real(0), Real(1e-12));
    CHECK(hypot(grad[0], grad[1]).to_double() < 1e-10);

    // spec-pinned step 1e-6 stays within the acceptance band as well
    const auto grad6 = phi_gradient_norms(Real(1) / Real(3), Real(0), Real(1e-6));
    CHECK(hypot(grad6[0], grad6[1]).to_double() < 1e-10);
}

TEST_CASE("the other factored roots lie outside (0, 1/2]") {
    // beta^2 - 4 beta + 2 = 0 at 2 +- sqrt 2
    const double r1 = 2.0 - std::sqrt(2.0);
    const double r2 = 2.0 + std::sqrt(2.0);
    CHECK(r1 > 0.5);
    CHECK(r2 > 0.5);
}

TEST_CASE("Hessian at the stationary point") {
    const SaddleHessian h = hessian_at_stationary();
    CHECK(std::fabs(h.bb.to_double() + 63.0 / 5.0) < 1e-5);
    CHECK(std::fabs(h.tt.to_double() + 2.5) < 1e-6);
    CHECK(h.mixed_abs.to_double() < 1e-6);
}

TEST_CASE("Gaussian peak constant 144 pi / sqrt 7") {
    const double target = 144.0 * 3.14159265358979323846 / std::sqrt(7.0);
    CHECK(std::fabs(gaussian_peak_constant().to_double() - target) < 1e-8);
}

TEST_CASE("exact contour sum round-trips the second moment at n = 4") {
    // By the coefficient sum, F_4 = 2 pi (1/4)^4 sum_b 2^b/(b!(4-b)!) [z^4]f^b
    //                             = 2 pi 246/256 = 123 pi / 64.
    const double direct = std::log(3.14159265358979323846 * 123.0 / 64.0);
    CHECK(std::fabs(log_contour_sum_exact(4).to_double() - direct) < 1e-12);
    CHECK_THROWS_AS(log_contour_sum_exact(5), std::invalid_argument);
}

TEST_CASE("contour sum ratio drifts toward 1") {
    double prev = 1e9;
    for (long n : {50L, 100L, 150L, 200L}) {
        const double ratio =
            std::exp((log_contour_sum_exact(n) - log_contour_sum_asymptotic(n)).to_double());
        CHECK(std::fabs(ratio - 1.0) < prev);
        prev = std::fabs(ratio - 1.0);
    }
    CHECK(prev < 0.2);
}

TEST_CASE("second moment asymptotics at d = 3") {
    const auto c100 = second_moment_asymptotic_check(100);
    // same quantity as p_3(100); 0.9761991 is the exact-arithmetic value,
    // pinned to 12 digits by two independent implementations
    CHECK(std::fabs(c100.normalized_ratio.to_double() - ratio_p(3, 100).to_double()) < 1e-20);
    CHECK(std::fabs(c100.normalized_ratio.to_double() - 0.9761991172) < 1e-9);

    // small n: finite, no asymptotic claim
    const auto c4 = second_moment_asymptotic_check(4);
    CHECK(c4.ratio_to_asym.is_finite());
    CHECK(c4.ratio_to_asym.to_double() > 0.0);

    double prev = 1e9;
    for (long n : {20L, 60L, 100L}) {
        const auto c = second_moment_asymptotic_check(n);
        const double dev = std::fabs(c.normalized_ratio.to_double() - 1.0);
        CHECK(dev < prev);
        prev = dev;
    }
}
