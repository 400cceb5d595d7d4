#include <doctest.h>

#include <complex>
#include <vector>

#include "spantree/exact.hpp"
#include "spantree/rng.hpp"
#include "spantree/series.hpp"

using namespace spantree;

namespace {

// Independent oracle: naive full polynomial product (no truncation logic
// shared with PowerSeries::mul).
std::vector<BigRat> naive_mul(const std::vector<BigRat>& a, const std::vector<BigRat>& b) {
    std::vector<BigRat> r(a.size() + b.size() - 1, BigRat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<BigRat> naive_pow(const std::vector<BigRat>& a, int b) {
    std::vector<BigRat> r{BigRat(1)};
    for (int t = 0; t < b; ++t) r = naive_mul(r, a);
    return r;
}

std::vector<BigRat> series_coeffs(const PowerSeries& s) {
    std::vector<BigRat> v;
    for (int k = 0; k <= s.order(); ++k) v.push_back(s[k]);
    return v;
}

}  // namespace

TEST_CASE("tree_edge_series coefficients") {
    const PowerSeries s = tree_edge_series(3, 6);
    CHECK(s[0] == 0);
    CHECK(s[1] == 3);
    CHECK(s[2] == 6);
    CHECK(s[5] == 0);  // falling(3,5) = 0
}

TEST_CASE("component_series coefficients") {
    const PowerSeries f3 = component_series(3, 4);
    CHECK(f3[0] == 0);
    CHECK(f3[1] == 2);
    CHECK(f3[3] == 20);
    const PowerSeries f4 = component_series(4, 3);
    CHECK(f4[2] == 15);
}

TEST_CASE("pow_coeff examples against the naive oracle") {
    const PowerSeries f3 = component_series(3, 8);
    CHECK(pow_coeff(f3, 1, 1) == 2);
    CHECK(pow_coeff(f3, 0, 0) == 1);
    CHECK(pow_coeff(f3, 0, 3) == 0);

    const auto oracle = naive_pow(series_coeffs(f3), 2);
    CHECK(oracle[4] == 116);  // 2*(2*20) + 6^2
    CHECK(pow_coeff(f3, 2, 4) == oracle[4]);

    for (int b = 1; b <= 4; ++b) {
        const auto ob = naive_pow(series_coeffs(f3), b);
        for (int n = 0; n <= 8; ++n) CHECK(pow_coeff(f3, b, n) == ob[static_cast<size_t>(n)]);
    }
    CHECK_THROWS_AS(pow_coeff(f3, 1, 9), std::invalid_argument);
}

TEST_CASE("pow_coeff additivity in the exponent") {
    Xoshiro256pp rng(0x5EED0002);
    for (int it = 0; it < 25; ++it) {
        PowerSeries s(8);
        for (int k = 0; k <= 8; ++k)
            s.set(k, make_rat(static_cast<long>(rng.below(9)) - 4, 1 + static_cast<long>(rng.below(3))));
        const int b1 = static_cast<int>(rng.below(4));
        const int b2 = static_cast<int>(rng.below(4));
        const int n = static_cast<int>(rng.below(9));
        BigRat conv(0);
        for (int k = 0; k <= n; ++k) conv += pow_coeff(s, b1, k) * pow_coeff(s, b2, n - k);
        CHECK(pow_coeff(s, b1 + b2, n) == conv);
    }
}

TEST_CASE("tree-edge identity: [x^{2(n-1)}] T_d(x)^n = d^n binom((d-1)n, n-2)") {
    for (int d = 3; d <= 6; ++d) {
        for (int n = 3; n <= 12; ++n) {
            const int deg = 2 * (n - 1);
            SeriesPowers p(tree_edge_series(d, deg));
            BigInt rhs;
            mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n));
            rhs *= binom(static_cast<long>(d - 1) * n, n - 2);
            CHECK(p.coeff(n, deg) == BigRat(rhs));
        }
    }
}

TEST_CASE("contour coefficients match exactly scaled coefficients") {
    // d=3 scale is 1/4: [z^2] of the scaled series is 6/16
    const auto c1 = contour_coeff(3, 1, 2, 0.5, 2048);
    CHECK(std::abs(c1.real() - 6.0 / 16.0) < 1e-9);
    CHECK(std::abs(c1.imag()) < 1e-10 * std::abs(c1.real()));

    const auto c0 = contour_coeff(3, 0, 0, 0.25, 64);
    CHECK(std::abs(c0.real() - 1.0) < 1e-12);

    // exact oracle: pow_coeff times scale^n
    const PowerSeries f3 = component_series(3, 6);
    const BigRat scale = component_scale(3);
    BigRat exact = pow_coeff(f3, 2, 4);
    for (int t = 0; t < 4; ++t) exact *= scale;
    const auto c2 = contour_coeff(3, 2, 4, 0.5, 4096);
    CHECK(std::abs(c2.real() - exact.get_d()) < 1e-8);

    CHECK_THROWS_AS(contour_coeff(3, 1, 2, 1.0, 64), std::invalid_argument);
}

TEST_CASE("contour error shrinks when the grid doubles") {
    const PowerSeries f4 = component_series(4, 8);
    const BigRat scale = component_scale(4);
    BigRat exact = pow_coeff(f4, 2, 6);
    for (int t = 0; t < 6; ++t) exact *= scale;
    const double target = exact.get_d();

    const double e8 = std::abs(contour_coeff(4, 2, 6, 0.8, 8).real() - target);
    const double e16 = std::abs(contour_coeff(4, 2, 6, 0.8, 16).real() - target);
    const double e32 = std::abs(contour_coeff(4, 2, 6, 0.8, 32).real() - target);
    CHECK(e16 < e8);
    CHECK(e32 < e16);
}

TEST_CASE("series multiplication truncates to the smaller order") {
    const PowerSeries a = component_series(3, 6);
    const PowerSeries b = component_series(3, 3);
    CHECK(a.mul(b).order() == 3);
}
