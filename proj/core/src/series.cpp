#include "spantree/series.hpp"

#include <stdexcept>

namespace spantree {

PowerSeries::PowerSeries(int order) {
    if (order < 0) throw std::invalid_argument("PowerSeries: order must be >= 0");
    c_.assign(static_cast<size_t>(order) + 1, BigRat(0));
}

PowerSeries PowerSeries::one(int order) {
    PowerSeries s(order);
    s.set(0, BigRat(1));
    return s;
}

PowerSeries PowerSeries::mul(const PowerSeries& o) const {
    const int ord = std::min(order(), o.order());
    PowerSeries r(ord);
    BigRat acc, term;
    for (int k = 0; k <= ord; ++k) {
        acc = 0;
        for (int i = 0; i <= k; ++i) {
            const BigRat& a = c_[static_cast<size_t>(i)];
            const BigRat& b = o.c_[static_cast<size_t>(k - i)];
            if (a == 0 || b == 0) continue;
            term = a * b;
            acc += term;
        }
        r.set(k, acc);
    }
    return r;
}

PowerSeries PowerSeries::truncated(int order) const {
    if (order > this->order()) throw std::invalid_argument("PowerSeries: cannot extend order");
    PowerSeries r(order);
    for (int k = 0; k <= order; ++k) r.set(k, c_[static_cast<size_t>(k)]);
    return r;
}

PowerSeries tree_edge_series(int d, int order) {
    if (d < 3) throw std::invalid_argument("tree_edge_series: d must be >= 3");
    if (order < 1) throw std::invalid_argument("tree_edge_series: order must be >= 1");
    PowerSeries s(order);
    for (int j = 1; j <= order; ++j)
        s.set(j, make_rat(falling(d, j), factorial(static_cast<unsigned long>(j - 1))));
    return s;
}

PowerSeries component_series(int d, int order) {
    if (d < 3) throw std::invalid_argument("component_series: d must be >= 3");
    if (order < 1) throw std::invalid_argument("component_series: order must be >= 1");
    PowerSeries s(order);
    for (int j = 1; j <= order; ++j)
        s.set(j, BigRat(binom(static_cast<long>(d - 1) * j, j)));
    return s;
}

SeriesPowers::SeriesPowers(PowerSeries base) : base_(std::move(base)) {}

const PowerSeries& SeriesPowers::power(int b) {
    if (b < 1) throw std::invalid_argument("SeriesPowers: b must be >= 1");
    if (pow_.empty()) pow_.push_back(base_);
    while (static_cast<int>(pow_.size()) < b) pow_.push_back(pow_.back().mul(base_));
    return pow_[static_cast<size_t>(b) - 1];
}

BigRat SeriesPowers::coeff(int b, int n) {
    if (n < 0 || n > base_.order())
        throw std::invalid_argument("SeriesPowers: n out of truncation range");
    if (b < 0) throw std::invalid_argument("SeriesPowers: b must be >= 0");
    if (b == 0) return n == 0 ? BigRat(1) : BigRat(0);
    return power(b)[n];
}

BigRat pow_coeff(const PowerSeries& s, int b, int n) {
    SeriesPowers p(s);
    return p.coeff(b, n);
}

BigRat component_scale(int d) {
    BigInt num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(d - 2), static_cast<unsigned long>(d - 2));
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(d - 1), static_cast<unsigned long>(d - 1));
    return make_rat(num, den);
}

std::complex<double> contour_coeff(int d, int b, int n, double radius, int grid) {
    if (radius <= 0.0 || radius >= 1.0)
        throw std::invalid_argument("contour_coeff: radius must lie in (0, 1)");
    if (grid < 4) throw std::invalid_argument("contour_coeff: grid too small");
    if (b < 0 || n < 0) throw std::invalid_argument("contour_coeff: b, n must be >= 0");

    // Scaled coefficients decay like j^{-3/2}, so the tail is controlled by
    // radius^j alone.
    const BigRat c = component_scale(d);
    std::vector<double> coeff;
    coeff.push_back(0.0);
    BigRat cj(1);
    for (int j = 1; j < 20000; ++j) {
        cj *= c;
        BigRat a = BigRat(binom(static_cast<long>(d - 1) * j, j)) * cj;
        const double aj = a.get_d();
        coeff.push_back(aj);
        double tail = aj;
        for (int t = 0; t < j; ++t) tail *= radius;
        if (j > n && tail < 1e-22) break;
    }

    const double two_pi = 6.283185307179586477;
    std::complex<double> sum(0.0, 0.0);
    for (int k = 0; k < grid; ++k) {
        const double theta = -3.141592653589793238 + two_pi * k / grid;
        const std::complex<double> z = std::polar(radius, theta);
        // Horner over the truncated scaled series.
        std::complex<double> f(0.0, 0.0);
        for (size_t j = coeff.size(); j-- > 0;) f = f * z + coeff[j];
        std::complex<double> fb(1.0, 0.0);
        for (int t = 0; t < b; ++t) fb *= f;
        sum += fb / std::pow(z, n);
    }
    return sum / static_cast<double>(grid);
}

}  // namespace spantree
