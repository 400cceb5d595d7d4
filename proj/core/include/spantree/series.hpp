#pragma once

#include <complex>
#include <vector>

#include "spantree/exact.hpp"

namespace spantree {

// Truncated formal power series over BigRat. Arithmetic truncates to the
// smaller order of the operands; an operation never silently extends the
// truncation degree.
class PowerSeries {
public:
    explicit PowerSeries(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const BigRat& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    void set(int k, BigRat v) { c_[static_cast<size_t>(k)] = std::move(v); }

    PowerSeries mul(const PowerSeries& o) const;
    PowerSeries truncated(int order) const;

    static PowerSeries one(int order);  // 1 + 0 z + ...

private:
    std::vector<BigRat> c_;
};

// sum_{j>=1} (d)_j / (j-1)! x^j  — the tree-degree series d x (1+x)^{d-1}.
PowerSeries tree_edge_series(int d, int order);

// sum_{j>=1} binom((d-1)j, j) z^j — the per-component series whose b-th power
// carries the component-size distribution of the second moment.
PowerSeries component_series(int d, int order);

// Incremental cache of s^1..s^b (each step one truncated convolution).
class SeriesPowers {
public:
    explicit SeriesPowers(PowerSeries base);
    const PowerSeries& power(int b);       // b >= 1
    BigRat coeff(int b, int n);            // [z^n] s^b, b >= 0, n <= order

private:
    PowerSeries base_;
    std::vector<PowerSeries> pow_;
};

// Exact [z^n] s^b. n > s.order() is rejected.
BigRat pow_coeff(const PowerSeries& s, int b, int n);

// Radius-of-convergence normalization for component_series(d): coefficient j
// is scaled by ((d-2)^{d-2}/(d-1)^{d-1})^j so the result is analytic on
// |z| < 1.
BigRat component_scale(int d);

// Trapezoid-rule approximation of [z^n] of the b-th power of the scaled
// component series, via the circle |z| = radius (radius < 1 required). The
// rule is spectrally accurate on this periodic integrand.
std::complex<double> contour_coeff(int d, int b, int n, double radius, int grid);

}  // namespace spantree
