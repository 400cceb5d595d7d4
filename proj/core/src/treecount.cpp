#include "spantree/treecount.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace spantree {

std::vector<long> laplacian_matrix(const Multigraph& g) {
    const int n = g.order();
    std::vector<long> lap(static_cast<size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u) {
        long deg = 0;
        for (int v = 0; v < n; ++v)
            if (v != u) {
                lap[static_cast<size_t>(u) * n + v] = -g.mult(u, v);
                deg += g.mult(u, v);
            }
        lap[static_cast<size_t>(u) * n + u] = deg;
    }
    return lap;
}

BigInt spanning_tree_count(const Multigraph& g) {
    const int n = g.order();
    if (n <= 1) return 1;
    const int m = n - 1;  // drop the last row/column

    const std::vector<long> lap = laplacian_matrix(g);
    std::vector<BigInt> a(static_cast<size_t>(m) * m);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
            a[static_cast<size_t>(u) * m + v] = lap[static_cast<size_t>(u) * n + v];

    // Bareiss: every division below is exact.
    BigInt prev = 1, t1, t2;
    int sign = 1;
    for (int k = 0; k < m; ++k) {
        if (a[static_cast<size_t>(k) * m + k] == 0) {
            int r = k + 1;
            while (r < m && a[static_cast<size_t>(r) * m + k] == 0) ++r;
            if (r == m) return 0;  // singular minor: disconnected graph
            for (int c = k; c < m; ++c)
                std::swap(a[static_cast<size_t>(k) * m + c], a[static_cast<size_t>(r) * m + c]);
            sign = -sign;
        }
        const BigInt& pivot = a[static_cast<size_t>(k) * m + k];
        for (int i = k + 1; i < m; ++i) {
            for (int j = k + 1; j < m; ++j) {
                BigInt& x = a[static_cast<size_t>(i) * m + j];
                mpz_mul(t1.get_mpz_t(), x.get_mpz_t(), pivot.get_mpz_t());
                mpz_mul(t2.get_mpz_t(), a[static_cast<size_t>(i) * m + k].get_mpz_t(),
                        a[static_cast<size_t>(k) * m + j].get_mpz_t());
                mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                mpz_divexact(x.get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            a[static_cast<size_t>(i) * m + k] = 0;
        }
        prev = pivot;
    }
    BigInt det = a[static_cast<size_t>(m - 1) * m + (m - 1)];
    if (sign < 0) det = -det;
    return det;
}

double spanning_tree_log_count(const Multigraph& g) {
    const int n = g.order();
    if (n <= 1) return 0.0;
    if (!is_connected(g)) return -std::numeric_limits<double>::infinity();

    const int m = n - 1;
    const std::vector<long> lap = laplacian_matrix(g);
    std::vector<double> a(static_cast<size_t>(m) * m, 0.0);
    double max_row = 0.0;
    for (int u = 0; u < m; ++u) {
        double row = 0.0;
        for (int v = 0; v < m; ++v) {
            const auto x = static_cast<double>(lap[static_cast<size_t>(u) * n + v]);
            a[static_cast<size_t>(u) * m + v] = x;
            row += std::fabs(x);
        }
        max_row = std::max(max_row, row);
    }

    // Cholesky; the minor is SPD for a connected graph.
    const double threshold = 1e-12 * max_row;
    double log_det = 0.0;
    for (int k = 0; k < m; ++k) {
        double pivot = a[static_cast<size_t>(k) * m + k];
        for (int j = 0; j < k; ++j) {
            const double l = a[static_cast<size_t>(k) * m + j];
            pivot -= l * l;
        }
        if (pivot <= threshold)
            throw std::runtime_error("spanning_tree_log_count: pivot collapsed on a connected graph");
        const double lkk = std::sqrt(pivot);
        a[static_cast<size_t>(k) * m + k] = lkk;
        log_det += 2.0 * std::log(lkk);
        for (int i = k + 1; i < m; ++i) {
            double s = a[static_cast<size_t>(i) * m + k];
            for (int j = 0; j < k; ++j)
                s -= a[static_cast<size_t>(i) * m + j] * a[static_cast<size_t>(k) * m + j];
            a[static_cast<size_t>(i) * m + k] = s / lkk;
        }
    }
    return log_det;
}

}  // namespace spantree
