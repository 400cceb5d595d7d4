#include "spantree/moments.hpp"

#include <stdexcept>
#include <vector>

#include "spantree/series.hpp"

namespace spantree {

namespace {

BigInt int_pow(long base, long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
}

void require_model(int d, long n) {
    if (d < 3) throw std::invalid_argument("d must be >= 3");
    if (n < 3) throw std::invalid_argument("n must be >= 3");
    if ((static_cast<long>(d) * n) % 2 != 0)
        throw std::invalid_argument("parity: d*n must be even (odd d needs even n)");
}

BigRat mu_of(int d) { return make_rat(BigInt((d - 2)) * (d - 2), BigInt(d - 1)); }

}  // namespace

ShortCycleConstants cycle_constants(int d, int j) {
    if (d < 3 || j < 1) throw std::invalid_argument("cycle_constants: need d >= 3, j >= 1");
    ShortCycleConstants c;
    c.d = d;
    c.j = j;
    const BigInt p = int_pow(d - 1, j);
    c.lambda = make_rat(p, BigInt(2 * j));
    c.zeta = make_rat(-(2 * p - 1), p * p);
    c.lambda_prime = c.lambda * (BigRat(1) + c.zeta);
    return c;
}

BigRat lambda_prime_closed(int d, int j) {
    if (d < 3 || j < 1) throw std::invalid_argument("lambda_prime_closed: need d >= 3, j >= 1");
    const BigInt p = int_pow(d - 1, j);
    const BigInt q = p - 1;
    return make_rat(q * q, BigInt(2 * j) * p);
}

BigRat lambda_prime_enumerate(int d, int j) {
    if (d < 3 || j < 1) throw std::invalid_argument("lambda_prime_enumerate: need d >= 3, j >= 1");
    if (j > 16) throw std::invalid_argument("lambda_prime_enumerate: j <= 16 (2^j - 1 patterns)");
    const BigRat mu = mu_of(d);

    // The j edge slots sit on a j-cycle; bit k of the mask marks edge k as
    // shared with the tree. A maximal cyclic run of r shared edges is a path
    // on r+1 vertices, vertices touching no shared edge are singleton paths.
    BigRat sum(0);
    const unsigned full = (j >= 31) ? 0u : ((1u << j) - 1u);
    for (unsigned mask = 0; mask < full; ++mask) {
        BigRat term(1);
        int paths = 0;
        if (mask == 0) {
            paths = j;
            // j singleton paths, product of k^{q[k]} is 1
        } else {
            int covered = 0;
            for (int k = 0; k < j; ++k) {
                const bool cur = (mask >> k) & 1u;
                const bool prev = (mask >> ((k + j - 1) % j)) & 1u;
                if (cur && !prev) {
                    // run starts at edge k; measure its length
                    int r = 0;
                    while ((mask >> ((k + r) % j)) & 1u) ++r;
                    ++paths;
                    covered += r + 1;
                    term *= BigRat(r + 1);
                }
            }
            const int isolated = j - covered;
            paths += isolated;
        }
        BigRat mup(1);
        for (int t = 0; t < paths; ++t) mup *= mu;
        sum += mup * term;
    }
    return sum / BigRat(2 * j);
}

BigRat lambda_prime_recurrence(int d, int j) {
    if (d < 3 || j < 1) throw std::invalid_argument("lambda_prime_recurrence: need d >= 3, j >= 1");
    const BigRat mu = mu_of(d);

    // L[i][t] = Lambda_{i,t}; L[i][1] = i mu, L[i][t] = sum_k k mu L[i-k][t-1].
    std::vector<std::vector<BigRat>> L(static_cast<size_t>(j) + 1);
    for (int i = 1; i <= j; ++i) {
        L[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, BigRat(0));
        L[static_cast<size_t>(i)][1] = BigRat(i) * mu;
        for (int t = 2; t <= i; ++t) {
            BigRat acc(0);
            for (int k = 1; k <= i - 1; ++k) {
                if (t - 1 <= i - k) acc += BigRat(k) * mu * L[static_cast<size_t>(i - k)][static_cast<size_t>(t - 1)];
            }
            L[static_cast<size_t>(i)][static_cast<size_t>(t)] = acc;
        }
    }
    BigRat sum(0);
    for (int t = 1; t <= j; ++t) sum += BigRat(j) * L[static_cast<size_t>(j)][static_cast<size_t>(t)] / BigRat(t);
    return sum / BigRat(2 * j);
}

BigRat cycle_sum_partial(int d, int j_max) {
    if (d < 3 || j_max < 1) throw std::invalid_argument("cycle_sum_partial: need d >= 3, j_max >= 1");
    // lambda_j zeta_j^2 = (2(d-1)^j - 1)^2 / (2j (d-1)^{3j})
    BigRat sum(0);
    for (int j = 1; j <= j_max; ++j) {
        const BigInt p = int_pow(d - 1, j);
        const BigInt num = (2 * p - 1) * (2 * p - 1);
        sum += make_rat(num, BigInt(2 * j) * p * p * p);
    }
    return sum;
}

Real cycle_sum_exp_closed(int d) {
    if (d < 3) throw std::invalid_argument("cycle_sum_exp_closed: d must be >= 3");
    const long dd = d;
    const BigInt radicand = BigInt(dd - 1) * (dd - 2) * (dd * dd - dd + 1);
    return Real(dd * dd) / sqrt(Real(radicand));
}

Real cycle_sum_exp_truncated(int d, int j_max) { return exp(Real(cycle_sum_partial(d, j_max))); }

BigRat expected_trees_exact(int d, long n) {
    require_model(d, n);
    const long points = d * n;
    BigInt num = factorial(static_cast<unsigned long>(n - 2));
    num *= pairing_count(static_cast<unsigned long>(points - 2 * (n - 1)));
    num *= int_pow(d, n);
    num *= binom((static_cast<long>(d) - 1) * n, n - 2);
    return make_rat(num, pairing_count(static_cast<unsigned long>(points)));
}

double LogValue::mantissa10() const {
    const Real l10 = log_e / log(Real(10));
    return pow(Real(10), l10 - floor(l10)).to_double();
}

long LogValue::exponent10() const {
    const Real l10 = log_e / log(Real(10));
    return static_cast<long>(floor(l10).to_double());
}

LogValue expected_trees_asymptotic(int d, long n) {
    if (d < 3 || n < 1) throw std::invalid_argument("expected_trees_asymptotic: need d >= 3, n >= 1");
    const Real dr(static_cast<long>(d));
    const Real c = Real(6 * static_cast<long>(d) * d - 14 * d + 7) / Real(4 * static_cast<long>(d - 1) * (d - 1));
    Real v = c + Real(0.5) * log(dr - 1) - log(Real(n)) - Real(1.5) * log(dr - 2);
    v += Real(n) * (Real(static_cast<long>(d) - 1) * log(dr - 1) -
                    (dr / 2 - 1) * log(dr * dr - 2 * dr));
    return {v};
}

BigRat second_moment_exact(int d, long n) {
    require_model(d, n);
    const long K = (static_cast<long>(d) - 2) * n / 2;  // (d/2 - 1) n, integral by parity
    const long N = (d == 3) ? n / 2 + 2 : n;

    SeriesPowers powers(component_series(d, static_cast<int>(n)));
    BigRat sum(0);
    for (long b = 1; b <= N; ++b) {
        const BigRat cb = powers.coeff(static_cast<int>(b), static_cast<int>(n));
        if (cb == 0) continue;
        BigInt num;
        mpz_ui_pow_ui(num.get_mpz_t(), 2, static_cast<unsigned long>(b));
        BigInt den = factorial(static_cast<unsigned long>(b));
        den *= factorial(static_cast<unsigned long>(K - b + 2));
        sum += make_rat(num, den) * cb;
    }

    BigInt pre_num = factorial(static_cast<unsigned long>(n));
    pre_num *= factorial(static_cast<unsigned long>((d - 2) * n));
    pre_num *= int_pow(d, n);
    BigInt pre_den;
    mpz_ui_pow_ui(pre_den.get_mpz_t(), 2, static_cast<unsigned long>(K + 2));
    pre_den *= pairing_count(static_cast<unsigned long>(d * n));
    return make_rat(pre_num, pre_den) * sum;
}

Real ratio_p(int d, long n) {
    const BigRat ey = expected_trees_exact(d, n);
    const BigRat ey2 = second_moment_exact(d, n);
    const BigRat ratio = ey2 / (ey * ey);
    return Real(ratio) / cycle_sum_exp_closed(d);
}

MomentReport moment_report(int d, long n) {
    MomentReport r;
    r.d = d;
    r.n = n;
    r.ey = expected_trees_exact(d, n);
    r.ey2 = second_moment_exact(d, n);
    r.ratio = r.ey2 / (r.ey * r.ey);
    r.p = Real(r.ratio) / cycle_sum_exp_closed(d);
    return r;
}

ConjectureGap conjecture_gap(int d, long n) {
    if (d < 4) throw std::invalid_argument("conjecture_gap: stated for d >= 4 only");
    require_model(d, n);
    const long K = (static_cast<long>(d) - 2) * n / 2;

    SeriesPowers powers(component_series(d, static_cast<int>(n)));
    BigRat lhs(0);
    for (long b = 1; b <= n; ++b) {
        const BigRat cb = powers.coeff(static_cast<int>(b), static_cast<int>(n));
        if (cb == 0) continue;
        BigInt num;
        mpz_ui_pow_ui(num.get_mpz_t(), 2, static_cast<unsigned long>(b));
        BigInt den = factorial(static_cast<unsigned long>(b));
        den *= factorial(static_cast<unsigned long>(K - b + 2));
        lhs += make_rat(num, den) * cb;
    }

    ConjectureGap g;
    g.lhs_log = log(Real(lhs));

    const Real dr(static_cast<long>(d));
    Real rhs = log(Real(2) * dr * dr) - log(const_pi()) - Real(4) * log(dr - 2) - Real(3) * log(Real(n));
    rhs += Real(0.5) * (log(Real(2) * dr - 2) - log(dr * dr - dr + 1));
    rhs += Real(n) * (Real(2 * (static_cast<long>(d) - 1)) * log(dr - 1) -
                      Real(2 * (static_cast<long>(d) - 2)) * log(dr - 2) +
                      (dr / 2 - 1) * (log(Real(2)) + Real(1) - log(dr) - log(Real(n))));
    g.rhs_log = rhs;
    g.ratio = exp(g.lhs_log - g.rhs_log).to_double();
    return g;
}

}  // namespace spantree
