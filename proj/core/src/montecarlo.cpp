#include "spantree/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "spantree/moments.hpp"
#include "spantree/pairing.hpp"
#include "spantree/parallel.hpp"
#include "spantree/treecount.hpp"

namespace spantree {

namespace {

constexpr std::uint64_t kDomainPairings = 1;
constexpr std::uint64_t kDomainW = 2;

double falling_d(long x, int k) {
    double r = 1;
    for (int i = 0; i < k; ++i) r *= static_cast<double>(x - i);
    return r;
}

struct Welford {
    // plain sums with compensation; enough for the SE scales we test at
    long double s = 0, s2 = 0;
    long n = 0;
    void add(double x) {
        s += x;
        s2 += static_cast<long double>(x) * x;
        ++n;
    }
    MeanSe stats() const {
        MeanSe m;
        m.mean = static_cast<double>(s / n);
        const long double var = (s2 - s * s / n) / (n - 1);
        m.se = static_cast<double>(std::sqrt(static_cast<double>(var) / static_cast<double>(n)));
        return m;
    }
};

double quantile(const std::vector<double>& sorted, double q) {
    const double idx = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<size_t>(idx);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = idx - static_cast<double>(lo);
    return sorted[lo] + (sorted[lo + 1] - sorted[lo]) * frac;
}

std::vector<double> deciles(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    out.reserve(11);
    for (int k = 0; k <= 10; ++k) out.push_back(quantile(v, k / 10.0));
    return out;
}

}  // namespace

long poisson_draw(double lambda, Xoshiro256pp& rng) {
    if (lambda < 0) throw std::invalid_argument("poisson_draw: lambda must be >= 0");
    if (lambda == 0) return 0;
    if (lambda <= 30.0) {
        const double u = rng.uniform();
        double p = std::exp(-lambda), cdf = p;
        long k = 0;
        const long cap = static_cast<long>(lambda + 40.0 * std::sqrt(lambda) + 32.0);
        while (u > cdf && k < cap) {
            ++k;
            p *= lambda / static_cast<double>(k);
            cdf += p;
        }
        return k;
    }
    if (lambda > 1e9) {
        const double z = lambda + std::sqrt(lambda) * rng.gaussian();
        return z < 0 ? 0 : static_cast<long>(std::llround(z));
    }
    // PTRS (transformed rejection with squeeze)
    const double b = 0.931 + 2.53 * std::sqrt(lambda);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_lambda = std::log(lambda);
    for (;;) {
        const double u = rng.uniform() - 0.5;
        const double v = rng.uniform();
        const double us = 0.5 - std::fabs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<long>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            kf * log_lambda - lambda - std::lgamma(kf + 1.0))
            return static_cast<long>(kf);
    }
}

void WSimConfig::validate() const {
    if (d < 3) throw std::invalid_argument("WSimConfig: d must be >= 3");
    if (j_min != 1 && j_min != 3) throw std::invalid_argument("WSimConfig: j_min must be 1 or 3");
    if (j_max < j_min) throw std::invalid_argument("WSimConfig: j_max must be >= j_min");
    // Tail of sum lambda_j zeta_j^2 beyond j_max must be negligible.
    const Real tail = log(cycle_sum_exp_closed(d)) - Real(cycle_sum_partial(d, j_max));
    if (!(tail.to_double() < 1e-10))
        throw std::invalid_argument("WSimConfig: truncation tail above 1e-10; raise j_max");
}

namespace {

struct WFactors {
    std::vector<double> lambda;       // indexed from j_min
    std::vector<double> log1pzeta;
    std::vector<double> lz;           // lambda_j * zeta_j
};

WFactors w_factors(const WSimConfig& cfg) {
    WFactors f;
    for (int j = cfg.j_min; j <= cfg.j_max; ++j) {
        const auto c = cycle_constants(cfg.d, j);
        f.lambda.push_back(Real(c.lambda).to_double());
        f.log1pzeta.push_back(log(Real(BigRat(1) + c.zeta)).to_double());
        f.lz.push_back(Real(c.lambda * c.zeta).to_double());
    }
    return f;
}

}  // namespace

double w_log_at_counts(const WSimConfig& cfg, const std::vector<long>& z) {
    cfg.validate();
    const WFactors f = w_factors(cfg);
    if (z.size() != f.lambda.size())
        throw std::invalid_argument("w_log_at_counts: need one count per factor");
    double lw = 0;
    for (size_t i = 0; i < z.size(); ++i)
        lw += static_cast<double>(z[i]) * f.log1pzeta[i] - f.lz[i];
    return lw;
}

std::vector<double> simulate_w_logs(const WSimConfig& cfg, int workers) {
    cfg.validate();
    if (cfg.samples < 1) throw std::invalid_argument("simulate_w_logs: samples must be >= 1");
    const WFactors f = w_factors(cfg);
    std::vector<double> out(static_cast<size_t>(cfg.samples));
    parallel_for(cfg.samples, workers, [&](long lo, long hi) {
        for (long i = lo; i < hi; ++i) {
            Xoshiro256pp rng = stream_rng(cfg.seed, static_cast<std::uint64_t>(i));
            double lw = 0;
            for (size_t k = 0; k < f.lambda.size(); ++k) {
                const long zk = poisson_draw(f.lambda[k], rng);
                lw += static_cast<double>(zk) * f.log1pzeta[k] - f.lz[k];
            }
            out[static_cast<size_t>(i)] = lw;
        }
    });
    return out;
}

MomentEstimate estimate_ey(int d, int n, long samples, std::uint64_t seed, int workers) {
    if (samples < 2) throw std::invalid_argument("estimate_ey: samples must be >= 2");
    const bool exact = n <= 30;
    std::vector<double> tau(static_cast<size_t>(samples));
    parallel_for(samples, workers, [&](long lo, long hi) {
        for (long i = lo; i < hi; ++i) {
            Xoshiro256pp rng = stream_rng(seed, static_cast<std::uint64_t>(i));
            const Multigraph g = project(sample_pairing(d, n, rng));
            tau[static_cast<size_t>(i)] =
                exact ? spanning_tree_count(g).get_d() : std::exp(spanning_tree_log_count(g));
        }
    });
    Welford wy, wy2;
    for (double t : tau) {
        wy.add(t);
        wy2.add(t * t);
    }
    MomentEstimate e;
    e.y = wy.stats();
    e.y_sq = wy2.stats();
    e.samples = samples;
    return e;
}

RatioEstimate estimate_a2prime_ratio(int d, int n, const CycleProfile& rho, long samples,
                                     std::uint64_t seed, int workers, double tau_scale) {
    if (samples < 2) throw std::invalid_argument("estimate_a2prime_ratio: samples must be >= 2");
    const int m = static_cast<int>(rho.size());
    std::vector<double> num(static_cast<size_t>(samples)), den(static_cast<size_t>(samples));
    parallel_for(samples, workers, [&](long lo, long hi) {
        for (long i = lo; i < hi; ++i) {
            Xoshiro256pp rng = stream_rng(seed, static_cast<std::uint64_t>(i));
            const Multigraph g = project(sample_pairing(d, n, rng));
            double tau;
            if (n <= 30) {
                tau = spanning_tree_count(g).get_d() * tau_scale;
            } else {
                const double lt = spanning_tree_log_count(g);
                tau = std::isinf(lt) ? 0.0 : std::exp(lt) * tau_scale;
            }
            double xr = 1.0;
            if (m > 0) {
                const auto x = cycle_counts(g, m);
                for (int j = 0; j < m; ++j)
                    if (rho[static_cast<size_t>(j)] > 0)
                        xr *= falling_d(x[static_cast<size_t>(j)], rho[static_cast<size_t>(j)]);
            }
            den[static_cast<size_t>(i)] = tau;
            num[static_cast<size_t>(i)] = tau * xr;
        }
    });

    long double sn = 0, sd = 0;
    for (long i = 0; i < samples; ++i) {
        sn += num[static_cast<size_t>(i)];
        sd += den[static_cast<size_t>(i)];
    }
    if (sd == 0) throw std::runtime_error("estimate_a2prime_ratio: zero denominator");
    const double r = static_cast<double>(sn / sd);

    // delta method on (mean num, mean den)
    const double mean_d = static_cast<double>(sd) / static_cast<double>(samples);
    long double acc = 0;
    for (long i = 0; i < samples; ++i) {
        const double e = (num[static_cast<size_t>(i)] - r * den[static_cast<size_t>(i)]) / mean_d;
        acc += static_cast<long double>(e) * e;
    }
    RatioEstimate out;
    out.ratio = r;
    out.se = std::sqrt(static_cast<double>(acc) / static_cast<double>(samples - 1) /
                       static_cast<double>(samples));
    return out;
}

double two_sample_ks(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("two_sample_ks: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    size_t i = 0, j = 0;
    double d = 0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == x) ++i;
        while (j < b.size() && b[j] == x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

DistTest empirical_distribution_test(int d, int n, long graph_samples, long w_samples,
                                     std::uint64_t seed, int workers) {
    if (d != 3) throw std::invalid_argument("empirical_distribution_test: stated for d = 3");
    if (n % 2 != 0) throw std::invalid_argument("empirical_distribution_test: n must be even");
    if (n > 500) throw std::invalid_argument("empirical_distribution_test: n above 500 not supported");
    if (graph_samples < 10 || w_samples < 10)
        throw std::invalid_argument("empirical_distribution_test: need at least 10 samples per side");

    const double expected_log = expected_trees_asymptotic(d, n).log_e.to_double();
    const std::uint64_t gseed = derive_seed(seed, kDomainPairings);

    // Attempts are consumed in index order in fixed-size blocks, so the
    // outcome is identical for every worker count.
    const long block = 4096;
    const long cap = graph_samples * 64 + 100000;
    std::vector<double> glogs;
    glogs.reserve(static_cast<size_t>(graph_samples));
    std::vector<double> slot_log(static_cast<size_t>(block));
    std::vector<std::uint8_t> slot_ok(static_cast<size_t>(block));
    long base = 0, consumed = 0;
    while (static_cast<long>(glogs.size()) < graph_samples) {
        if (base > cap)
            throw std::runtime_error("empirical_distribution_test: not enough simple projections");
        parallel_for(block, workers, [&](long lo, long hi) {
            for (long k = lo; k < hi; ++k) {
                Xoshiro256pp rng = stream_rng(gseed, static_cast<std::uint64_t>(base + k));
                const Multigraph g = project(sample_pairing(d, n, rng));
                if (is_simple(g)) {
                    slot_log[static_cast<size_t>(k)] = spanning_tree_log_count(g);
                    slot_ok[static_cast<size_t>(k)] = 1;
                } else {
                    slot_ok[static_cast<size_t>(k)] = 0;
                }
            }
        });
        for (long k = 0; k < block && static_cast<long>(glogs.size()) < graph_samples; ++k) {
            if (slot_ok[static_cast<size_t>(k)])
                glogs.push_back(slot_log[static_cast<size_t>(k)] - expected_log);
            consumed = base + k + 1;
        }
        base += block;
    }

    WSimConfig cfg;
    cfg.d = d;
    cfg.j_min = 3;
    cfg.j_max = 60;
    cfg.samples = w_samples;
    cfg.seed = derive_seed(seed, kDomainW);
    std::vector<double> wlogs = simulate_w_logs(cfg, workers);

    DistTest t;
    t.ks = two_sample_ks(glogs, wlogs);
    t.graph_deciles = deciles(std::move(glogs));
    t.w_deciles = deciles(std::move(wlogs));
    t.attempts = consumed;
    t.simple_rate = static_cast<double>(graph_samples) / static_cast<double>(consumed);
    return t;
}

SampleBatch sample_batch(int d, int n, long samples, int m, std::uint64_t seed, int workers) {
    if (samples < 1) throw std::invalid_argument("sample_batch: samples must be >= 1");
    if (m < 1) throw std::invalid_argument("sample_batch: m must be >= 1");
    SampleBatch b;
    b.d = d;
    b.n = n;
    b.m = m;
    b.samples = samples;
    b.seed = seed;
    b.workers = workers;
    b.log_tau.assign(static_cast<size_t>(samples), 0.0);
    b.simple.assign(static_cast<size_t>(samples), 0);
    b.cycles.assign(static_cast<size_t>(samples) * m, 0);
    parallel_for(samples, workers, [&](long lo, long hi) {
        for (long i = lo; i < hi; ++i) {
            Xoshiro256pp rng = stream_rng(seed, static_cast<std::uint64_t>(i));
            const Multigraph g = project(sample_pairing(d, n, rng));
            b.log_tau[static_cast<size_t>(i)] = spanning_tree_log_count(g);
            b.simple[static_cast<size_t>(i)] = is_simple(g) ? 1 : 0;
            const auto x = cycle_counts(g, m);
            for (int j = 0; j < m; ++j) b.cycles[static_cast<size_t>(i) * m + j] = x[static_cast<size_t>(j)];
        }
    });
    return b;
}

std::string SampleBatch::to_csv() const {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << "index,log_tau,simple";
    for (int j = 1; j <= m; ++j) os << ",x" << j;
    os << "\n";
    char buf[64];
    for (long i = 0; i < samples; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", log_tau[static_cast<size_t>(i)]);
        os << i << ',' << buf << ',' << static_cast<int>(simple[static_cast<size_t>(i)]);
        for (int j = 0; j < m; ++j) os << ',' << cycles[static_cast<size_t>(i) * m + j];
        os << "\n";
    }
    return os.str();
}

std::string SampleBatch::meta_json(long precision_bits) const {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << "{\n"
       << "  \"d\": " << d << ",\n"
       << "  \"n\": " << n << ",\n"
       << "  \"m\": " << m << ",\n"
       << "  \"samples\": " << samples << ",\n"
       << "  \"seed\": " << seed << ",\n"
       << "  \"workers\": " << workers << ",\n"
       << "  \"generator\": \"" << generator << "\",\n"
       << "  \"precision_bits\": " << precision_bits << "\n"
       << "}\n";
    return os.str();
}

}  // namespace spantree
