#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spantree/multigraph.hpp"
#include "spantree/rng.hpp"

namespace spantree {

// Poisson draw: inversion for lambda <= 30, PTRS rejection above, and a
// rounded-normal tail for lambda > 1e9 where the rejection test loses all
// double precision (the approximation error is far below anything the W
// factors can resolve).
long poisson_draw(double lambda, Xoshiro256pp& rng);

struct WSimConfig {
    int d = 3;
    int j_min = 3;  // 1 for the full product, 3 for the conditioned variant
    int j_max = 60;
    long samples = 0;
    std::uint64_t seed = 0;

    // j_min in {1,3}, j_max >= j_min, and truncated tail of lambda_j zeta_j^2
    // below 1e-10.
    void validate() const;
};

// i.i.d. samples of log W, W = prod_j (1+zeta_j)^{Z_j} exp(-lambda_j zeta_j),
// Z_j ~ Poisson(lambda_j) independent, j in [j_min, j_max].
std::vector<double> simulate_w_logs(const WSimConfig& cfg, int workers = 1);
std::vector<double> simulate_w(const WSimConfig& cfg, int workers = 1);

// The same product evaluated at fixed counts z[0..j_max-j_min]; this is the
// deterministic path simulate_w_logs composes with its Poisson draws.
double w_log_at_counts(const WSimConfig& cfg, const std::vector<long>& z);

struct MeanSe {
    double mean = 0;
    double se = 0;
};

struct MomentEstimate {
    MeanSe y;
    MeanSe y_sq;
    long samples = 0;
};

// Sample mean/SE of tau and tau^2 over uniform pairings. Exact integer tau
// for n <= 30, log-space otherwise.
MomentEstimate estimate_ey(int d, int n, long samples, std::uint64_t seed, int workers = 1);

struct RatioEstimate {
    double ratio = 0;
    double se = 0;  // delta-method standard error
};

// (sum tau * prod_j falling(X_j, rho_j)) / (sum tau). tau_scale multiplies
// every tau and must not change the result (the estimator is a ratio).
RatioEstimate estimate_a2prime_ratio(int d, int n, const CycleProfile& rho, long samples,
                                     std::uint64_t seed, int workers = 1, double tau_scale = 1.0);

double two_sample_ks(std::vector<double> a, std::vector<double> b);

struct DistTest {
    double ks = 0;
    std::vector<double> graph_deciles;  // 0%, 10%, ..., 100% of log(Y_G / E[Y_G])
    std::vector<double> w_deciles;      // same for log W'
    long attempts = 0;                  // pairings drawn until enough simple ones
    double simple_rate = 0;
};

// Theorem-level comparison at d=3: conditioned pairing samples of
// log(tau) - log E[Y_G] against simulated log W' (j from 3).
DistTest empirical_distribution_test(int d, int n, long graph_samples, long w_samples,
                                     std::uint64_t seed, int workers = 1);

struct SampleBatch {
    int d = 0;
    int n = 0;
    int m = 0;  // cycle counts X_1..X_m per record
    long samples = 0;
    std::uint64_t seed = 0;
    int workers = 1;
    std::string generator = kGeneratorId;

    std::vector<double> log_tau;         // -inf if disconnected
    std::vector<std::uint8_t> simple;
    std::vector<long> cycles;            // row-major samples x m

    std::string to_csv() const;
    std::string meta_json(long precision_bits) const;
};

SampleBatch sample_batch(int d, int n, long samples, int m, std::uint64_t seed, int workers = 1);

}  // namespace spantree
