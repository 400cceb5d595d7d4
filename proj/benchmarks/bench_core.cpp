#include <benchmark/benchmark.h>

#include "spantree/moments.hpp"
#include "spantree/montecarlo.hpp"
#include "spantree/pairing.hpp"
#include "spantree/rng.hpp"
#include "spantree/series.hpp"
#include "spantree/treecount.hpp"

using namespace spantree;

namespace {

Multigraph random_regular(int d, int n, std::uint64_t seed) {
    Xoshiro256pp rng(seed);
    return project(sample_pairing(d, n, rng));
}

void BM_SpanningTreeCount(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Multigraph g = random_regular(3, n, 17);
    for (auto _ : state) {
        auto tau = spanning_tree_count(g);
        benchmark::DoNotOptimize(tau);
    }
}
BENCHMARK(BM_SpanningTreeCount)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_SpanningTreeLogCount(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Multigraph g = random_regular(3, n, 18);
    for (auto _ : state) {
        double lt = spanning_tree_log_count(g);
        benchmark::DoNotOptimize(lt);
    }
}
BENCHMARK(BM_SpanningTreeLogCount)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

void BM_SamplePairing(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Xoshiro256pp rng(19);
    for (auto _ : state) {
        auto p = sample_pairing(3, n, rng);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_SamplePairing)->Arg(100)->Arg(500);

void BM_SeriesPower(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SeriesPowers powers(component_series(3, n));
        auto c = powers.coeff(n / 2 + 2, n);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SeriesPower)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SecondMomentExact(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        auto v = second_moment_exact(3, n);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_SecondMomentExact)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_RatioP100(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto p = ratio_p(d, 100);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_RatioP100)->Arg(3)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SimulateW(benchmark::State& state) {
    WSimConfig cfg;
    cfg.j_min = 3;
    cfg.j_max = 60;
    cfg.samples = state.range(0);
    cfg.seed = 21;
    for (auto _ : state) {
        auto logs = simulate_w_logs(cfg);
        benchmark::DoNotOptimize(logs);
    }
}
BENCHMARK(BM_SimulateW)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
