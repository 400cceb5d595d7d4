#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "spantree/exact.hpp"
#include "spantree/multigraph.hpp"
#include "spantree/pairing.hpp"
#include "spantree/rng.hpp"

using namespace spantree;

namespace {

// Canonical representation for grouping projections / pairings.
std::vector<int> graph_key(const Multigraph& g) {
    std::vector<int> key;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u; v < g.order(); ++v) key.push_back(g.mult(u, v));
    return key;
}

// Independent cycle-count oracle: enumerate vertex subsets and cyclic orders.
long oracle_cycles(const Multigraph& g, int j) {
    const int n = g.order();
    std::vector<int> verts(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) verts[static_cast<size_t>(i)] = i;
    long total = 0;
    // choose subsets of size j, then count distinct cyclic arrangements
    std::vector<int> comb(static_cast<size_t>(j));
    std::function<void(int, int)> choose = [&](int start, int depth) {
        if (depth == j) {
            std::vector<int> perm(comb.begin() + 1, comb.end());
            std::sort(perm.begin(), perm.end());
            std::set<std::vector<int>> seen;
            do {
                std::vector<int> cyc{comb[0]};
                cyc.insert(cyc.end(), perm.begin(), perm.end());
                // canonical: fix smallest first; identify the two directions
                std::vector<int> rev{cyc[0]};
                rev.insert(rev.end(), cyc.rbegin(), cyc.rend() - 1);
                if (seen.count(cyc) || seen.count(rev)) continue;
                seen.insert(cyc);
                long w = 1;
                for (int t = 0; t < j; ++t) w *= g.mult(cyc[static_cast<size_t>(t)],
                                                        cyc[static_cast<size_t>((t + 1) % j)]);
                total += w;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return;
        }
        for (int v = start; v < n; ++v) {
            comb[static_cast<size_t>(depth)] = v;
            choose(v + 1, depth + 1);
        }
    };
    choose(0, 0);
    return total;
}

}  // namespace

TEST_CASE("enumerate_pairings visit counts") {
    long count = 0;
    enumerate_pairings(3, 4, [&](const Pairing&) { ++count; });
    CHECK(count == 10395);  // #P(12)

    count = 0;
    enumerate_pairings(1, 2, [&](const Pairing&) { ++count; });
    CHECK(count == 1);

    count = 0;
    enumerate_pairings(2, 2, [&](const Pairing&) { ++count; });
    CHECK(count == 3);

    CHECK_THROWS_AS(enumerate_pairings(4, 5, [](const Pairing&) {}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_pairings(3, 3, [](const Pairing&) {}), std::invalid_argument);
}

TEST_CASE("projection basics") {
    // d=2, n=1: the unique pairing projects to a single loop
    Pairing p;
    p.d = 2;
    p.n = 1;
    p.mate = {1, 0};
    const Multigraph g = project(p);
    CHECK(g.mult(0, 0) == 1);
    CHECK(g.degree(0) == 2);

    // d=3, n=2 with all pairs across buckets: a triple edge
    Pairing q;
    q.d = 3;
    q.n = 2;
    q.mate = {3, 4, 5, 0, 1, 2};
    const Multigraph h = project(q);
    CHECK(h.mult(0, 1) == 3);
    CHECK_FALSE(is_simple(h));
}

TEST_CASE("projected degrees are always d") {
    Xoshiro256pp rng(0x5EED0003);
    for (int it = 0; it < 50; ++it) {
        const int d = 2 + static_cast<int>(rng.below(4));
        int n = 2 + static_cast<int>(rng.below(7));
        if ((d * n) % 2 != 0) ++n;
        const Multigraph g = project(sample_pairing(d, n, rng));
        long handshake = 0;
        for (int v = 0; v < n; ++v) {
            CHECK(g.degree(v) == d);
            handshake += g.degree(v);
        }
        CHECK(handshake == static_cast<long>(d) * n);
    }
}

TEST_CASE("is_simple") {
    Multigraph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    CHECK(is_simple(tri));

    Multigraph loop(1);
    loop.add_edge(0, 0);
    CHECK_FALSE(is_simple(loop));

    Multigraph dbl(2);
    dbl.add_edge(0, 1, 2);
    CHECK_FALSE(is_simple(dbl));
}

TEST_CASE("cycle_counts fixtures and oracle") {
    Multigraph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    const auto x = cycle_counts(k4, 4);
    CHECK(x[0] == 0);
    CHECK(x[1] == 0);
    CHECK(x[2] == 4);
    CHECK(x[3] == 3);
    CHECK(oracle_cycles(k4, 3) == 4);
    CHECK(oracle_cycles(k4, 4) == 3);

    Multigraph loop(1);
    loop.add_edge(0, 0);
    const auto xl = cycle_counts(loop, 2);
    CHECK(xl[0] == 1);
    CHECK(xl[1] == 0);

    Multigraph triple(2);
    triple.add_edge(0, 1, 3);
    const auto xt = cycle_counts(triple, 3);
    CHECK(xt[0] == 0);
    CHECK(xt[1] == 3);  // binom(3,2) parallel pairs
    CHECK(xt[2] == 0);
}

TEST_CASE("cycle_counts agrees with the subset oracle on random multigraphs") {
    Xoshiro256pp rng(0x5EED0004);
    for (int it = 0; it < 40; ++it) {
        const int n = 3 + static_cast<int>(rng.below(4));
        Multigraph g(n);
        const int edges = 2 + static_cast<int>(rng.below(8));
        for (int e = 0; e < edges; ++e) {
            const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            g.add_edge(u, v);
        }
        const auto x = cycle_counts(g, 6);
        for (int j = 3; j <= std::min(6, n); ++j)
            CHECK(x[static_cast<size_t>(j - 1)] == oracle_cycles(g, j));
    }
}

TEST_CASE("sampler hits every (d=2, n=3) pairing uniformly") {
    const long draws = 100000;
    std::map<std::vector<int>, long> freq;
    Xoshiro256pp rng(0x5EED0005);
    for (long i = 0; i < draws; ++i) freq[sample_pairing(2, 3, rng).mate]++;
    CHECK(freq.size() == 15);  // #P(6)
    const double p = 1.0 / 15.0;
    const double sigma = std::sqrt(draws * p * (1 - p));
    for (const auto& [mate, count] : freq)
        CHECK(std::fabs(static_cast<double>(count) - draws * p) <= 5.0 * sigma);
}

TEST_CASE("every simple projection arises from exactly (d!)^n pairings") {
    auto run = [](int d, int n, long expect_simple_graph_preimages) {
        std::map<std::vector<int>, long> preimages;
        enumerate_pairings(d, n, [&](const Pairing& p) {
            const Multigraph g = project(p);
            if (is_simple(g)) preimages[graph_key(g)]++;
        });
        CHECK(!preimages.empty());
        for (const auto& [key, count] : preimages) CHECK(count == expect_simple_graph_preimages);
    };
    run(2, 3, 8);     // (2!)^3
    run(3, 4, 1296);  // (3!)^4
}

TEST_CASE("simple-projection rate at (3,4) matches the exhaustive value") {
    // Exhaustively, 1296 of the 10395 pairings project to a simple graph
    // (K4): rate 0.124675. At n=4 this is visibly below the asymptotic
    // e^{-2}, so the Monte Carlo check targets the exact rate.
    const double exact_rate = 1296.0 / 10395.0;
    const long draws = 100000;
    Xoshiro256pp rng(0x5EED0006);
    long simple = 0;
    for (long i = 0; i < draws; ++i)
        if (is_simple(project(sample_pairing(3, 4, rng)))) ++simple;
    const double rate = static_cast<double>(simple) / draws;
    const double se = std::sqrt(exact_rate * (1 - exact_rate) / draws);
    CHECK(std::fabs(rate - exact_rate) <= 4.0 * se);
}

TEST_CASE("Poisson limits of short cycle counts at (3, 100)") {
    const long draws = 10000;
    double sx1 = 0, sx2 = 0, sq1 = 0, sq2 = 0;
    for (long i = 0; i < draws; ++i) {
        Xoshiro256pp rng = stream_rng(0x5EED0007, static_cast<std::uint64_t>(i));
        const auto x = cycle_counts(project(sample_pairing(3, 100, rng)), 2);
        sx1 += static_cast<double>(x[0]);
        sx2 += static_cast<double>(x[1]);
        sq1 += static_cast<double>(x[0]) * x[0];
        sq2 += static_cast<double>(x[1]) * x[1];
    }
    const double m1 = sx1 / draws, m2 = sx2 / draws;
    const double se1 = std::sqrt((sq1 / draws - m1 * m1) / draws);
    const double se2 = std::sqrt((sq2 / draws - m2 * m2) / draws);
    CHECK(std::fabs(m1 - 1.0) <= 4.0 * se1);  // lambda_1(3) = 1
    CHECK(std::fabs(m2 - 1.0) <= 4.0 * se2);  // lambda_2(3) = 1
}
