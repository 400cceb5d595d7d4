#include "spantree/pairing.hpp"

#include <numeric>

namespace spantree {

Pairing sample_pairing(int d, int n, Xoshiro256pp& rng) {
    const long points = static_cast<long>(d) * n;
    if (d < 1 || n < 1 || points % 2 != 0)
        throw std::invalid_argument("sample_pairing: need d,n >= 1 and d*n even");

    std::vector<int> perm(static_cast<size_t>(points));
    std::iota(perm.begin(), perm.end(), 0);
    for (long i = points - 1; i > 0; --i) {
        const auto j = static_cast<long>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }

    Pairing p;
    p.d = d;
    p.n = n;
    p.mate.assign(static_cast<size_t>(points), -1);
    for (long k = 0; k < points; k += 2) {
        const int a = perm[static_cast<size_t>(k)];
        const int b = perm[static_cast<size_t>(k) + 1];
        p.mate[static_cast<size_t>(a)] = b;
        p.mate[static_cast<size_t>(b)] = a;
    }
    return p;
}

Multigraph project(const Pairing& p) {
    Multigraph g(p.n);
    const int points = static_cast<int>(p.mate.size());
    for (int i = 0; i < points; ++i) {
        const int j = p.mate[static_cast<size_t>(i)];
        if (j > i) g.add_edge(i / p.d, j / p.d);
    }
    return g;
}

}  // namespace spantree
