#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spantree/multigraph.hpp"
#include "spantree/rng.hpp"

namespace spantree {

// Configuration model: a perfect matching on d*n prevertices, bucket of
// prevertex i is i/d. mate is a fixed-point-free involution.
struct Pairing {
    int d = 0;
    int n = 0;
    std::vector<int> mate;
};

// Uniform random pairing: shuffle the prevertices and pair consecutive ones.
Pairing sample_pairing(int d, int n, Xoshiro256pp& rng);

Multigraph project(const Pairing& p);

// Largest exhaustive enumeration we allow: #P(18) = 34459425 pairings.
inline constexpr int kMaxEnumerationPoints = 18;

// Visits every pairing of d*n prevertices exactly once, in the canonical
// order that always matches the lowest unmatched prevertex next. The visitor
// receives a reused Pairing buffer.
template <class Visitor>
void enumerate_pairings(int d, int n, Visitor&& visit) {
    const long points = static_cast<long>(d) * n;
    if (d < 1 || n < 1 || points % 2 != 0)
        throw std::invalid_argument("enumerate_pairings: need d,n >= 1 and d*n even");
    if (points > kMaxEnumerationPoints)
        throw std::invalid_argument("enumerate_pairings: d*n exceeds the supported bound of 18 points");

    Pairing p;
    p.d = d;
    p.n = n;
    p.mate.assign(static_cast<size_t>(points), -1);

    // Explicit stack of (i, j) choices; recursion depth is points/2.
    struct Frame { int i, j; };
    std::vector<Frame> stack;
    stack.reserve(static_cast<size_t>(points / 2));

    int matched = 0;
    int i = 0, j = 1;
    for (;;) {
        // find lowest unmatched prevertex i, then a partner j > i
        while (j < points && p.mate[static_cast<size_t>(j)] != -1) ++j;
        if (j < points) {
            p.mate[static_cast<size_t>(i)] = j;
            p.mate[static_cast<size_t>(j)] = i;
            stack.push_back({i, j});
            matched += 2;
            if (matched == points) {
                visit(const_cast<const Pairing&>(p));
                // unwind one level and continue from the last choice
                auto f = stack.back();
                stack.pop_back();
                p.mate[static_cast<size_t>(f.i)] = -1;
                p.mate[static_cast<size_t>(f.j)] = -1;
                matched -= 2;
                i = f.i;
                j = f.j + 1;
            } else {
                i = 0;
                while (p.mate[static_cast<size_t>(i)] != -1) ++i;
                j = i + 1;
            }
        } else {
            if (stack.empty()) break;
            auto f = stack.back();
            stack.pop_back();
            p.mate[static_cast<size_t>(f.i)] = -1;
            p.mate[static_cast<size_t>(f.j)] = -1;
            matched -= 2;
            i = f.i;
            j = f.j + 1;
        }
    }
}

}  // namespace spantree
