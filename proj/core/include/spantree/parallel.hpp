#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace spantree {

// Static contiguous split of [0, total) across `workers` threads. The callable
// gets [begin, end) and must write only to disjoint, preallocated slots, so
// the merged output never depends on the worker count. fn must not throw.
template <class Fn>
void parallel_for(long total, int workers, Fn&& fn) {
    if (total <= 0) return;
    long w = std::max(1, workers);
    w = std::min(w, total);
    if (w == 1) {
        fn(0L, total);
        return;
    }
    const long chunk = (total + w - 1) / w;
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(w));
    for (long t = 0; t < w; ++t) {
        const long b = t * chunk;
        const long e = std::min(total, b + chunk);
        if (b >= e) break;
        threads.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& th : threads) th.join();
}

}  // namespace spantree
