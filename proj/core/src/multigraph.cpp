#include "spantree/multigraph.hpp"

#include <stdexcept>

namespace spantree {

Multigraph::Multigraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Multigraph: n must be >= 1");
    m_.assign(static_cast<size_t>(n) * n, 0);
}

void Multigraph::add_edge(int u, int v, int count) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("add_edge: vertex out of range");
    m_[static_cast<size_t>(u) * n_ + v] += count;
    if (u != v) m_[static_cast<size_t>(v) * n_ + u] += count;
}

int Multigraph::degree(int v) const {
    int deg = 0;
    for (int u = 0; u < n_; ++u) deg += mult(v, u);
    return deg + mult(v, v);  // loops twice
}

long Multigraph::edge_total() const {
    long e = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u; v < n_; ++v) e += mult(u, v);
    return e;
}

bool is_simple(const Multigraph& g) {
    const int n = g.order();
    for (int v = 0; v < n; ++v)
        if (g.mult(v, v) > 0) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.mult(u, v) > 1) return false;
    return true;
}

bool is_connected(const Multigraph& g) {
    const int n = g.order();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (!seen[v] && v != u && g.mult(u, v) > 0) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

namespace {

// Rooted DFS over vertices > start, direction fixed by path[1] < path.back().
void cycle_dfs(const Multigraph& g, int start, std::vector<int>& path, std::vector<char>& used,
               long weight, int target_len, long& total) {
    const int u = path.back();
    if (static_cast<int>(path.size()) == target_len) {
        const int closing = g.mult(u, start);
        if (closing > 0 && path[1] < u) total += weight * closing;
        return;
    }
    for (int v = start + 1; v < g.order(); ++v) {
        if (used[v]) continue;
        const int m = g.mult(u, v);
        if (m == 0) continue;
        used[v] = 1;
        path.push_back(v);
        cycle_dfs(g, start, path, used, weight * m, target_len, total);
        path.pop_back();
        used[v] = 0;
    }
}

}  // namespace

std::vector<long> cycle_counts(const Multigraph& g, int m) {
    if (m < 1) throw std::invalid_argument("cycle_counts: m must be >= 1");
    const int n = g.order();
    std::vector<long> x(static_cast<size_t>(m), 0);

    for (int v = 0; v < n; ++v) x[0] += g.mult(v, v);
    if (m >= 2) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const long k = g.mult(u, v);
                x[1] += k * (k - 1) / 2;
            }
    }
    for (int j = 3; j <= m; ++j) {
        long total = 0;
        std::vector<int> path;
        std::vector<char> used(static_cast<size_t>(n), 0);
        for (int s = 0; s + j <= n + 0 && s < n; ++s) {
            path.assign(1, s);
            used.assign(static_cast<size_t>(n), 0);
            used[s] = 1;
            cycle_dfs(g, s, path, used, 1, j, total);
        }
        x[static_cast<size_t>(j) - 1] = total;
    }
    return x;
}

}  // namespace spantree
