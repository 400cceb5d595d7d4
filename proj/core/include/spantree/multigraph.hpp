#pragma once

#include <vector>

namespace spantree {

// Labelled multigraph with loops, stored as a symmetric multiplicity matrix.
// A loop is stored once at (v, v) and contributes 2 to the degree.
class Multigraph {
public:
    explicit Multigraph(int n);

    int order() const { return n_; }
    int mult(int u, int v) const { return m_[static_cast<size_t>(u) * n_ + v]; }
    void add_edge(int u, int v, int count = 1);
    int degree(int v) const;
    long edge_total() const;  // every edge once, loops included

private:
    int n_;
    std::vector<int> m_;
};

bool is_simple(const Multigraph& g);
bool is_connected(const Multigraph& g);

using CycleProfile = std::vector<int>;

// (X_1, ..., X_m): X_1 counts loops, X_2 counts unordered pairs of parallel
// edges, and for j >= 3 each unordered j-cycle on distinct vertices counts
// once, weighted by the product of edge multiplicities along it. (Loops and
// parallel pairs never enter a cycle of length >= 3; the multiplicity-product
// weighting for j >= 3 is our convention for multigraphs.)
std::vector<long> cycle_counts(const Multigraph& g, int m);

}  // namespace spantree
