#pragma once

#include <vector>

#include "spantree/exact.hpp"
#include "spantree/multigraph.hpp"

namespace spantree {

// Graph Laplacian, row-major n x n: L[u][u] = degree excluding loops,
// L[u][v] = -mult(u,v). Rows sum to zero; symmetric.
std::vector<long> laplacian_matrix(const Multigraph& g);

// Exact number of spanning trees via a principal minor of the Laplacian,
// fraction-free (Bareiss) elimination over BigInt. Loops are dropped before
// assembly; parallel edges enter as multiplicities. 0 iff disconnected.
BigInt spanning_tree_count(const Multigraph& g);

// log tau(G) through a double-precision Cholesky factorization of the
// Laplacian minor; -infinity when disconnected (decided by an integer
// connectivity check, never by the pivot threshold alone).
double spanning_tree_log_count(const Multigraph& g);

}  // namespace spantree
