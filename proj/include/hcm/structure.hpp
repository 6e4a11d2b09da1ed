#pragma once

#include <gmpxx.h>

#include "hcm/graph.hpp"

namespace hcm {

using Rational = mpq_class;

// Exact mad(G) = max over non-empty subgraphs H of 2|E(H)|/|V(H)|, computed by
// binary search over candidate densities with a max-flow feasibility test.
// Candidate densities have denominator <= n, so the search terminates with the
// exact value. Throws regime_error on the empty graph.
Rational max_average_degree(const Graph& g);

// Exact Hall ratio max{|S| / alpha(G[S])} over non-empty vertex subsets, by a
// 2^n independence-number table. Throws cap_error when n exceeds the cap.
Rational hall_ratio(const Graph& g, int cap = 24);

// Maximum clique size via branch and bound with a greedy colouring bound.
int clique_number(const Graph& g);

// Independence number (clique number of the complement's view, computed
// directly by branch and bound on non-neighbours).
int independence_number(const Graph& g);

// Number of unordered copies of the path on k-1 vertices inside G[N(u)];
// requires k >= 3.
long long local_path_count(const Graph& g, int u, int k);

// Degeneracy by repeated minimum-degree removal.
int degeneracy(const Graph& g);

// Largest clique size over cliques containing u.
int clique_number_at(const Graph& g, int u);

}  // namespace hcm
