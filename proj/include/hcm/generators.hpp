#pragma once

#include <cstdint>
#include <string>

#include "hcm/graph.hpp"
#include "hcm/rng.hpp"

namespace hcm {

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
// Vertices are the k-subsets of {0..n-1} in lexicographic order of their
// bitmasks; disjoint subsets are adjacent.
Graph kneser_graph(int n, int k);
// Pairing (configuration) model with whole-graph rejection of loops and
// multi-edges; deterministic under a fixed rng state. Requires n*d even,
// 0 <= d < n.
Graph random_regular(int n, int d, Rng& rng, int max_tries = 5000);
Graph erdos_renyi(int n, double p, Rng& rng);
// s independent copies per vertex, complete bipartite joins across original
// edges.
Graph blow_up(const Graph& g, int s);
// Greedy random graph that never closes a triangle; each vertex's degree is
// capped at max_deg. Used for test corpora.
Graph random_triangle_free(int n, int max_deg, double density, Rng& rng);

// Parses and builds one of:
//   cycle(n), complete(n), complete_bipartite(a,b), path(n), kneser(n,k),
//   random_regular(n,d), erdos_renyi(n,p), blowup(<spec>,s)
// Random families consume the rng.
Graph generate(const std::string& spec, Rng& rng);

}  // namespace hcm
