#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcm/graph.hpp"
#include "hcm/rng.hpp"

namespace hcm {

struct SplitAudit {
    double degree_bound = 0;       // Delta/2 + 2 sqrt(Delta log Delta)
    double nbhd_edge_bound = 0;    // s/4 + 2 Delta^{3/2} sqrt(log Delta)
    int part_max_degree[2] = {0, 0};
    long long part_max_nbhd_edges[2] = {0, 0};
    bool vacuous = false;  // Delta <= 1: the bounds do not constrain anything
    int tries = 0;
};

struct SplitPartitionResult {
    bool success = false;
    std::vector<int> side;  // 0/1 per vertex
    SplitAudit audit;       // best attempt's audit on failure
};

// max over vertices of the number of edges spanned by its neighbourhood.
long long max_neighbourhood_edges(const Graph& g);

// Uniform random bipartition retried until both parts meet the degree and
// neighbourhood-edge bounds (vacuously accepted when Delta <= 1).
SplitPartitionResult split_partition(const Graph& g, int max_tries, Rng& rng);

struct IteratedSplitResult {
    bool success = false;
    std::string failure;
    std::vector<std::vector<int>> parts;  // partition of V(G)
    std::vector<double> delta_seq;        // Delta_0 .. Delta_j
    std::vector<double> s_seq;            // s_0 .. s_j
    int levels = 0;                       // j
};

// j rounds of bipartitioning every current part of maximum degree above 1,
// where j is the least index with f > ((1+delta) Delta / 2^j)^{zeta(2+delta)}.
// Requires delta in (0, 1/100) and zeta(2+delta) < 1/10.
IteratedSplitResult iterated_split(const Graph& g, double f, double delta, double zeta,
                                   std::uint64_t seed, int max_tries_per_split = 200);

// The recurrences Delta_{t+1} = Delta_t/2 + 2 sqrt(Delta_t log Delta_t) and
// s_{t+1} = s_t/4 + 2 Delta_t^{3/2} sqrt(log Delta_t), with the log clamped
// at zero below Delta_t = 1.
std::pair<std::vector<double>, std::vector<double>> split_sequences(double Delta0, double s0,
                                                                    int levels);

// Least nonnegative j with f > ((1+delta) Delta / 2^j)^{zeta(2+delta)}.
int split_level_count(double Delta, double f, double delta, double zeta);

}  // namespace hcm
