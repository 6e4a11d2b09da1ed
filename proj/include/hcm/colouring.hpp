#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcm/cover.hpp"
#include "hcm/graph.hpp"

namespace hcm {

// Partial colouring: an independent set in H with its domain and the residual
// structures, all recomputed from the chosen set rather than trusted from the
// sampler.
struct PartialColouring {
    std::vector<int> chosen;                       // H-node ids, sorted
    std::vector<int> domain;                       // coloured base vertices, sorted
    std::vector<std::vector<int>> residual_lists;  // per base vertex; empty when coloured
    std::vector<int> residual_conflict_degree;     // per H-node, -1 when removed
};

struct ViolationRecord {
    int vertex = -1;
    std::string condition;
    double observed = 0;
    double required = 0;
};

struct Phase1Options {
    long long max_rounds = 50;
    double finish_fraction = 0.125;  // the min ell(v)/8 rule; 0.5 is the looser knob
    int exact_init_cap = 48;         // H-node count above which init sampling is Glauber
    long long glauber_init_steps = 0;  // 0 derives 50 sweeps from |V(H)|
    std::size_t memo_budget = std::size_t{1} << 22;
};

struct Phase1Result {
    bool success = false;
    PartialColouring partial;
    long long rounds_used = 0;
    std::vector<ViolationRecord> final_violations;
};

// Samples an independent set of H from the hard-core model, then repeatedly
// resamples the blocks of N[u] around the lowest-index vertex whose residual
// list or residual conflict degree violates its target, drawing the
// replacement exactly from the conditional hard-core law given the rest.
Phase1Result phase1_partial(const Cover& cover, double lambda, const std::vector<double>& ell,
                            const Phase1Options& opt, std::uint64_t seed);

// Residual instance of a partial colouring as a standalone cover (uncoloured
// vertices relabelled); vertex_map/hnode_map translate back.
struct ResidualInstance {
    Cover cover;
    std::vector<int> vertex_map;  // residual vertex -> original vertex
    std::vector<int> hnode_map;   // residual H-node -> original H-node
};
ResidualInstance residual_instance(const Cover& cover, const PartialColouring& partial);

struct Phase2Options {
    long long max_rounds = 1000;
    double finish_fraction = 0.125;
};

struct Phase2Result {
    bool success = false;
    std::vector<int> chosen;
    long long rounds_used = 0;
};

// Finishing stage on a cover whose lists already beat their targets: every
// vertex draws a uniform colour from its block; while some cross edge joins
// two chosen colours, both endpoints redraw. The hypothesis audit
// (|L(u)| >= ell(u) >= 3 and cross degrees at most the finish fraction of the
// neighbourhood's minimum target) runs before any sampling and throws
// regime_error when it fails.
Phase2Result phase2_finish(const Cover& cover, const std::vector<double>& ell,
                           const Phase2Options& opt, std::uint64_t seed);

struct ColourOptions {
    Phase1Options phase1;
    Phase2Options phase2;
};

struct ColourResult {
    bool success = false;
    std::string failed_phase;  // "", "phase1", "phase2"
    std::vector<int> chosen;
    bool verified = false;
    long long phase1_rounds = 0;
    long long phase2_rounds = 0;
    std::vector<ViolationRecord> violations;
};

// Two-phase composition; any returned success has passed verify_colouring.
ColourResult colour(const Cover& cover, double lambda, const std::vector<double>& ell,
                    const ColourOptions& opt, std::uint64_t seed);

struct FractionalPart {
    std::vector<int> set;  // an independent set of the base graph
    double weight = 0;
    double start = 0;  // interval [start, start + weight)
};

struct FractionalColouring {
    std::vector<FractionalPart> parts;
};

// Demand coverage, interval disjointness per vertex, and budget containment.
bool validate_fractional(const Graph& g, const FractionalColouring& fc,
                         const std::vector<double>& budgets);

struct FractionalOptions {
    double step = 0;  // 0 derives min(budget)/64
    std::size_t memo_budget = std::size_t{1} << 22;
};

struct FractionalResult {
    bool success = false;
    FractionalColouring colouring;
    int failed_vertex = -1;
    double step = 0;
};

// Time sweep: at each step of width delta-w, draw a hard-core independent set
// of the subgraph induced by the vertices with unmet demand and assign it the
// next interval; a vertex fails once its demand is unmet but its budget
// cannot fit another interval.
FractionalResult fractional_greedy(const Graph& g, double lambda,
                                   const std::vector<double>& budgets,
                                   const FractionalOptions& opt, std::uint64_t seed);

}  // namespace hcm
