#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hcm/graph.hpp"

namespace hcm {

// Per-vertex certificate (beta_u, gamma_u) at a common fugacity. "strong"
// records whether the certificate is meant to hold over all subgraphs of each
// neighbourhood rather than just the induced ones.
struct OccupancyParams {
    double lambda = 1.0;
    std::vector<std::pair<double, double>> beta_gamma;
    bool strong = false;

    static OccupancyParams uniform(int n, double lambda, double beta, double gamma,
                                   bool strong = false) {
        OccupancyParams p;
        p.lambda = lambda;
        p.beta_gamma.assign(n, {beta, gamma});
        p.strong = strong;
        return p;
    }
    double beta_max() const;
    double gamma_max() const;
};

struct OccupancyWitness {
    int vertex = -1;
    std::vector<int> subgraph_vertices;               // global vertex ids
    std::vector<std::pair<int, int>> subgraph_edges;  // global, strong mode only
};

struct OccupancyReport {
    bool verified = false;
    double min_gap = 0.0;  // min over (u,F) of LHS - 1
    OccupancyWitness witness;
    long long subgraphs_checked = 0;
    bool exact_fallback_used = false;
};

struct VerifyOptions {
    int degree_cap = 20;
    int strong_edge_cap = 25;     // cap on |E(G[N(u)])| in strong mode
    double tolerance = 1e-9;      // verified iff gap >= -tolerance everywhere
    double exact_band = 1e-6;     // |gap| below this re-checked in rationals
    int threads = 1;
};

// Checks beta_u*(lambda/(1+lambda))/Z_F + gamma_u*lambda*Z'_F/Z_F >= 1 for
// every vertex u and every induced subgraph F of G[N(u)] (every subgraph, in
// strong mode), including the empty one. Gaps inside the exact band are
// settled in rational arithmetic so boundary certificates do not flap.
OccupancyReport verify_local_occupancy(const Graph& g, const OccupancyParams& params,
                                       const VerifyOptions& opt = {});

struct ParamBudget {
    double beta = 0;
    double gamma = 0;
    double budget = 0;  // beta + gamma * d
};

// Optimal pair when every neighbourhood subgraph has average degree <= a;
// minimises beta + gamma*d. Satisfies the strong certificate.
ParamBudget mad_params(double a, double d, double lambda);

// Optimal pair when every neighbourhood induces Hall ratio <= rho.
ParamBudget hall_params(double rho, double d, double lambda);

struct CliqueParams {
    ParamBudget log_variant;   // stationary point of the z/log z route
    ParamBudget sqrt_variant;  // closed-form sqrt(z) route
    int chosen = 0;            // 0 if log_variant minimises the budget, else 1
    double zstar_log = 0, zstar_sqrt = 0;
    double zeta = 0;
    double d0 = 0;  // the least d this derivation supports, reported not hidden

    const ParamBudget& best() const { return chosen == 0 ? log_variant : sqrt_variant; }
};

// Both candidate pairs for neighbourhoods with no clique of size omega
// (omega >= 3), inflated by 1/(1-zeta) with zeta = 1 - (1+xi)^{-1/2}.
// Requires d >= clique_d0_threshold(omega, lambda, xi).
CliqueParams clique_params(int omega, double d, double lambda, double xi);
double clique_d0_threshold(int omega, double lambda, double xi);

// Per-vertex parameters from a graph: a_u = mad(G[N(u)]) exactly, with an
// optional uniform override of the exponent (e.g. k-3 for a forbidden cycle
// length).
OccupancyParams params_from_graph(const Graph& g, double lambda, double a_override = -1.0,
                                  bool strong = false);

struct SearchOptions {
    double box_lo = 1e-6;
    double box_hi = 1e9;
    int grid = 21;
    int rounds = 8;
};

struct SearchResult {
    bool found = false;
    OccupancyParams params;
    std::vector<double> budgets;  // beta_u + gamma_u * d_u
    OccupancyReport report;       // re-verification of the returned params
    std::string failure;
};

// Per-vertex 2-D log-grid refinement minimising beta_u + gamma_u d_u subject
// to the per-vertex induced-subgraph constraints, polished against the active
// constraints; the returned certificate is re-verified.
SearchResult numeric_param_search(const Graph& g, double lambda, const std::vector<double>& d,
                                  const VerifyOptions& vopt = {}, const SearchOptions& sopt = {});

}  // namespace hcm
