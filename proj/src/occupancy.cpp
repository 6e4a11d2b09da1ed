#include "hcm/occupancy.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <thread>

#include "hcm/errors.hpp"
#include "hcm/ipoly.hpp"
#include "hcm/lambert.hpp"
#include "hcm/structure.hpp"

namespace hcm {

double OccupancyParams::beta_max() const {
    double b = 0;
    for (auto& [beta, gamma] : beta_gamma) b = std::max(b, beta);
    return b;
}
double OccupancyParams::gamma_max() const {
    double g = 0;
    for (auto& [beta, gamma] : beta_gamma) g = std::max(g, gamma);
    return g;
}

namespace {

struct SubgraphRef {
    int vertex = -1;
    std::vector<int> verts;                   // global ids
    std::vector<std::pair<int, int>> edges;   // global ids (subgraph's edge set)
};

struct VertexScan {
    double min_gap = std::numeric_limits<double>::infinity();
    SubgraphRef argmin;
    long long checked = 0;
    std::vector<SubgraphRef> borderline;
};

// Exact gap >= -tolerance test for one concrete subgraph, with
// beta/gamma/lambda/tolerance taken as the exact rationals the doubles denote.
bool exact_gap_ok(const SubgraphRef& f, double beta, double gamma, double lambda,
                  double tolerance) {
    std::vector<int> relabel_src = f.verts;
    std::vector<std::pair<int, int>> local_edges;
    for (auto [a, b] : f.edges) {
        int ia = static_cast<int>(std::lower_bound(relabel_src.begin(), relabel_src.end(), a) -
                                  relabel_src.begin());
        int ib = static_cast<int>(std::lower_bound(relabel_src.begin(), relabel_src.end(), b) -
                                  relabel_src.begin());
        local_edges.emplace_back(ia, ib);
    }
    Graph fg(static_cast<int>(f.verts.size()), local_edges);
    auto poly = independence_polynomial(fg);
    mpq_class ql(lambda), qb(beta), qg(gamma);
    mpq_class z = evaluate_Z_exact(poly, ql);
    mpq_class zp = evaluate_Zprime_exact(poly, ql);
    mpq_class lhs = qb * ql / (1 + ql) / z + qg * ql * zp / z;
    return lhs >= 1 - mpq_class(tolerance);
}

// DP over subsets of a <= 25 vertex graph given local adjacency masks:
// zbuf[m] = Z of the induced subgraph on m, sbuf[m] = lambda * Z'.
void subset_tables(const std::vector<std::uint32_t>& adj, double lambda,
                   std::vector<double>& zbuf, std::vector<double>& sbuf) {
    const std::size_t total = std::size_t{1} << adj.size();
    zbuf.resize(total);
    sbuf.resize(total);
    zbuf[0] = 1.0;
    sbuf[0] = 0.0;
    for (std::size_t m = 1; m < total; ++m) {
        int v = std::countr_zero(m);
        std::size_t skip = m & (m - 1);
        std::size_t rest = m & ~static_cast<std::size_t>(adj[v] | (1u << v));
        zbuf[m] = zbuf[skip] + lambda * zbuf[rest];
        sbuf[m] = sbuf[skip] + lambda * (sbuf[rest] + zbuf[rest]);
    }
}

SubgraphRef make_ref_induced(const Graph& g, int u, const std::vector<int>& nbrs,
                             std::uint32_t mask) {
    SubgraphRef f;
    f.vertex = u;
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        if (mask & (1u << i)) f.verts.push_back(nbrs[i]);
    for (std::size_t i = 0; i < f.verts.size(); ++i)
        for (std::size_t j = i + 1; j < f.verts.size(); ++j)
            if (g.adjacent(f.verts[i], f.verts[j])) f.edges.emplace_back(f.verts[i], f.verts[j]);
    return f;
}

void scan_vertex_induced(const Graph& g, int u, double beta, double gamma, double lambda,
                         const VerifyOptions& opt, VertexScan& out) {
    const auto nbrs = g.neighbours(u).to_vector();
    const int deg = static_cast<int>(nbrs.size());
    if (deg > opt.degree_cap)
        throw cap_error("verification degree cap exceeded at vertex " + std::to_string(u));
    std::vector<std::uint32_t> adj(deg, 0);
    for (int i = 0; i < deg; ++i)
        for (int j = 0; j < deg; ++j)
            if (i != j && g.adjacent(nbrs[i], nbrs[j])) adj[i] |= 1u << j;
    std::vector<double> zbuf, sbuf;
    subset_tables(adj, lambda, zbuf, sbuf);
    const double front = beta * lambda / (1.0 + lambda);
    const std::size_t total = std::size_t{1} << deg;
    std::uint32_t best_mask = 0;
    double best_gap = std::numeric_limits<double>::infinity();
    std::vector<std::uint32_t> borderline_masks;
    for (std::size_t m = 0; m < total; ++m) {
        double gap = (front + gamma * sbuf[m]) / zbuf[m] - 1.0;
        if (gap < best_gap) {
            best_gap = gap;
            best_mask = static_cast<std::uint32_t>(m);
        }
        if (std::abs(gap) <= opt.exact_band)
            borderline_masks.push_back(static_cast<std::uint32_t>(m));
    }
    out.checked += static_cast<long long>(total);
    if (best_gap < out.min_gap) {
        out.min_gap = best_gap;
        out.argmin = make_ref_induced(g, u, nbrs, best_mask);
    }
    for (auto m : borderline_masks) out.borderline.push_back(make_ref_induced(g, u, nbrs, m));
}

void scan_vertex_strong(const Graph& g, int u, double beta, double gamma, double lambda,
                        const VerifyOptions& opt, VertexScan& out) {
    const auto nbrs = g.neighbours(u).to_vector();
    const int deg = static_cast<int>(nbrs.size());
    if (deg > opt.degree_cap)
        throw cap_error("verification degree cap exceeded at vertex " + std::to_string(u));
    std::vector<std::pair<int, int>> local_edges;  // indices into nbrs
    for (int i = 0; i < deg; ++i)
        for (int j = i + 1; j < deg; ++j)
            if (g.adjacent(nbrs[i], nbrs[j])) local_edges.emplace_back(i, j);
    if (local_edges.empty()) {
        // every subgraph of an edgeless neighbourhood is induced
        scan_vertex_induced(g, u, beta, gamma, lambda, opt, out);
        return;
    }
    if (static_cast<int>(local_edges.size()) > opt.strong_edge_cap)
        throw cap_error("strong verification edge cap exceeded at vertex " + std::to_string(u));

    const std::size_t total_vsub = std::size_t{1} << deg;
    // work estimate before committing
    long long work = 0;
    for (std::size_t vs = 0; vs < total_vsub; ++vs) {
        int e = 0;
        for (auto [i, j] : local_edges)
            if ((vs >> i & 1) && (vs >> j & 1)) ++e;
        work += 1LL << e;
        if (work > (1LL << 22))
            throw cap_error("strong verification work budget exceeded at vertex " +
                            std::to_string(u));
    }

    const double front = beta * lambda / (1.0 + lambda);
    std::vector<double> zbuf, sbuf;
    for (std::size_t vs = 0; vs < total_vsub; ++vs) {
        std::vector<int> vposition(deg, -1), vlist;
        for (int i = 0; i < deg; ++i)
            if (vs >> i & 1) {
                vposition[i] = static_cast<int>(vlist.size());
                vlist.push_back(i);
            }
        std::vector<std::pair<int, int>> elist;  // indices into vlist
        for (auto [i, j] : local_edges)
            if ((vs >> i & 1) && (vs >> j & 1)) elist.emplace_back(vposition[i], vposition[j]);
        const int c = static_cast<int>(vlist.size());
        const std::size_t esubs = std::size_t{1} << elist.size();
        for (std::size_t es = 0; es < esubs; ++es) {
            std::vector<std::uint32_t> adj(c, 0);
            for (std::size_t t = 0; t < elist.size(); ++t)
                if (es >> t & 1) {
                    adj[elist[t].first] |= 1u << elist[t].second;
                    adj[elist[t].second] |= 1u << elist[t].first;
                }
            subset_tables(adj, lambda, zbuf, sbuf);
            const std::size_t full = (std::size_t{1} << c) - 1;
            double gap = (front + gamma * sbuf[full]) / zbuf[full] - 1.0;
            ++out.checked;
            bool record_min = gap < out.min_gap;
            bool record_borderline = std::abs(gap) <= opt.exact_band;
            if (record_min || record_borderline) {
                SubgraphRef f;
                f.vertex = u;
                for (int i : vlist) f.verts.push_back(nbrs[i]);
                for (std::size_t t = 0; t < elist.size(); ++t)
                    if (es >> t & 1)
                        f.edges.emplace_back(nbrs[vlist[elist[t].first]],
                                             nbrs[vlist[elist[t].second]]);
                if (record_min) {
                    out.min_gap = gap;
                    out.argmin = f;
                }
                if (record_borderline) out.borderline.push_back(f);
            }
        }
    }
}

}  // namespace

OccupancyReport verify_local_occupancy(const Graph& g, const OccupancyParams& params,
                                       const VerifyOptions& opt) {
    const int n = g.vertex_count();
    if (static_cast<int>(params.beta_gamma.size()) != n)
        throw std::invalid_argument("params must carry one (beta, gamma) pair per vertex");
    if (!(params.lambda > 0)) throw regime_error("fugacity must be positive");
    for (auto& [b, gm] : params.beta_gamma)
        if (!(b > 0) || !(gm > 0)) throw std::invalid_argument("beta and gamma must be positive");

    auto scan_range = [&](int lo, int hi, VertexScan& out) {
        for (int u = lo; u < hi; ++u) {
            auto [beta, gamma] = params.beta_gamma[u];
            if (params.strong)
                scan_vertex_strong(g, u, beta, gamma, params.lambda, opt, out);
            else
                scan_vertex_induced(g, u, beta, gamma, params.lambda, opt, out);
        }
    };

    VertexScan merged;
    int threads = std::max(1, opt.threads);
    if (threads == 1 || n < 2) {
        scan_range(0, n, merged);
    } else {
        threads = std::min(threads, n);
        std::vector<VertexScan> parts(threads);
        std::vector<std::exception_ptr> errs(threads);
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                int lo = static_cast<int>(static_cast<long long>(n) * t / threads);
                int hi = static_cast<int>(static_cast<long long>(n) * (t + 1) / threads);
                try {
                    scan_range(lo, hi, parts[t]);
                } catch (...) {
                    errs[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
        for (auto& p : parts) {
            merged.checked += p.checked;
            if (p.min_gap < merged.min_gap) {
                merged.min_gap = p.min_gap;
                merged.argmin = p.argmin;
            }
            for (auto& b : p.borderline) merged.borderline.push_back(std::move(b));
        }
    }

    OccupancyReport report;
    report.subgraphs_checked = merged.checked;
    report.min_gap = merged.checked ? merged.min_gap : 0.0;
    report.witness.vertex = merged.argmin.vertex;
    report.witness.subgraph_vertices = merged.argmin.verts;
    report.witness.subgraph_edges = merged.argmin.edges;

    if (report.min_gap < -opt.exact_band) {
        report.verified = false;
    } else if (merged.borderline.empty()) {
        report.verified = report.min_gap >= -opt.tolerance;
    } else {
        report.exact_fallback_used = true;
        report.verified = true;
        for (auto& f : merged.borderline) {
            auto [beta, gamma] = params.beta_gamma[f.vertex];
            if (!exact_gap_ok(f, beta, gamma, params.lambda, opt.tolerance)) {
                report.verified = false;
                report.witness.vertex = f.vertex;
                report.witness.subgraph_vertices = f.verts;
                report.witness.subgraph_edges = f.edges;
                break;
            }
        }
    }
    return report;
}

ParamBudget mad_params(double a, double d, double lambda) {
    if (!(a >= 0)) throw regime_error("mad_params requires a >= 0");
    if (!(d > 0) || !(lambda > 0)) throw regime_error("mad_params requires d, lambda > 0");
    const double L = std::log1p(lambda);
    const double D = d * std::exp(a * L) * L;
    const double W = lambert_w0(D);
    const double ratio = (1.0 + lambda) / lambda;
    ParamBudget r;
    r.gamma = ratio * std::exp(a * L) * L / (1.0 + W);
    r.beta = ratio * std::exp(W) / (1.0 + W);
    r.budget = ratio * std::exp(W);
    return r;
}

ParamBudget hall_params(double rho, double d, double lambda) {
    if (!(rho >= 1)) throw regime_error("hall_params requires rho >= 1");
    if (!(d > 0) || !(lambda > 0)) throw regime_error("hall_params requires d, lambda > 0");
    const double L = std::log1p(lambda);
    const double k = k_function(rho * lambda / L);  // domain error if argument < 1
    const double arg = k * d * lambda / (1.0 + lambda);
    const double W = lambert_w0(arg);
    const double ratio = (1.0 + lambda) / lambda;
    ParamBudget r;
    r.beta = ratio * std::exp(W) / (1.0 + W);
    r.gamma = k / (1.0 + W);
    r.budget = ratio * std::exp(W);
    return r;
}

namespace {

struct CliqueRaw {
    bool ok = false;
    double zstar = 0;
    double beta = 0, gamma = 0, budget = 0;
};

// Stationary solution of d*(lambda/(1+lambda))*e^{-z} = c * z/log z on
// z >= e, where c = (1-zeta)/(omega-2); the left side decreases and the
// right side increases there, so the root is unique when it exists.
CliqueRaw clique_log_variant(int omega, double d, double lambda, double zeta) {
    CliqueRaw r;
    const double A = d * lambda / (1.0 + lambda);
    const double c = (1.0 - zeta) / (omega - 2);
    const double e = std::exp(1.0);
    auto f = [&](double z) { return A * std::exp(-z) - c * z / std::log(z); };
    if (f(e) <= 0) return r;
    double lo = e, hi = e;
    while (f(hi) > 0) {
        hi *= 2;
        if (hi > 1e9) return r;
    }
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) > 0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-14 * hi) break;
    }
    const double z = 0.5 * (lo + hi);
    const double lz = std::log(z);
    const double infl = 1.0 / (1.0 - zeta);
    r.ok = true;
    r.zstar = z;
    r.beta = d * (omega - 2) * infl * infl * lz * (lz - 1.0) / (z * ((1.0 + z) * lz - 1.0));
    r.gamma = (omega - 2) * infl * infl * lz * lz / ((1.0 + z) * lz - 1.0);
    r.budget = infl * (1.0 + lambda) / lambda * std::exp(z);
    return r;
}

CliqueRaw clique_sqrt_variant(int omega, double d, double lambda, double zeta) {
    CliqueRaw r;
    const double lw = std::log(static_cast<double>(omega - 1));
    const double arg =
        8.0 * d * d * lambda * lambda * lw / ((1.0 - zeta) * (1.0 - zeta) * (1.0 + lambda) * (1.0 + lambda));
    const double z = 0.5 * lambert_w0(arg);
    if (!(z > 0)) return r;
    const double infl = 1.0 / (1.0 - zeta);
    r.ok = true;
    r.zstar = z;
    r.beta = infl * (1.0 + lambda) / lambda * std::exp(z) / (1.0 + 2.0 * z);
    r.gamma = infl * infl * 4.0 * std::sqrt(z * lw) / (1.0 + 2.0 * z);
    r.budget = infl * (1.0 + lambda) / lambda * std::exp(z);
    return r;
}

bool clique_params_usable(int omega, double d, double lambda, double zeta) {
    const double y0 = 1.0;
    const double beta_floor = (1.0 + lambda) / lambda * std::pow(1.0 + lambda, y0);
    CliqueRaw v1 = clique_log_variant(omega, d, lambda, zeta);
    if (!v1.ok || v1.beta < beta_floor) return false;
    CliqueRaw v2 = clique_sqrt_variant(omega, d, lambda, zeta);
    if (!v2.ok || v2.zstar < 1.0 || v2.beta < beta_floor) return false;
    // the budget bound the construction is for must itself hold
    if (!(d > 3.0) || !(std::log(std::log(d)) > 0)) return false;
    double infl2 = 1.0 / ((1.0 - zeta) * (1.0 - zeta));  // = 1 + xi
    double arm1 = (omega - 2.0) * d * std::log(std::log(d)) / std::log(d);
    double arm2 = 2.0 * d * std::sqrt(std::log(omega - 1.0) / std::log(d));
    return std::min(v1.budget, v2.budget) <= infl2 * infl2 * std::min(arm1, arm2);
}

}  // namespace

double clique_d0_threshold(int omega, double lambda, double xi) {
    if (omega < 3) throw regime_error("clique parameters assume omega >= 3");
    if (!(lambda > 0) || !(xi > 0)) throw regime_error("clique_d0_threshold requires lambda, xi > 0");
    const double zeta = 1.0 - 1.0 / std::sqrt(1.0 + xi);
    double d = 1.0;
    while (!clique_params_usable(omega, d, lambda, zeta)) {
        d *= 2;
        if (d > 1e12) throw regime_error("no usable clique threshold at these parameters");
    }
    double lo = d / 2, hi = d;
    for (int i = 0; i < 60; ++i) {
        double mid = 0.5 * (lo + hi);
        if (clique_params_usable(omega, mid, lambda, zeta))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

CliqueParams clique_params(int omega, double d, double lambda, double xi) {
    if (omega < 3) throw regime_error("clique parameters assume omega >= 3");
    if (!(lambda > 0) || !(xi > 0) || !(d > 0))
        throw regime_error("clique_params requires d, lambda, xi > 0");
    CliqueParams out;
    out.zeta = 1.0 - 1.0 / std::sqrt(1.0 + xi);
    out.d0 = clique_d0_threshold(omega, lambda, xi);
    if (d < out.d0)
        throw regime_error("clique_params requires d >= d0 = " + std::to_string(out.d0));
    CliqueRaw v1 = clique_log_variant(omega, d, lambda, out.zeta);
    CliqueRaw v2 = clique_sqrt_variant(omega, d, lambda, out.zeta);
    out.log_variant = {v1.beta, v1.gamma, v1.budget};
    out.sqrt_variant = {v2.beta, v2.gamma, v2.budget};
    out.zstar_log = v1.zstar;
    out.zstar_sqrt = v2.zstar;
    out.chosen = v1.budget <= v2.budget ? 0 : 1;
    return out;
}

OccupancyParams params_from_graph(const Graph& g, double lambda, double a_override, bool strong) {
    OccupancyParams p;
    p.lambda = lambda;
    p.strong = strong;
    p.beta_gamma.reserve(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) {
        double a;
        if (a_override >= 0) {
            a = a_override;
        } else if (g.degree(u) == 0) {
            a = 0.0;
        } else {
            Graph nb = neighbourhood_graph(g, u);
            a = nb.edge_count() == 0 ? 0.0 : max_average_degree(nb).get_d();
        }
        double d = std::max(static_cast<double>(g.degree(u)), 1e-6);
        ParamBudget pb = mad_params(a, d, lambda);
        p.beta_gamma.emplace_back(pb.beta, pb.gamma);
    }
    return p;
}

namespace {

// Pareto-minimal constraint set: beta*x + gamma*y >= 1 per subgraph, with
// x = (lambda/(1+lambda))/Z_F and y = lambda Z'_F / Z_F.
std::vector<std::pair<double, double>> vertex_constraints(const Graph& g, int u, double lambda,
                                                          const VerifyOptions& opt) {
    const auto nbrs = g.neighbours(u).to_vector();
    const int deg = static_cast<int>(nbrs.size());
    if (deg > opt.degree_cap)
        throw cap_error("search degree cap exceeded at vertex " + std::to_string(u));
    std::vector<std::uint32_t> adj(deg, 0);
    for (int i = 0; i < deg; ++i)
        for (int j = 0; j < deg; ++j)
            if (i != j && g.adjacent(nbrs[i], nbrs[j])) adj[i] |= 1u << j;
    std::vector<double> zbuf, sbuf;
    subset_tables(adj, lambda, zbuf, sbuf);
    std::vector<std::pair<double, double>> cs;
    const double front = lambda / (1.0 + lambda);
    for (std::size_t m = 0; m < zbuf.size(); ++m)
        cs.emplace_back(front / zbuf[m], sbuf[m] / zbuf[m]);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    std::vector<std::pair<double, double>> front_set;
    double best_y = std::numeric_limits<double>::infinity();
    for (auto& [x, y] : cs) {
        if (y < best_y) {
            front_set.emplace_back(x, y);
            best_y = y;
        }
    }
    return front_set;
}

bool feasible_point(const std::vector<std::pair<double, double>>& cs, double beta, double gamma) {
    for (auto& [x, y] : cs)
        if (beta * x + gamma * y < 1.0) return false;
    return true;
}

}  // namespace

SearchResult numeric_param_search(const Graph& g, double lambda, const std::vector<double>& d,
                                  const VerifyOptions& vopt, const SearchOptions& sopt) {
    const int n = g.vertex_count();
    if (static_cast<int>(d.size()) != n)
        throw std::invalid_argument("numeric_param_search needs one d_u per vertex");
    SearchResult result;
    result.params.lambda = lambda;
    result.params.strong = false;
    result.params.beta_gamma.resize(n);
    result.budgets.resize(n);

    for (int u = 0; u < n; ++u) {
        auto cs = vertex_constraints(g, u, lambda, vopt);
        double best_budget = std::numeric_limits<double>::infinity();
        double best_b = 0, best_g = 0;
        double lo_b = sopt.box_lo, hi_b = sopt.box_hi, lo_g = sopt.box_lo, hi_g = sopt.box_hi;
        for (int round = 0; round < sopt.rounds; ++round) {
            const int gp = sopt.grid;
            double fb = std::log(lo_b), sb = (std::log(hi_b) - fb) / (gp - 1);
            double fg = std::log(lo_g), sg = (std::log(hi_g) - fg) / (gp - 1);
            double round_best = std::numeric_limits<double>::infinity();
            double rb = 0, rg = 0;
            for (int i = 0; i < gp; ++i)
                for (int j = 0; j < gp; ++j) {
                    double beta = std::exp(fb + sb * i), gamma = std::exp(fg + sg * j);
                    if (!feasible_point(cs, beta, gamma)) continue;
                    double budget = beta + gamma * d[u];
                    if (budget < round_best) {
                        round_best = budget;
                        rb = beta;
                        rg = gamma;
                    }
                }
            if (!(round_best < std::numeric_limits<double>::infinity())) break;
            if (round_best < best_budget) {
                best_budget = round_best;
                best_b = rb;
                best_g = rg;
            }
            lo_b = std::max(sopt.box_lo, rb * std::exp(-2 * sb));
            hi_b = std::min(sopt.box_hi, rb * std::exp(2 * sb));
            lo_g = std::max(sopt.box_lo, rg * std::exp(-2 * sg));
            hi_g = std::min(sopt.box_hi, rg * std::exp(2 * sg));
        }
        // polish against constraint intersections (the minimum of a linear
        // objective over an intersection of half-planes sits on a corner)
        for (std::size_t i = 0; i < cs.size(); ++i) {
            auto [x1, y1] = cs[i];
            if (y1 > 0) {
                double beta = sopt.box_lo, gamma = (1.0 - beta * x1) / y1;
                if (gamma > 0 && feasible_point(cs, beta, gamma) &&
                    beta + gamma * d[u] < best_budget) {
                    best_budget = beta + gamma * d[u];
                    best_b = beta;
                    best_g = gamma;
                }
            }
            if (x1 > 0) {
                double gamma = sopt.box_lo, beta = (1.0 - gamma * y1) / x1;
                if (beta > 0 && feasible_point(cs, beta, gamma) &&
                    beta + gamma * d[u] < best_budget) {
                    best_budget = beta + gamma * d[u];
                    best_b = beta;
                    best_g = gamma;
                }
            }
            for (std::size_t j = i + 1; j < cs.size(); ++j) {
                auto [x2, y2] = cs[j];
                double det = x1 * y2 - x2 * y1;
                if (std::abs(det) < 1e-300) continue;
                double beta = (y2 - y1) / det, gamma = (x1 - x2) / det;
                if (!(beta > 0) || !(gamma > 0)) continue;
                if (!feasible_point(cs, beta, gamma)) continue;
                double budget = beta + gamma * d[u];
                if (budget < best_budget) {
                    best_budget = budget;
                    best_b = beta;
                    best_g = gamma;
                }
            }
        }
        if (!(best_budget < std::numeric_limits<double>::infinity())) {
            result.found = false;
            result.failure = "no feasible (beta, gamma) in the search box for vertex " +
                             std::to_string(u);
            return result;
        }
        // nudge onto the feasible side of any constraint the corner solve
        // left marginally violated
        double scale = 1.0;
        while (!feasible_point(cs, best_b * scale, best_g * scale)) scale *= 1.0 + 1e-12;
        result.params.beta_gamma[u] = {best_b * scale, best_g * scale};
        result.budgets[u] = best_b * scale + best_g * scale * d[u];
    }
    result.found = true;
    result.report = verify_local_occupancy(g, result.params, vopt);
    return result;
}

}  // namespace hcm
