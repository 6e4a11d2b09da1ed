#include "hcm/colouring.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hcm/errors.hpp"
#include "hcm/hardcore.hpp"

namespace hcm {

namespace {

// N_H[I] as a bitset over H-nodes.
Bitset closed_cover(const Graph& h, const std::vector<int>& chosen) {
    Bitset covered(h.vertex_count());
    for (int x : chosen) {
        covered.set(x);
        covered |= h.neighbours(x);
    }
    return covered;
}

// Cross-degree of H-node x among H-nodes not removed by the partial
// colouring: neighbours with a different owner that survive in H - N[I].
int residual_cross_degree(const Cover& c, int x, const Bitset& covered) {
    int d = 0;
    c.conflict.neighbours(x).for_each([&](int y) {
        if (c.owner[y] != c.owner[x] && !covered.test(y)) ++d;
    });
    return d;
}

struct EventState {
    std::vector<double> ell_star;  // per vertex, +inf when N(u) empty
};

double ell_star_of(const Cover& c, const std::vector<double>& ell, double fraction, int u) {
    double m = std::numeric_limits<double>::infinity();
    c.base.neighbours(u).for_each([&](int v) { m = std::min(m, ell[v]); });
    return m * fraction;
}

// First vertex violating its phase-1 conditions, or -1; fills the violation
// record when out is non-null.
int first_violated(const Cover& c, const std::vector<double>& ell, const EventState& st,
                   const std::vector<int>& chosen, std::vector<ViolationRecord>* out) {
    Bitset covered = closed_cover(c.conflict, chosen);
    std::vector<char> coloured(c.base.vertex_count(), 0);
    for (int x : chosen) coloured[c.owner[x]] = 1;
    int first = -1;
    for (int u = 0; u < c.base.vertex_count(); ++u) {
        if (coloured[u]) continue;
        int live = 0;
        int worst_deg = -1;
        for (int x : c.blocks[u])
            if (!covered.test(x)) {
                ++live;
                worst_deg = std::max(worst_deg, residual_cross_degree(c, x, covered));
            }
        bool bad_list = live < ell[u];
        bool bad_deg = worst_deg > st.ell_star[u];
        if (bad_list || bad_deg) {
            if (!out) return u;
            if (first < 0) first = u;
            if (bad_list)
                out->push_back({u, "residual-list", static_cast<double>(live), ell[u]});
            if (bad_deg)
                out->push_back({u, "residual-conflict-degree", static_cast<double>(worst_deg),
                                st.ell_star[u]});
        }
    }
    return out ? first : -1;
}

PartialColouring build_partial(const Cover& c, std::vector<int> chosen) {
    std::sort(chosen.begin(), chosen.end());
    PartialColouring p;
    p.chosen = chosen;
    Bitset covered = closed_cover(c.conflict, chosen);
    std::vector<char> coloured(c.base.vertex_count(), 0);
    for (int x : chosen) coloured[c.owner[x]] = 1;
    p.residual_lists.assign(c.base.vertex_count(), {});
    p.residual_conflict_degree.assign(c.hnode_count(), -1);
    for (int u = 0; u < c.base.vertex_count(); ++u) {
        if (coloured[u]) {
            p.domain.push_back(u);
            continue;
        }
        for (int x : c.blocks[u])
            if (!covered.test(x)) {
                p.residual_lists[u].push_back(x);
                p.residual_conflict_degree[x] = residual_cross_degree(c, x, covered);
            }
    }
    return p;
}

}  // namespace

Phase1Result phase1_partial(const Cover& cover, double lambda, const std::vector<double>& ell,
                            const Phase1Options& opt, std::uint64_t seed) {
    const Graph& h = cover.conflict;
    const int n = cover.base.vertex_count();
    if (static_cast<int>(ell.size()) != n)
        throw std::invalid_argument("one target per vertex required");
    Phase1Result result;

    // a degree-0 vertex whose block cannot reach its target can neither meet
    // the list condition nor lean on neighbours; fail before sampling
    for (int u = 0; u < n; ++u)
        if (cover.base.degree(u) == 0 && ell[u] > static_cast<double>(cover.blocks[u].size())) {
            result.final_violations.push_back(
                {u, "list-target-unsatisfiable", static_cast<double>(cover.blocks[u].size()),
                 ell[u]});
            return result;
        }

    EventState st;
    st.ell_star.resize(n);
    for (int u = 0; u < n; ++u) st.ell_star[u] = ell_star_of(cover, ell, opt.finish_fraction, u);

    Rng rng = make_rng(seed);
    std::vector<int> chosen;
    if (h.vertex_count() <= opt.exact_init_cap) {
        PartitionOracle oracle(h, lambda, opt.memo_budget);
        chosen = oracle.sample(rng).to_vector();
    } else {
        long long steps = opt.glauber_init_steps > 0
                              ? opt.glauber_init_steps
                              : 50LL * h.vertex_count();
        const double occupy = lambda / (1.0 + lambda);
        Bitset state(h.vertex_count());
        for (long long s = 0; s < steps; ++s) {
            int v = uniform_below(rng, h.vertex_count());
            bool blocked = h.neighbours(v).intersects(state);
            bool want = bernoulli(rng, occupy);
            if (!blocked && want)
                state.set(v);
            else
                state.reset(v);
        }
        chosen = state.to_vector();
    }

    for (long long round = 0; round < opt.max_rounds; ++round) {
        int u = first_violated(cover, ell, st, chosen, nullptr);
        if (u < 0) {
            result.success = true;
            result.rounds_used = round;
            result.partial = build_partial(cover, std::move(chosen));
            return result;
        }
        // resample the blocks of N[u] from the conditional hard-core law
        Bitset region(h.vertex_count());
        for (int x : cover.blocks[u]) region.set(x);
        cover.base.neighbours(u).for_each([&](int v) {
            for (int x : cover.blocks[v]) region.set(x);
        });
        std::vector<int> outside;
        for (int x : chosen)
            if (!region.test(x)) outside.push_back(x);
        Bitset allowed = region;
        allowed.subtract(closed_cover(h, outside));
        PartitionOracle oracle(h, lambda, opt.memo_budget);
        Bitset fresh = oracle.sample_on(allowed, rng);
        chosen = std::move(outside);
        fresh.for_each([&](int x) { chosen.push_back(x); });
    }

    result.rounds_used = opt.max_rounds;
    first_violated(cover, ell, st, chosen, &result.final_violations);
    return result;
}

ResidualInstance residual_instance(const Cover& cover, const PartialColouring& partial) {
    ResidualInstance out;
    const int n = cover.base.vertex_count();
    std::vector<char> coloured(n, 0);
    for (int u : partial.domain) coloured[u] = 1;
    std::vector<int> new_id(n, -1);
    for (int u = 0; u < n; ++u)
        if (!coloured[u]) {
            new_id[u] = static_cast<int>(out.vertex_map.size());
            out.vertex_map.push_back(u);
        }
    std::vector<std::pair<int, int>> base_edges;
    for (auto [u, v] : cover.base.edges())
        if (new_id[u] >= 0 && new_id[v] >= 0) base_edges.emplace_back(new_id[u], new_id[v]);
    Graph base(static_cast<int>(out.vertex_map.size()), base_edges);

    std::vector<int> hnode_new(cover.hnode_count(), -1);
    std::vector<std::vector<int>> blocks(base.vertex_count());
    for (int u = 0; u < n; ++u) {
        if (coloured[u]) continue;
        for (int x : partial.residual_lists[u]) {
            hnode_new[x] = static_cast<int>(out.hnode_map.size());
            out.hnode_map.push_back(x);
            blocks[new_id[u]].push_back(hnode_new[x]);
        }
    }
    std::vector<std::pair<int, int>> hedges;
    for (auto [x, y] : cover.conflict.edges())
        if (hnode_new[x] >= 0 && hnode_new[y] >= 0) hedges.emplace_back(hnode_new[x], hnode_new[y]);
    out.cover.base = base;
    out.cover.conflict = Graph(static_cast<int>(out.hnode_map.size()), hedges);
    out.cover.blocks = std::move(blocks);
    out.cover.owner.assign(out.hnode_map.size(), -1);
    for (int u = 0; u < base.vertex_count(); ++u)
        for (int x : out.cover.blocks[u]) out.cover.owner[x] = u;
    out.cover.from_lists = cover.from_lists;
    audit_cover(out.cover);
    return out;
}

Phase2Result phase2_finish(const Cover& cover, const std::vector<double>& ell,
                           const Phase2Options& opt, std::uint64_t seed) {
    const int n = cover.base.vertex_count();
    if (static_cast<int>(ell.size()) != n)
        throw std::invalid_argument("one target per vertex required");
    // hypothesis audit before any sampling
    for (int u = 0; u < n; ++u) {
        if (!(ell[u] >= 3))
            throw regime_error("finishing stage requires ell(u) >= 3 at vertex " +
                               std::to_string(u));
        if (static_cast<double>(cover.blocks[u].size()) < ell[u])
            throw regime_error("finishing stage requires |L(u)| >= ell(u) at vertex " +
                               std::to_string(u));
        double limit = std::numeric_limits<double>::infinity();
        cover.base.neighbours(u).for_each(
            [&](int v) { limit = std::min(limit, ell[v] * opt.finish_fraction); });
        for (int x : cover.blocks[u]) {
            int d = 0;
            cover.conflict.neighbours(x).for_each([&](int y) {
                if (cover.owner[y] != u) ++d;
            });
            if (d > limit)
                throw regime_error("finishing stage conflict-degree audit failed at vertex " +
                                   std::to_string(u));
        }
    }

    Phase2Result result;
    if (n == 0) {
        result.success = true;
        return result;
    }
    Rng rng = make_rng(seed);
    std::vector<int> pick(n);
    for (int u = 0; u < n; ++u)
        pick[u] = cover.blocks[u][uniform_below(rng, static_cast<int>(cover.blocks[u].size()))];
    std::vector<char> in(cover.hnode_count(), 0);
    for (int u = 0; u < n; ++u) in[pick[u]] = 1;

    auto find_conflict = [&]() -> std::pair<int, int> {
        std::pair<int, int> best{-1, -1};
        for (int u = 0; u < n; ++u) {
            int x = pick[u];
            cover.conflict.neighbours(x).for_each([&](int y) {
                if (cover.owner[y] != u && in[y]) {
                    std::pair<int, int> e{std::min(x, y), std::max(x, y)};
                    if (best.first < 0 || e < best) best = e;
                }
            });
        }
        return best;
    };

    for (long long round = 0; round < opt.max_rounds; ++round) {
        auto [x, y] = find_conflict();
        if (x < 0) {
            result.success = true;
            result.rounds_used = round;
            result.chosen = pick;
            std::sort(result.chosen.begin(), result.chosen.end());
            return result;
        }
        for (int u : {cover.owner[x], cover.owner[y]}) {
            in[pick[u]] = 0;
            pick[u] =
                cover.blocks[u][uniform_below(rng, static_cast<int>(cover.blocks[u].size()))];
            in[pick[u]] = 1;
        }
    }
    result.rounds_used = opt.max_rounds;
    return result;
}

ColourResult colour(const Cover& cover, double lambda, const std::vector<double>& ell,
                    const ColourOptions& opt, std::uint64_t seed) {
    ColourResult out;
    Phase1Result p1 = phase1_partial(cover, lambda, ell, opt.phase1, splitmix64(seed));
    out.phase1_rounds = p1.rounds_used;
    if (!p1.success) {
        out.failed_phase = "phase1";
        out.violations = p1.final_violations;
        return out;
    }
    ResidualInstance res = residual_instance(cover, p1.partial);
    std::vector<double> res_ell(res.cover.base.vertex_count());
    for (int i = 0; i < res.cover.base.vertex_count(); ++i) res_ell[i] = ell[res.vertex_map[i]];
    Phase2Result p2 =
        phase2_finish(res.cover, res_ell, opt.phase2, splitmix64(seed ^ 0x9e3779b9));
    out.phase2_rounds = p2.rounds_used;
    if (!p2.success) {
        out.failed_phase = "phase2";
        out.violations.push_back({-1, "finishing-rounds-exhausted",
                                  static_cast<double>(p2.rounds_used),
                                  static_cast<double>(opt.phase2.max_rounds)});
        return out;
    }
    out.chosen = p1.partial.chosen;
    for (int x : p2.chosen) out.chosen.push_back(res.hnode_map[x]);
    std::sort(out.chosen.begin(), out.chosen.end());
    out.verified = verify_colouring(cover, out.chosen);
    if (!out.verified) {
        out.failed_phase = "verification";
        out.chosen.clear();
        return out;
    }
    out.success = true;
    return out;
}

bool validate_fractional(const Graph& g, const FractionalColouring& fc,
                         const std::vector<double>& budgets) {
    const int n = g.vertex_count();
    std::vector<double> weight(n, 0);
    std::vector<std::vector<std::pair<double, double>>> intervals(n);
    for (const auto& part : fc.parts) {
        if (!(part.weight > 0)) return false;
        Bitset b(n);
        for (int v : part.set) {
            if (v < 0 || v >= n || b.test(v)) return false;
            b.set(v);
        }
        if (!is_independent(g, b)) return false;
        for (int v : part.set) {
            weight[v] += part.weight;
            intervals[v].emplace_back(part.start, part.start + part.weight);
        }
    }
    const double tol = 1e-9;
    for (int v = 0; v < n; ++v) {
        if (weight[v] + tol < 1.0) return false;
        auto& iv = intervals[v];
        std::sort(iv.begin(), iv.end());
        for (std::size_t i = 0; i < iv.size(); ++i) {
            if (iv[i].first < -tol || iv[i].second > budgets[v] + tol) return false;
            if (i > 0 && iv[i].first < iv[i - 1].second - tol) return false;
        }
    }
    return true;
}

FractionalResult fractional_greedy(const Graph& g, double lambda,
                                   const std::vector<double>& budgets,
                                   const FractionalOptions& opt, std::uint64_t seed) {
    const int n = g.vertex_count();
    if (static_cast<int>(budgets.size()) != n)
        throw std::invalid_argument("one budget per vertex required");
    for (double c : budgets)
        if (!(c > 0)) throw std::invalid_argument("budgets must be positive");
    FractionalResult out;
    double step = opt.step;
    if (step <= 0) step = *std::min_element(budgets.begin(), budgets.end()) / 64.0;
    out.step = step;

    std::vector<double> demand(n, 1.0);
    Rng rng = make_rng(seed);
    double tau = 0.0;
    while (true) {
        std::vector<int> active;
        for (int v = 0; v < n; ++v) {
            if (demand[v] <= 1e-12) continue;
            if (budgets[v] < tau + step - 1e-12) {
                out.failed_vertex = v;
                return out;
            }
            active.push_back(v);
        }
        if (active.empty()) {
            out.success = true;
            return out;
        }
        Graph sub = induced_subgraph(g, active);
        PartitionOracle oracle(sub, lambda, opt.memo_budget);
        Bitset sample = oracle.sample(rng);
        FractionalPart part;
        part.weight = step;
        part.start = tau;
        sample.for_each([&](int i) {
            int v = active[i];
            part.set.push_back(v);
            demand[v] -= step;
        });
        if (!part.set.empty()) out.colouring.parts.push_back(std::move(part));
        tau += step;
    }
}

}  // namespace hcm
