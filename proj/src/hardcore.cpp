#include "hcm/hardcore.hpp"

#include <cmath>

#include "hcm/errors.hpp"

namespace hcm {

bool is_independent(const Graph& g, const Bitset& set) {
    bool ok = true;
    set.for_each([&](int v) {
        if (g.neighbours(v).intersects(set)) ok = false;
    });
    return ok;
}

PartitionOracle::PartitionOracle(const Graph& g, double lambda, std::size_t memo_budget)
    : g_(g), lambda_(lambda), budget_(memo_budget) {
    if (!(lambda > 0)) throw regime_error("fugacity must be positive");
}

Bitset PartitionOracle::component_of(const Bitset& mask, int seed_vertex) const {
    Bitset comp(mask.universe());
    comp.set(seed_vertex);
    Bitset frontier = comp;
    while (frontier.any()) {
        Bitset grown(mask.universe());
        frontier.for_each([&](int v) { grown |= g_.neighbours(v); });
        grown &= mask;
        grown.subtract(comp);
        comp |= grown;
        frontier = grown;
    }
    return comp;
}

double PartitionOracle::z(const Bitset& mask) {
    int cnt = mask.count();
    if (cnt == 0) return 1.0;
    if (cnt == 1) return 1.0 + lambda_;
    // Z <= (1+lambda)^cnt must stay representable
    if (cnt * std::log1p(lambda_) > 690)
        throw cap_error("partition function overflows double at this size and fugacity");
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;

    double result = 1.0;
    Bitset rest = mask;
    while (rest.any()) {
        Bitset comp = component_of(rest, rest.first());
        result *= z_component(comp);
        rest.subtract(comp);
    }
    if (memo_.size() >= budget_) throw cap_error("partition oracle memo budget exhausted");
    memo_.emplace(mask, result);
    return result;
}

double PartitionOracle::z_component(const Bitset& comp) {
    int cnt = comp.count();
    if (cnt == 1) return 1.0 + lambda_;
    if (auto it = memo_.find(comp); it != memo_.end()) return it->second;

    int pivot = -1, best = -1;
    comp.for_each([&](int v) {
        int d = (g_.neighbours(v) & comp).count();
        if (d > best) {
            best = d;
            pivot = v;
        }
    });
    Bitset without_v = comp;
    without_v.reset(pivot);
    Bitset without_closed = comp;
    without_closed.subtract(g_.neighbours(pivot));
    without_closed.reset(pivot);
    double result = z(without_v) + lambda_ * z(without_closed);
    if (memo_.size() >= budget_) throw cap_error("partition oracle memo budget exhausted");
    memo_.emplace(comp, result);
    return result;
}

double PartitionOracle::z_full() {
    Bitset all(g_.vertex_count());
    for (int v = 0; v < g_.vertex_count(); ++v) all.set(v);
    return z(all);
}

Bitset PartitionOracle::sample_on(const Bitset& mask, Rng& rng) {
    Bitset chosen(mask.universe());
    Bitset rest = mask;
    while (rest.any()) {
        // condition on the same maximum-degree vertex the z recursion pivots
        // on, so the residual masks hit its memo either way the coin lands
        int v = -1, best = -1;
        rest.for_each([&](int u) {
            int d = (g_.neighbours(u) & rest).count();
            if (d > best) {
                best = d;
                v = u;
            }
        });
        Bitset without_closed = rest;
        without_closed.subtract(g_.neighbours(v));
        without_closed.reset(v);
        double p = lambda_ * z(without_closed) / z(rest);
        if (bernoulli(rng, p)) {
            chosen.set(v);
            rest = without_closed;
        } else {
            rest.reset(v);
        }
    }
    return chosen;
}

Bitset PartitionOracle::sample(Rng& rng) {
    Bitset all(g_.vertex_count());
    for (int v = 0; v < g_.vertex_count(); ++v) all.set(v);
    return sample_on(all, rng);
}

HardCoreSample exact_sample(const Graph& g, double lambda, std::uint64_t seed,
                            std::size_t memo_budget) {
    PartitionOracle oracle(g, lambda, memo_budget);
    Rng rng = make_rng(seed);
    return {oracle.sample(rng), seed, 0};
}

HardCoreSample glauber_sample(const Graph& g, double lambda, long long steps,
                              std::uint64_t seed) {
    if (!(lambda > 0)) throw regime_error("fugacity must be positive");
    const int n = g.vertex_count();
    Bitset state(n);
    Rng rng = make_rng(seed);
    if (n > 0) {
        const double occupy = lambda / (1.0 + lambda);
        for (long long s = 0; s < steps; ++s) {
            int v = uniform_below(rng, n);
            bool blocked = g.neighbours(v).intersects(state);
            bool want = bernoulli(rng, occupy);
            if (!blocked && want)
                state.set(v);
            else
                state.reset(v);
        }
    }
    return {state, seed, steps};
}

}  // namespace hcm
