#include "hcm/split.hpp"

#include <algorithm>
#include <cmath>

#include "hcm/errors.hpp"

namespace hcm {

long long max_neighbourhood_edges(const Graph& g) {
    long long best = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        long long twice = 0;
        const Bitset& nb = g.neighbours(u);
        nb.for_each([&](int v) { twice += (g.neighbours(v) & nb).count(); });
        best = std::max(best, twice / 2);
    }
    return best;
}

namespace {

SplitAudit audit_partition(const Graph& g, const std::vector<int>& side) {
    const int n = g.vertex_count();
    const int Delta = g.max_degree();
    SplitAudit a;
    if (Delta <= 1) {
        a.vacuous = true;
        return a;
    }
    const double logD = std::log(static_cast<double>(Delta));
    const long long s = max_neighbourhood_edges(g);
    a.degree_bound = Delta / 2.0 + 2.0 * std::sqrt(Delta * logD);
    a.nbhd_edge_bound = static_cast<double>(s) / 4.0 + 2.0 * std::pow(Delta, 1.5) * std::sqrt(logD);
    for (int u = 0; u < n; ++u) {
        int d = 0;
        long long twice = 0;
        g.neighbours(u).for_each([&](int v) {
            if (side[v] != side[u]) return;
            ++d;
            g.neighbours(v).for_each([&](int w) {
                if (side[w] == side[u] && g.adjacent(u, w)) ++twice;
            });
        });
        a.part_max_degree[side[u]] = std::max(a.part_max_degree[side[u]], d);
        a.part_max_nbhd_edges[side[u]] = std::max(a.part_max_nbhd_edges[side[u]], twice / 2);
    }
    return a;
}

bool audit_passes(const SplitAudit& a) {
    if (a.vacuous) return true;
    for (int i = 0; i < 2; ++i) {
        if (a.part_max_degree[i] > a.degree_bound) return false;
        if (static_cast<double>(a.part_max_nbhd_edges[i]) > a.nbhd_edge_bound) return false;
    }
    return true;
}

}  // namespace

SplitPartitionResult split_partition(const Graph& g, int max_tries, Rng& rng) {
    const int n = g.vertex_count();
    SplitPartitionResult best;
    for (int attempt = 1; attempt <= max_tries; ++attempt) {
        std::vector<int> side(n);
        for (int v = 0; v < n; ++v) side[v] = bernoulli(rng, 0.5) ? 1 : 0;
        SplitAudit a = audit_partition(g, side);
        a.tries = attempt;
        if (audit_passes(a)) {
            best.success = true;
            best.side = std::move(side);
            best.audit = a;
            return best;
        }
        // remember the attempt with the smallest degree excess
        auto excess = [](const SplitAudit& x) {
            return std::max(x.part_max_degree[0], x.part_max_degree[1]) - x.degree_bound;
        };
        if (best.side.empty() || excess(a) < excess(best.audit)) {
            best.side = std::move(side);
            best.audit = a;
        }
    }
    best.success = false;
    return best;
}

std::pair<std::vector<double>, std::vector<double>> split_sequences(double Delta0, double s0,
                                                                    int levels) {
    std::vector<double> ds{Delta0}, ss{s0};
    for (int t = 0; t < levels; ++t) {
        double d = ds.back();
        double logd = d > 1.0 ? std::log(d) : 0.0;
        ds.push_back(d / 2.0 + 2.0 * std::sqrt(d * logd));
        ss.push_back(ss.back() / 4.0 + 2.0 * std::pow(d, 1.5) * std::sqrt(logd));
    }
    return {ds, ss};
}

int split_level_count(double Delta, double f, double delta, double zeta) {
    const double expo = zeta * (2.0 + delta);
    for (int j = 0; j <= 64; ++j) {
        double target = std::pow((1.0 + delta) * Delta / std::pow(2.0, j), expo);
        if (f > target) return j;
    }
    throw regime_error("split level count did not terminate within 64 levels");
}

IteratedSplitResult iterated_split(const Graph& g, double f, double delta, double zeta,
                                   std::uint64_t seed, int max_tries_per_split) {
    if (!(delta > 0) || !(delta < 0.01)) throw regime_error("iterated_split requires delta in (0, 1/100)");
    if (!(zeta > 0) || !(zeta * (2.0 + delta) < 0.1))
        throw regime_error("iterated_split requires zeta(2+delta) < 1/10");
    if (!(f > 0)) throw regime_error("iterated_split requires f > 0");

    IteratedSplitResult out;
    const int Delta = g.max_degree();
    out.levels = split_level_count(Delta, f, delta, zeta);
    auto [ds, ss] = split_sequences(Delta, static_cast<double>(Delta) * Delta / f, out.levels);
    out.delta_seq = std::move(ds);
    out.s_seq = std::move(ss);

    std::vector<std::vector<int>> parts;
    {
        std::vector<int> all(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
        parts.push_back(std::move(all));
    }
    std::uint64_t stream = 0;
    for (int round = 0; round < out.levels; ++round) {
        std::vector<std::vector<int>> next;
        for (auto& part : parts) {
            Graph sub = induced_subgraph(g, part);
            if (sub.max_degree() <= 1) {
                next.push_back(part);
                continue;
            }
            Rng rng = derive_stream(seed, stream++);
            SplitPartitionResult sp = split_partition(sub, max_tries_per_split, rng);
            if (!sp.success) {
                out.failure = "split retries exhausted at level " + std::to_string(round);
                return out;
            }
            std::vector<int> a, b;
            for (std::size_t i = 0; i < part.size(); ++i)
                (sp.side[i] == 0 ? a : b).push_back(part[i]);
            if (!a.empty()) next.push_back(std::move(a));
            if (!b.empty()) next.push_back(std::move(b));
        }
        parts = std::move(next);
    }
    out.parts = std::move(parts);
    out.success = true;
    return out;
}

}  // namespace hcm
