#include "hcm/structure.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "hcm/errors.hpp"

namespace hcm {

namespace {

// Dinic max-flow, int64 capacities.
class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(n, -1), level_(n), it_(n) {}

    void add_edge(int u, int v, long long cap) {
        edges_.push_back({v, head_[u], cap});
        head_[u] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({u, head_[v], 0});
        head_[v] = static_cast<int>(edges_.size()) - 1;
    }

    long long run(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            it_ = head_;
            long long f;
            while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) flow += f;
        }
        return flow;
    }

private:
    struct Edge {
        int to, next;
        long long cap;
    };
    std::vector<int> head_, level_, it_;
    std::vector<Edge> edges_;

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e = head_[u]; e != -1; e = edges_[e].next)
                if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
                    level_[edges_[e].to] = level_[u] + 1;
                    q.push(edges_[e].to);
                }
        }
        return level_[t] >= 0;
    }

    long long dfs(int u, int t, long long limit) {
        if (u == t) return limit;
        for (int& e = it_[u]; e != -1; e = edges_[e].next) {
            int v = edges_[e].to;
            if (edges_[e].cap > 0 && level_[v] == level_[u] + 1) {
                long long f = dfs(v, t, std::min(limit, edges_[e].cap));
                if (f > 0) {
                    edges_[e].cap -= f;
                    edges_[e ^ 1].cap += f;
                    return f;
                }
            }
        }
        return 0;
    }
};

// True iff some non-empty S has 2|E(S)|/|S| > a/b.
bool density_exceeds(const Graph& g, long long a, long long b) {
    const int n = g.vertex_count();
    const auto es = g.edges();
    const int m = static_cast<int>(es.size());
    // nodes: source, m edge nodes, n vertex nodes, sink
    MaxFlow net(m + n + 2);
    const int S = 0, T = m + n + 1;
    const long long INF = std::numeric_limits<long long>::max() / 4;
    for (int i = 0; i < m; ++i) {
        net.add_edge(S, 1 + i, 2 * b);
        net.add_edge(1 + i, 1 + m + es[i].first, INF);
        net.add_edge(1 + i, 1 + m + es[i].second, INF);
    }
    for (int v = 0; v < n; ++v) net.add_edge(1 + m + v, T, a);
    return net.run(S, T) < 2 * b * m;
}

// Smallest-denominator rational in (lo, hi]; forward declaration for the
// mutual recursion with the [lo, hi) variant.
Rational simplest_in_oc(const Rational& lo, const Rational& hi);

Rational floor_q(const Rational& x) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return Rational(f);
}

Rational simplest_in_co(const Rational& lo, const Rational& hi) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    Rational k{c};
    if (k < hi) return k;
    Rational f = floor_q(lo);
    return f + 1 / simplest_in_oc(1 / (hi - f), 1 / (lo - f));
}

Rational simplest_in_oc(const Rational& lo, const Rational& hi) {
    Rational k = floor_q(lo) + 1;
    if (k <= hi) return k;
    Rational f = floor_q(lo);
    return f + 1 / simplest_in_co(1 / (hi - f), 1 / (lo - f));
}

}  // namespace

Rational max_average_degree(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw regime_error("max_average_degree requires a non-empty graph");
    if (g.edge_count() == 0) return Rational(0);

    // Invariant: some subgraph is strictly denser than lo, none is strictly
    // denser than hi. Candidate densities have denominator <= n, so once
    // hi - lo < 1/n^2 the interval (lo, hi] contains exactly one of them.
    Rational lo(0), hi(n);
    const Rational resolution = Rational(1) / (Rational(n) * n);
    while (hi - lo >= resolution) {
        Rational mid = (lo + hi) / 2;
        mid.canonicalize();
        long long a = mpz_get_si(mid.get_num().get_mpz_t());
        long long b = mpz_get_si(mid.get_den().get_mpz_t());
        if (density_exceeds(g, a, b))
            lo = mid;
        else
            hi = mid;
    }
    Rational r = simplest_in_oc(lo, hi);
    r.canonicalize();
    return r;
}

Rational hall_ratio(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n < 1) throw regime_error("hall_ratio requires a non-empty graph");
    if (n > cap)
        throw cap_error("hall_ratio brute force capped at n <= " + std::to_string(cap) +
                        "; pass a larger cap explicitly to override");
    const auto masks = g.adjacency_masks();
    const std::size_t total = std::size_t{1} << n;
    std::vector<std::uint8_t> alpha(total);
    alpha[0] = 0;
    for (std::size_t m = 1; m < total; ++m) {
        int v = std::countr_zero(m);
        std::uint8_t skip = alpha[m & (m - 1)];
        std::uint8_t take =
            static_cast<std::uint8_t>(1 + alpha[m & ~(masks[v] | (std::uint64_t{1} << v))]);
        alpha[m] = std::max(skip, take);
    }
    // max |S|/alpha(S) by cross-multiplication
    long bestp = 1, bestq = 1;
    for (std::size_t m = 1; m < total; ++m) {
        long p = std::popcount(m), q = alpha[m];
        if (p * bestq > bestp * q) {
            bestp = p;
            bestq = q;
        }
    }
    Rational r(bestp, bestq);
    r.canonicalize();
    return r;
}

namespace {

struct CliqueSearch {
    const Graph& g;
    int best = 0;

    explicit CliqueSearch(const Graph& gg) : g(gg) {}

    void expand(Bitset cand, int size) {
        if (size > best) best = size;
        if (cand.none()) return;
        // greedy colouring of the candidate set; colour number bounds any
        // clique inside it
        std::vector<int> order, colour;
        Bitset rest = cand;
        int c = 0;
        while (rest.any()) {
            ++c;
            Bitset avail = rest;
            while (avail.any()) {
                int v = avail.first();
                order.push_back(v);
                colour.push_back(c);
                avail.subtract(g.neighbours(v));
                avail.reset(v);
                rest.reset(v);
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (size + colour[i] <= best) return;
            int v = order[i];
            Bitset next = cand & g.neighbours(v);
            expand(next, size + 1);
            cand.reset(v);
        }
    }
};

}  // namespace

int clique_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    CliqueSearch cs(g);
    Bitset all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all.set(v);
    cs.expand(all, 0);
    return cs.best;
}

int independence_number(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) es.emplace_back(u, v);
    return clique_number(Graph(n, es));
}

namespace {

long long count_paths_from(const Graph& h, int v, Bitset& used, int remaining) {
    if (remaining == 0) return 1;
    long long total = 0;
    std::vector<int> nbrs = h.neighbours(v).to_vector();
    for (int w : nbrs) {
        if (used.test(w)) continue;
        used.set(w);
        total += count_paths_from(h, w, used, remaining - 1);
        used.reset(w);
    }
    return total;
}

}  // namespace

long long local_path_count(const Graph& g, int u, int k) {
    if (k < 3) throw regime_error("local_path_count requires k >= 3");
    Graph h = neighbourhood_graph(g, u);
    const int len = k - 1;  // vertices per path
    if (len > h.vertex_count()) return 0;
    long long ordered = 0;
    Bitset used(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v) {
        used.set(v);
        ordered += count_paths_from(h, v, used, len - 1);
        used.reset(v);
    }
    return ordered / 2;  // each unordered path traversed from both ends
}

int degeneracy(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int result = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!removed[u] && (v < 0 || deg[u] < deg[v])) v = u;
        result = std::max(result, deg[v]);
        removed[v] = true;
        g.neighbours(v).for_each([&](int w) {
            if (!removed[w]) --deg[w];
        });
    }
    return result;
}

int clique_number_at(const Graph& g, int u) {
    return 1 + clique_number(neighbourhood_graph(g, u));
}

}  // namespace hcm
