#include "hcm/generators.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hcm/errors.hpp"

namespace hcm {

Graph cycle_graph(int n) {
    if (n < 3) throw regime_error("cycle requires n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

Graph complete_graph(int n) {
    if (n < 0) throw regime_error("complete requires n >= 0");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw regime_error("complete_bipartite requires nonnegative sides");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph(a + b, es);
}

Graph path_graph(int n) {
    if (n < 1) throw regime_error("path requires n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph kneser_graph(int n, int k) {
    if (k < 1 || n < k) throw regime_error("kneser requires 1 <= k <= n");
    if (n > 20) throw regime_error("kneser cap: n <= 20");
    std::vector<std::uint32_t> sets;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == k) sets.push_back(m);
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if ((sets[i] & sets[j]) == 0) es.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(sets.size()), es);
}

Graph random_regular(int n, int d, Rng& rng, int max_tries) {
    if (n <= 0 || d < 0 || d >= n) throw regime_error("random_regular requires 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw regime_error("random_regular requires n*d even");
    if (d == 0) return Graph(n, {});
    std::vector<int> stubs(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs[static_cast<std::size_t>(v) * d + i] = v;
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        bool ok = true;
        std::vector<Bitset> seen(n, Bitset(n));
        std::vector<std::pair<int, int>> es;
        for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || seen[u].test(v)) {
                ok = false;
            } else {
                seen[u].set(v);
                seen[v].set(u);
                es.emplace_back(u, v);
            }
        }
        if (ok) return Graph(n, es);
    }
    throw regime_error("random_regular: rejection budget exhausted");
}

Graph erdos_renyi(int n, double p, Rng& rng) {
    if (n < 0 || p < 0.0 || p > 1.0) throw regime_error("erdos_renyi requires n >= 0, p in [0,1]");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (bernoulli(rng, p)) es.emplace_back(i, j);
    return Graph(n, es);
}

Graph blow_up(const Graph& g, int s) {
    if (s < 1) throw regime_error("blow_up requires s >= 1");
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) es.emplace_back(u * s + i, v * s + j);
    return Graph(g.vertex_count() * s, es);
}

Graph random_triangle_free(int n, int max_deg, double density, Rng& rng) {
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Bitset> adj(n, Bitset(n));
    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> es;
    auto target = static_cast<std::size_t>(density * static_cast<double>(all.size()));
    for (auto [u, v] : all) {
        if (es.size() >= target) break;
        if (deg[u] >= max_deg || deg[v] >= max_deg) continue;
        if (adj[u].intersects(adj[v])) continue;  // would close a triangle
        adj[u].set(v);
        adj[v].set(u);
        ++deg[u];
        ++deg[v];
        es.emplace_back(u, v);
    }
    return Graph(n, es);
}

namespace {

// spec grammar: name(arg, arg, ...) with nesting allowed in the first
// argument of blowup.
struct SpecParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit SpecParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
    double number() {
        skip_ws();
        std::size_t consumed = 0;
        double v = 0;
        try {
            v = std::stod(s.substr(pos), &consumed);
        } catch (...) {
            throw parse_error("expected number in generator spec");
        }
        pos += consumed;
        return v;
    }

    Graph parse(Rng& rng) {
        std::string name = ident();
        if (name.empty()) throw parse_error("expected generator name");
        if (!eat('(')) throw parse_error("expected '(' in generator spec");
        Graph g;
        if (name == "cycle") {
            g = cycle_graph(static_cast<int>(number()));
        } else if (name == "complete") {
            g = complete_graph(static_cast<int>(number()));
        } else if (name == "path") {
            g = path_graph(static_cast<int>(number()));
        } else if (name == "complete_bipartite") {
            int a = static_cast<int>(number());
            if (!eat(',')) throw parse_error("complete_bipartite expects two arguments");
            g = complete_bipartite(a, static_cast<int>(number()));
        } else if (name == "kneser") {
            int n = static_cast<int>(number());
            if (!eat(',')) throw parse_error("kneser expects two arguments");
            g = kneser_graph(n, static_cast<int>(number()));
        } else if (name == "random_regular") {
            int n = static_cast<int>(number());
            if (!eat(',')) throw parse_error("random_regular expects two arguments");
            g = random_regular(n, static_cast<int>(number()), rng);
        } else if (name == "erdos_renyi") {
            int n = static_cast<int>(number());
            if (!eat(',')) throw parse_error("erdos_renyi expects two arguments");
            g = erdos_renyi(n, number(), rng);
        } else if (name == "triangle_free") {
            int n = static_cast<int>(number());
            if (!eat(',')) throw parse_error("triangle_free expects three arguments");
            int dmax = static_cast<int>(number());
            if (!eat(',')) throw parse_error("triangle_free expects three arguments");
            g = random_triangle_free(n, dmax, number(), rng);
        } else if (name == "blowup") {
            Graph inner = parse(rng);
            if (!eat(',')) throw parse_error("blowup expects two arguments");
            g = blow_up(inner, static_cast<int>(number()));
        } else {
            throw parse_error("unknown generator '" + name + "'");
        }
        if (!eat(')')) throw parse_error("expected ')' in generator spec");
        return g;
    }
};

}  // namespace

Graph generate(const std::string& spec, Rng& rng) {
    SpecParser p(spec);
    Graph g = p.parse(rng);
    p.skip_ws();
    if (p.pos != spec.size()) throw parse_error("trailing characters in generator spec");
    return g;
}

}  // namespace hcm
