#include "hcm/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hcm/errors.hpp"

namespace hcm {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(n, Bitset(n));
    deg_.assign(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (!adj_[u].test(v)) {
            adj_[u].set(v);
            adj_[v].set(u);
            ++m_;
        }
    }
    for (int u = 0; u < n; ++u) deg_[u] = adj_[u].count();
}

int Graph::max_degree() const {
    int d = 0;
    for (int x : deg_) d = std::max(d, x);
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(m_);
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) es.emplace_back(u, v);
        });
    return es;
}

Bitset Graph::closed_neighbourhood(int u) const {
    Bitset b = adj_[u];
    b.set(u);
    return b;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (n_ > 64) throw std::length_error("adjacency_masks requires n <= 64");
    std::vector<std::uint64_t> masks(n_, 0);
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) { masks[u] |= std::uint64_t{1} << v; });
    return masks;
}

namespace {

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (...) {
        return false;
    }
    return pos == tok.size();
}

}  // namespace

Graph load_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    bool have_header = false;
    long long header_n = 0, header_m = 0;
    std::vector<std::pair<int, int>> edges;
    long long max_index = -1;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header) throw parse_error("duplicate header", lineno);
            if (!edges.empty()) throw parse_error("header after edge lines", lineno);
            if (toks.size() != 3 || !parse_int(toks[1], header_n) || !parse_int(toks[2], header_m))
                throw parse_error("malformed header, expected 'p <n> <m>'", lineno);
            if (header_n < 0 || header_m < 0) throw parse_error("negative header counts", lineno);
            have_header = true;
            continue;
        }
        long long u, v;
        if (toks[0] == "e") {
            if (toks.size() != 3 || !parse_int(toks[1], u) || !parse_int(toks[2], v))
                throw parse_error("malformed edge, expected 'e <u> <v>'", lineno);
        } else {
            if (have_header)
                throw parse_error("unrecognised line (bare edges not allowed after header)", lineno);
            if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
                throw parse_error("malformed line, expected '<u> <v>'", lineno);
        }
        if (u < 0 || v < 0) throw parse_error("negative vertex index", lineno);
        if (u == v) throw parse_error("self-loop", lineno);
        if (have_header && (u >= header_n || v >= header_n))
            throw parse_error("vertex index exceeds declared count", lineno);
        max_index = std::max(max_index, std::max(u, v));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }

    long long n = have_header ? header_n : max_index + 1;
    if (n > 5'000'000) throw parse_error("vertex count too large");
    return Graph(static_cast<int>(n), edges);
}

std::string write_graph(const Graph& g) {
    auto es = g.edges();
    std::sort(es.begin(), es.end());
    std::ostringstream out;
    out << "p " << g.vertex_count() << " " << es.size() << "\n";
    for (auto [u, v] : es) out << "e " << u << " " << v << "\n";
    return out.str();
}

Graph induced_subgraph(const Graph& g, const VertexSubset& s) {
    if (s.members.universe() != g.vertex_count())
        throw std::out_of_range("subset universe does not match graph");
    return induced_subgraph(g, s.members.to_vector());
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs)
        if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex index out of range");
    std::vector<int> relabel(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) relabel[vs[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < vs.size(); ++i)
        g.neighbours(vs[i]).for_each([&](int w) {
            if (relabel[w] >= 0 && static_cast<int>(i) < relabel[w])
                edges.emplace_back(static_cast<int>(i), relabel[w]);
        });
    return Graph(static_cast<int>(vs.size()), edges);
}

Graph neighbourhood_graph(const Graph& g, int u) {
    if (u < 0 || u >= g.vertex_count()) throw std::out_of_range("vertex index out of range");
    return induced_subgraph(g, g.neighbours(u).to_vector());
}

}  // namespace hcm
