#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hcm/bitset.hpp"

namespace hcm {

// Simple undirected graph on vertices 0..n-1 with per-vertex neighbour
// bitsets. Immutable after construction; construction enforces symmetry and
// rejects self-loops, so every Graph in the system satisfies the invariants.
class Graph {
public:
    Graph() : n_(0) {}
    // Edges are deduplicated; (u,v) and (v,u) are the same edge.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbours(int u) const { return adj_[u]; }
    int degree(int u) const { return deg_[u]; }
    int max_degree() const;

    // Edges as sorted (u,v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const;

    // Closed neighbourhood N[u] as a bitset.
    Bitset closed_neighbourhood(int u) const;

    // Adjacency rows packed into single words; only valid when n <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

private:
    int n_;
    int m_ = 0;
    std::vector<Bitset> adj_;
    std::vector<int> deg_;
};

// Vertex subset of a host graph of a given order.
struct VertexSubset {
    Bitset members;

    VertexSubset() = default;
    explicit VertexSubset(int n) : members(n) {}
    static VertexSubset of(int n, const std::vector<int>& vs) {
        VertexSubset s(n);
        for (int v : vs) s.members.set(v);
        return s;
    }
};

// Parses the text format: optional header "p <n> <m>", edge lines "e <u> <v>",
// comment lines starting with "c", and bare "<u> <v>" lines when no header is
// present. Throws parse_error (with line number) on malformed lines and on
// self-loops; out-of-range endpoints against a declared header are rejected.
Graph load_graph(const std::string& text);

// Canonical writer: "p n m" header then "e u v" lines sorted lexicographically,
// LF endings.
std::string write_graph(const Graph& g);

// Induced subgraph on s, vertices relabelled 0..|s|-1 in increasing order of
// original index. Throws std::out_of_range if s exceeds g's vertex range.
Graph induced_subgraph(const Graph& g, const VertexSubset& s);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// G[N(u)].
Graph neighbourhood_graph(const Graph& g, int u);

}  // namespace hcm
