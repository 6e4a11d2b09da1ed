#include "hcm/cover.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hcm/errors.hpp"

namespace hcm {

namespace {

Cover assemble(const Graph& g, std::vector<std::vector<int>> blocks,
               std::vector<std::pair<int, int>> cross_edges, bool from_lists) {
    int total = 0;
    for (auto& b : blocks) total += static_cast<int>(b.size());
    std::vector<int> owner(total, -1);
    std::vector<std::pair<int, int>> hedges = std::move(cross_edges);
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (std::size_t i = 0; i < blocks[u].size(); ++i) {
            owner[blocks[u][i]] = u;
            for (std::size_t j = i + 1; j < blocks[u].size(); ++j)
                hedges.emplace_back(blocks[u][i], blocks[u][j]);
        }
    }
    Cover c;
    c.base = g;
    c.conflict = Graph(total, hedges);
    c.blocks = std::move(blocks);
    c.owner = std::move(owner);
    c.from_lists = from_lists;
    audit_cover(c);
    return c;
}

}  // namespace

Cover cover_from_lists(const Graph& g, const std::vector<std::vector<int>>& lists) {
    if (static_cast<int>(lists.size()) != g.vertex_count())
        throw std::invalid_argument("one colour list per vertex required");
    std::vector<std::vector<int>> blocks(g.vertex_count());
    std::vector<std::vector<int>> colours(g.vertex_count());
    int next = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (lists[u].empty()) throw std::invalid_argument("empty colour list");
        colours[u] = lists[u];
        std::sort(colours[u].begin(), colours[u].end());
        colours[u].erase(std::unique(colours[u].begin(), colours[u].end()), colours[u].end());
        for (std::size_t i = 0; i < colours[u].size(); ++i) blocks[u].push_back(next++);
    }
    std::vector<std::pair<int, int>> cross;
    for (auto [u, v] : g.edges())
        for (std::size_t i = 0; i < colours[u].size(); ++i)
            for (std::size_t j = 0; j < colours[v].size(); ++j)
                if (colours[u][i] == colours[v][j])
                    cross.emplace_back(blocks[u][i], blocks[v][j]);
    return assemble(g, std::move(blocks), std::move(cross), true);
}

Cover random_cover(const Graph& g, int k, Rng& rng, const RandomCoverOptions& opt) {
    if (k < 1) throw regime_error("random_cover requires k >= 1");
    std::vector<std::vector<int>> blocks(g.vertex_count());
    int next = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int i = 0; i < k; ++i) blocks[u].push_back(next++);
    std::vector<std::pair<int, int>> cross;
    std::vector<int> perm(k);
    for (auto [u, v] : g.edges()) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i < k; ++i) {
            if (opt.matching_density >= 1.0 || bernoulli(rng, opt.matching_density))
                cross.emplace_back(blocks[u][i], blocks[v][perm[i]]);
        }
    }
    return assemble(g, std::move(blocks), std::move(cross), false);
}

void audit_cover(const Cover& c) {
    const int nh = c.conflict.vertex_count();
    const int n = c.base.vertex_count();
    if (static_cast<int>(c.blocks.size()) != n)
        throw std::invalid_argument("cover: one block per base vertex required");
    std::vector<int> seen(nh, -1);
    for (int u = 0; u < n; ++u)
        for (int x : c.blocks[u]) {
            if (x < 0 || x >= nh) throw std::invalid_argument("cover: block node out of range");
            if (seen[x] != -1) throw std::invalid_argument("cover: blocks are not disjoint");
            seen[x] = u;
        }
    for (int x = 0; x < nh; ++x)
        if (seen[x] == -1) throw std::invalid_argument("cover: blocks do not cover H");
    if (c.owner != seen) throw std::invalid_argument("cover: owner map inconsistent with blocks");
    for (int u = 0; u < n; ++u)
        for (std::size_t i = 0; i < c.blocks[u].size(); ++i)
            for (std::size_t j = i + 1; j < c.blocks[u].size(); ++j)
                if (!c.conflict.adjacent(c.blocks[u][i], c.blocks[u][j]))
                    throw std::invalid_argument("cover: block is not a clique");
    // cross edges only along base edges, and one per endpoint within a block
    // pair (a matching)
    for (auto [x, y] : c.conflict.edges()) {
        int u = c.owner[x], v = c.owner[y];
        if (u == v) continue;
        if (!c.base.adjacent(u, v))
            throw std::invalid_argument("cover: cross edge without a base edge");
    }
    for (auto [u, v] : c.base.edges()) {
        for (int x : c.blocks[u]) {
            int hits = 0;
            for (int y : c.blocks[v])
                if (c.conflict.adjacent(x, y)) ++hits;
            if (hits > 1) throw std::invalid_argument("cover: cross edges are not a matching");
        }
        for (int y : c.blocks[v]) {
            int hits = 0;
            for (int x : c.blocks[u])
                if (c.conflict.adjacent(x, y)) ++hits;
            if (hits > 1) throw std::invalid_argument("cover: cross edges are not a matching");
        }
    }
}

bool verify_colouring(const Cover& c, const std::vector<int>& chosen) {
    const int nh = c.conflict.vertex_count();
    std::vector<char> in(nh, 0);
    for (int x : chosen) {
        if (x < 0 || x >= nh) return false;
        if (in[x]) return false;
        in[x] = 1;
    }
    for (int u = 0; u < c.base.vertex_count(); ++u) {
        int hits = 0;
        for (int x : c.blocks[u]) hits += in[x];
        if (hits != 1) return false;
    }
    for (int x : chosen) {
        bool clash = false;
        c.conflict.neighbours(x).for_each([&](int y) {
            if (in[y]) clash = true;
        });
        if (clash) return false;
    }
    return true;
}

nlohmann::json cover_to_json(const Cover& c) {
    nlohmann::json j;
    j["n"] = c.base.vertex_count();
    j["blocks"] = c.blocks;
    auto cross = nlohmann::json::array();
    for (auto [x, y] : c.conflict.edges())
        if (c.owner[x] != c.owner[y]) cross.push_back({x, y});
    j["conflictEdges"] = std::move(cross);
    j["fromLists"] = c.from_lists;
    return j;
}

Cover cover_from_json(const Graph& g, const nlohmann::json& j) {
    if (j.at("n").get<int>() != g.vertex_count())
        throw parse_error("cover n does not match the graph");
    std::vector<std::vector<int>> blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    std::vector<std::pair<int, int>> cross;
    for (const auto& e : j.at("conflictEdges"))
        cross.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return assemble(g, std::move(blocks), std::move(cross),
                    j.value("fromLists", false));
}

std::vector<std::vector<int>> parse_lists(const std::string& text, int n) {
    std::vector<std::vector<int>> lists(n);
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw parse_error("expected '<vertex>: <colours>'", lineno);
        int v;
        try {
            v = std::stoi(line.substr(0, colon));
        } catch (...) {
            throw parse_error("bad vertex index", lineno);
        }
        if (v < 0 || v >= n) throw parse_error("vertex index out of range", lineno);
        std::istringstream cs(line.substr(colon + 1));
        int c;
        while (cs >> c) lists[v].push_back(c);
        if (lists[v].empty()) throw parse_error("empty colour list", lineno);
    }
    for (int v = 0; v < n; ++v)
        if (lists[v].empty())
            throw parse_error("vertex " + std::to_string(v) + " has no colour list");
    return lists;
}

}  // namespace hcm
