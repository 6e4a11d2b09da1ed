#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "hcm/graph.hpp"
#include "hcm/rng.hpp"

namespace hcm {

// Correspondence-colouring cover of a base graph: a conflict graph H whose
// nodes partition into one clique block per base vertex, with cross edges
// forming a matching between the blocks of each base edge. A colouring of the
// base graph is an independent transversal of the blocks in H.
struct Cover {
    Graph base;
    Graph conflict;                        // H: block cliques plus cross edges
    std::vector<std::vector<int>> blocks;  // L(u), H-node ids per base vertex
    std::vector<int> owner;                // H-node -> base vertex

    int hnode_count() const { return conflict.vertex_count(); }
    bool from_lists = false;
};

// One H-node per (vertex, colour); cross edges join equal colours across base
// edges. Lists must be non-empty.
Cover cover_from_lists(const Graph& g, const std::vector<std::vector<int>>& lists);

struct RandomCoverOptions {
    // 1.0 keeps the whole random permutation per edge (perfect matchings);
    // smaller values keep each matched pair independently.
    double matching_density = 1.0;
};

Cover random_cover(const Graph& g, int k, Rng& rng, const RandomCoverOptions& opt = {});

// Checks the four structural cover invariants; throws std::invalid_argument
// naming the first violation.
void audit_cover(const Cover& cover);

// True iff chosen is independent in H and meets every block exactly once.
bool verify_colouring(const Cover& cover, const std::vector<int>& chosen);

// JSON round-trip: {n, blocks, conflictEdges, fromLists}; conflictEdges lists
// the cross edges only (block cliques are implied and rebuilt on load).
nlohmann::json cover_to_json(const Cover& cover);
Cover cover_from_json(const Graph& g, const nlohmann::json& j);

// Lists file: lines "<vertex>: <c1> <c2> ...".
std::vector<std::vector<int>> parse_lists(const std::string& text, int n);

}  // namespace hcm
