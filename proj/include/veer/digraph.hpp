#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace veer {

// Directed multigraph. Edges keep stable ids; removal marks them dead.
struct digraph {
    struct edge {
        int src, dst;
        bool alive = true;
    };
    int n = 0;
    std::vector<edge> edges;

    int add_vertex() { return n++; }
    int add_edge(int s, int d) {
        edges.push_back({s, d, true});
        return static_cast<int>(edges.size()) - 1;
    }

    std::vector<std::vector<int>> out_adj(const std::vector<char>* alive_vertex = nullptr) const;
    std::vector<int> out_degree(const std::vector<char>* alive_vertex = nullptr) const;
};

struct reduction_result {
    digraph graph;                         // reduced graph (dead edges marked)
    std::vector<char> vertex_alive;        // per original vertex
    std::vector<std::vector<int>> removed_cycles; // vertex-disjoint cycles, vertex lists
};

// Remove every cycle all of whose vertices have out-degree exactly 1, along
// with the edges entering it; iterated to a fixpoint.
reduction_result reduce(const digraph& G);

enum class inf_mode { oracle, scc };

// Infinitesimal component = proper nonempty closed vertex subset (no edges
// leaving the subset). Oracle mode enumerates all subsets (|V| <= 20,
// throws above); scc mode is exact via condensation.
bool is_infinitesimal_free(const digraph& G, inf_mode mode = inf_mode::scc);
bool is_infinitesimal_free(const digraph& G, const std::vector<char>& vertex_alive, inf_mode mode = inf_mode::scc);

struct cycle {
    std::vector<int> vertices; // rotated so the smallest vertex id is first
    std::vector<int> edge_ids; // edge_ids[k] goes vertices[k] -> vertices[k+1]
    int length() const { return static_cast<int>(vertices.size()); }
};

// All elementary directed cycles of length <= max_len (self-loops count,
// parallel edges give distinct cycles), deterministic order.
std::vector<cycle> enumerate_cycles(const digraph& G, int max_len);

} // namespace veer
