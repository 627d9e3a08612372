#pragma once

#include "veer/digraph.hpp"
#include "veer/fatgraph.hpp"

#include <string>
#include <vector>

namespace veer {

// Markov-partition graph of the geodesic flow built region by region from the
// splitting-move stages. Vertices are arrows: side arrows (edge, side),
// quadrant arrows (vertex, quadrant), and per-region internal stage arrows.
// All edges carry the constant "fiber" framing tag.
struct markov_graph {
    enum class arrow_kind : unsigned char { side, quadrant, internal };
    struct arrow {
        arrow_kind kind;
        int half_edge = -1; // side: points into the region left of this half-edge
                            // quadrant: corner quadrant at the start of this half-edge
        int region = -1;    // internal arrows
        int stage = -1;     // internal level s >= 1
        int index = -1;     // internal cyclic index j
        char family = 0;    // internal: 'd' or 'c'
        std::string label() const;
    };

    digraph g;                       // on canonical vertex ids
    std::vector<std::vector<arrow>> aliases; // per canonical vertex (merged arrows keep all names)
    std::vector<int> canon_of_raw;   // raw arrow id -> canonical vertex (size 2H + internals)

    struct edge_info {
        int region;
        int frame;            // 0-based frame index within the region's movie
        char exit_side;       // 'L', 'R' or 'M' (the birth edge of the move)
    };
    std::vector<edge_info> edge_infos; // parallel to g.edges

    // planar orderings: incoming as the splitting-move order (already a
    // sequence up to reversal); outgoing edges sorted by exit side and stage
    std::vector<std::vector<int>> in_order;
    std::vector<std::vector<int>> out_order;

    static constexpr const char* framing = "fiber";

    int raw_side_arrow(const fatgraph& F, int half_edge) const;
    int raw_quadrant_arrow(const fatgraph& F, int half_edge) const;
};

markov_graph build_markov_graph(const fatgraph& F);

struct markov_reduction {
    reduction_result red;
    // removed vertices, classified
    std::vector<int> removed_quadrant_arrows;
    std::vector<int> removed_internal;
    std::vector<int> removed_other; // should stay empty
};

markov_reduction reduce_markov(const fatgraph& F, const markov_graph& MG);

// quadrant arrow whose left and right neighbouring regions are squares
bool square_flanked(const fatgraph& F, int half_edge);

// induced subgraph of arrows strictly inside one half of the doubled surface;
// doubling_edges must be a union of curve components that separates regions
// into two classes. side selects the half (0 = the half containing region 0).
markov_graph restrict_to_half(const fatgraph& F, const markov_graph& MG, const std::vector<int>& doubling_edges,
                              int side = 0);

// planar-ordering comparison up to complete reversal
bool same_planar_order(const std::vector<int>& a, const std::vector<int>& b);

} // namespace veer
