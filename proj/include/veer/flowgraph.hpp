#pragma once

#include "veer/digraph.hpp"
#include "veer/taut.hpp"

#include <string>
#include <vector>

namespace veer {

enum class flow_edge_role { top, side_a, side_b };

// Flow graph Phi: vertices = edge classes, 3 edges per tetrahedron from the
// top edge and the two minority-color side edges into the bottom edge.
// Planar orderings are not defined for generic census input.
struct flow_graph {
    digraph g;
    struct label {
        int tet;
        flow_edge_role role;
    };
    std::vector<label> edge_labels; // parallel to g.edges
};

flow_graph build_flow_graph(const veering_triangulation& V);

} // namespace veer
