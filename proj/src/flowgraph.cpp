#include "veer/flowgraph.hpp"

namespace veer {

flow_graph build_flow_graph(const veering_triangulation& V) {
    flow_graph F;
    F.g.n = static_cast<int>(V.cells.edges.size());
    for (int t = 0; t < V.tri.tet_count(); ++t) {
        const tet_role& r = V.roles[t];
        edge_color topcol = V.colors.color[r.top_edge];
        F.g.add_edge(r.top_edge, r.bottom_edge);
        F.edge_labels.push_back({t, flow_edge_role::top});
        // side edges of the opposite color, in equator order
        bool first = true;
        for (int k = 0; k < 4; ++k) {
            int ec = r.equator_edges[k];
            if (V.colors.color[ec] == topcol) continue;
            F.g.add_edge(ec, r.bottom_edge);
            F.edge_labels.push_back({t, first ? flow_edge_role::side_a : flow_edge_role::side_b});
            first = false;
        }
    }
    return F;
}

} // namespace veer
