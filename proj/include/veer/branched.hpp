#pragma once

#include "veer/taut.hpp"

#include <vector>

namespace veer {

// Combinatorics of the unstable branched surface, read off the veering
// triangulation: triple points <-> tetrahedra, branch-locus 1-cells <-> faces,
// sectors <-> edges.

struct triple_point {
    int tet;
    edge_color color; // = color of the tet's top edge
};

std::vector<triple_point> triple_points(const veering_triangulation& V);

// One strand per (tet, minority-color equatorial edge): enters through a top
// face, exits through the adjacent bottom face, oriented top -> bottom.
struct strand {
    int tet;
    int edge;       // tet-edge index 0..5 of the minority-color equatorial edge
    int top_vert;   // the end of the strand edge lying on the tet's top edge
    int bottom_vert;
    int in_face;    // top face the strand enters through
    int out_face;   // bottom face it exits through
};

struct branch_component {
    int id;
    std::vector<strand> strands;   // cyclic, oriented top -> bottom
    std::vector<int> face_classes; // faces traversed, same cyclic order
    int end;                       // vertex class (cusp) whose cusp circle this is
};

std::vector<branch_component> branch_components(const veering_triangulation& V);

struct cusp_report {
    std::vector<int> ladderpole_count; // per vertex class
    int total_components = 0;
};

cusp_report ladderpole_counts(const veering_triangulation& V);

// Dual-side checks of the veering branched surface axioms. Works from raw
// pieces so that deliberately corrupted colorings are reportable.
struct vbs_report {
    bool ok = true;
    std::vector<std::string> violations;
};

vbs_report verify_vbs_axioms(const ideal_triangulation& T, const cell_classes& C, const taut_structure& A,
                             const coorientation& co, const std::vector<int>& tet_sign, const edge_coloring& colors);
vbs_report verify_vbs_axioms(const veering_triangulation& V);

} // namespace veer
