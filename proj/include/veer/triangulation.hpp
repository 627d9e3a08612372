#pragma once

#include "veer/perm4.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace veer {

// Tet-edge numbering: 0:(01) 1:(02) 2:(03) 3:(12) 4:(13) 5:(23).
constexpr std::array<std::array<int, 2>, 6> tet_edge_verts = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int tet_edge_index(int u, int v);

struct gluing {
    int tet = -1;
    perm4 p; // vertex map, this tet -> target tet
};

// Ideal triangulation with every face glued (closed pseudo-manifold minus vertices).
struct ideal_triangulation {
    // glu[t][f]: face f of tet t (face index = opposite vertex)
    std::vector<std::array<gluing, 4>> glu;

    int tet_count() const { return static_cast<int>(glu.size()); }

    // involution + face-onto-face check; throws validation_error on failure
    void validate() const;
    bool is_connected() const;

    // per-tet orientation signs (lowest-index tet of each component is +1),
    // or nullopt if non-orientable
    std::optional<std::vector<int>> orientation() const;
};

struct edge_incidence {
    int tet;
    int edge;       // 0..5
    int from, to;   // ordered vertex pair as traversed by the fan walk
};

struct edge_class {
    int id;
    std::vector<edge_incidence> fan; // single cyclic fan around the edge
    int degree() const { return static_cast<int>(fan.size()); }
};

struct vertex_class {
    int id;
    std::vector<std::pair<int, int>> corners; // (tet, vertex)
};

// Derived cell classes. Built once, shared by everything downstream.
struct cell_classes {
    std::vector<edge_class> edges;
    std::vector<vertex_class> vertices;
    std::vector<std::vector<int>> edge_of;   // [t][0..5] -> edge class id
    std::vector<std::array<int, 4>> vertex_of; // [t][v] -> vertex class id
};

cell_classes build_cell_classes(const ideal_triangulation& T);

// Face classes: one per glued face pair; side 0 is the lexicographically
// smaller (tet, face).
struct face_class {
    int id;
    int tet[2];
    int face[2];
};

std::vector<face_class> build_face_classes(const ideal_triangulation& T);

struct dual_graph {
    int vertex_count = 0;                      // tetrahedra
    std::vector<std::pair<int, int>> edges;    // one per face class; loops allowed
};

dual_graph build_dual_graph(const ideal_triangulation& T);
bool has_doubled_edge(const dual_graph& G);
bool has_triangle(const dual_graph& G);

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace veer
