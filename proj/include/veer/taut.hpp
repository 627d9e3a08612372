#pragma once

#include "veer/triangulation.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace veer {

// pi-pair selector per tetrahedron: digit d in {0,1,2} puts angle pi on the
// opposite edge pair (edge (0,d+1) | complementary edge), angle 0 elsewhere.
struct taut_structure {
    std::vector<int> pi_pair;

    // the two pi edges (as tet-edge indices 0..5) of tet t
    static std::array<int, 2> pi_edges(int digit);
};

taut_structure parse_taut_angles(const std::string& digits, const ideal_triangulation& T);

struct taut_report {
    bool ok = false;
    std::vector<int> bad_edges; // edge class ids with pi-incidence count != 2
};

taut_report validate_taut(const ideal_triangulation& T, const cell_classes& C, const taut_structure& A);

// face coorientations: out[t][f] = true iff face f of tet t points out of t
// ("t is below the face").
struct coorientation {
    std::vector<std::array<bool, 4>> out;
};

// constraint propagation over face gluings; returns the representative in
// which tet 0's face 0 is cooriented outward, or nullopt with a diagnostic.
std::optional<coorientation> derive_transverse_taut(const ideal_triangulation& T, const cell_classes& C,
                                                    const taut_structure& A, std::string* diag = nullptr);

enum class edge_color : unsigned char { red, blue };

struct edge_coloring {
    std::vector<edge_color> color; // per edge class
    int blue_count() const;
    int red_count() const;
};

// per-tet derived roles
struct tet_role {
    int top_edge;                    // edge class id
    int bottom_edge;                 // edge class id
    std::array<int, 2> top_verts;    // vertex labels (a,b) of the top edge
    std::array<int, 2> bottom_verts; // (c,d)
    // equatorial 4-cycle, anticlockwise viewed from above, starting at an end
    // of the top edge; entry k is the tet-edge joining cycle vertices k, k+1
    std::array<int, 4> equator_cycle_verts;
    std::array<int, 4> equator_edges; // edge class ids
};

struct veering_triangulation {
    ideal_triangulation tri;
    cell_classes cells;
    taut_structure angles;
    coorientation co;
    edge_coloring colors;
    std::vector<int> tet_sign; // ambient orientation: lowest tet of each component is +1
    std::vector<tet_role> roles;
};

// Color forcing per the anticlockwise red,blue,red,blue convention; fails with
// the clashing edge class in *diag.
std::optional<edge_coloring> derive_veering_colors(const ideal_triangulation& T, const cell_classes& C,
                                                   const taut_structure& A, const coorientation& co,
                                                   const std::vector<int>& tet_sign, std::string* diag = nullptr);

std::vector<tet_role> tet_roles(const ideal_triangulation& T, const cell_classes& C, const taut_structure& A,
                                const coorientation& co, const std::vector<int>& tet_sign);

// full pipeline: decode -> orient -> taut -> transverse taut -> veering.
// Throws validation_error with a stage-specific message on failure.
veering_triangulation validate_veering(const ideal_triangulation& T, const taut_structure& A);
veering_triangulation validate_veering(const std::string& sig_angles);

// "isosig_digits" -> (isosig, digits)
std::pair<std::string, std::string> split_sig_angles(const std::string& combined);

} // namespace veer
