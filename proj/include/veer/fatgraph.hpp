#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace veer {

struct fatgraph_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 4-valent rotation-system graph encoding a filling multicurve. Half-edges are
// dense ids 0..4V-1; slots are listed counterclockwise. Faces (regions) are
// traversed with the interior on the left: next(h) = rotate_cw(opposite(h)).
struct fatgraph {
    std::vector<std::array<int, 4>> slots; // per vertex, CCW
    std::vector<int> opp;                  // half-edge involution
    std::vector<int> vertex_of;            // derived
    std::vector<int> slot_of;              // derived

    struct region {
        int id;
        std::vector<int> sides; // directed half-edges h_0..h_{n-1}; corner i at start of h_i
        int size() const { return static_cast<int>(sides.size()); }
    };
    std::vector<region> regions; // derived

    int vertex_count() const { return static_cast<int>(slots.size()); }
    int half_edge_count() const { return 4 * vertex_count(); }
    int edge_count() const { return 2 * vertex_count(); }
    int euler_characteristic() const { return vertex_count() - edge_count() + static_cast<int>(regions.size()); }

    int edge_of_half(int h) const { return std::min(h, opp[h]); }
    int rotate(int h, int k) const { // k slots counterclockwise
        int v = vertex_of[h];
        return slots[v][((slot_of[h] + k) % 4 + 4) % 4];
    }

    // builds derived data and validates: 4-valence, perfect pairing,
    // connectivity, every region with >= 4 sides
    void finalize();

    std::vector<std::vector<int>> curve_components() const; // undirected: lists of half-edges, one per direction pair
};

fatgraph load_fatgraph_json(const std::string& json_text);
std::string fatgraph_to_json(const fatgraph& F);

// right-angled hexagon decomposition of the genus-g surface (double of a
// cyclic pants chain): 6(g-1) vertices, 12(g-1) edges, 4(g-1) hexagons
fatgraph hexagon_decomposition(int genus);

// edge ids forming the mirror multicurve of hexagon_decomposition(g)
std::vector<int> hexagon_mirror_edges(const fatgraph& F, int genus);

// m x k grid multicurve on the torus; all regions are squares
fatgraph torus_grid(int m, int k);

long long flow_box_count(const fatgraph& F); // sum of 3 n (n-3)

} // namespace veer
