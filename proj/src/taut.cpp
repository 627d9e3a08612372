#include "veer/taut.hpp"

#include "veer/isosig.hpp"

#include <algorithm>
#include <queue>

namespace veer {

std::array<int, 2> taut_structure::pi_edges(int digit) {
    // digit d: pi on edges (0, d+1) and its opposite pair
    switch (digit) {
        case 0: return {tet_edge_index(0, 1), tet_edge_index(2, 3)};
        case 1: return {tet_edge_index(0, 2), tet_edge_index(1, 3)};
        case 2: return {tet_edge_index(0, 3), tet_edge_index(1, 2)};
    }
    throw std::out_of_range("taut digit must be 0, 1 or 2");
}

taut_structure parse_taut_angles(const std::string& digits, const ideal_triangulation& T) {
    if (static_cast<int>(digits.size()) != T.tet_count())
        throw validation_error("angle digit count " + std::to_string(digits.size()) + " != tet count " +
                               std::to_string(T.tet_count()));
    taut_structure A;
    for (char c : digits) {
        if (c < '0' || c > '2') throw validation_error(std::string("bad angle digit '") + c + "'");
        A.pi_pair.push_back(c - '0');
    }
    return A;
}

taut_report validate_taut(const ideal_triangulation& T, const cell_classes& C, const taut_structure& A) {
    std::vector<int> picount(C.edges.size(), 0);
    for (int t = 0; t < T.tet_count(); ++t)
        for (int e : taut_structure::pi_edges(A.pi_pair[t])) ++picount[C.edge_of[t][e]];
    taut_report rep;
    rep.ok = true;
    for (size_t i = 0; i < picount.size(); ++i) {
        if (picount[i] != 2) {
            rep.ok = false;
            rep.bad_edges.push_back(static_cast<int>(i));
        }
    }
    return rep;
}

namespace {

// top edge choice x in {0,1}: 0 -> pair edge (0,d+1) is top, 1 -> the opposite.
// out faces of the tet are the two faces NOT containing... the top edge (a,b)
// lies in the faces opposite c and d; those two faces point out.
std::array<bool, 4> out_faces_for(int digit, int x) {
    auto pe = taut_structure::pi_edges(digit);
    int top = pe[x];
    int a = tet_edge_verts[top][0], b = tet_edge_verts[top][1];
    std::array<bool, 4> out{false, false, false, false};
    for (int f = 0; f < 4; ++f)
        if (f != a && f != b) out[f] = true;
    return out;
}

} // namespace

std::optional<coorientation> derive_transverse_taut(const ideal_triangulation& T, const cell_classes& C,
                                                    const taut_structure& A, std::string* diag) {
    (void)C;
    const int n = T.tet_count();
    std::vector<int> x(n, -1);
    coorientation co;
    co.out.assign(n, {false, false, false, false});
    for (int root = 0; root < n; ++root) {
        if (x[root] >= 0) continue;
        x[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int t = q.front();
            q.pop();
            auto out_t = out_faces_for(A.pi_pair[t], x[t]);
            for (int f = 0; f < 4; ++f) {
                const gluing& g = T.glu[t][f];
                int f2 = g.p[f];
                bool want = !out_t[f]; // the far side must point the other way
                auto o0 = out_faces_for(A.pi_pair[g.tet], 0);
                auto o1 = out_faces_for(A.pi_pair[g.tet], 1);
                int need;
                if (o0[f2] == want && o1[f2] != want)
                    need = 0;
                else if (o1[f2] == want && o0[f2] != want)
                    need = 1;
                else {
                    if (diag) *diag = "face " + std::to_string(f2) + " of tet " + std::to_string(g.tet) +
                                      " cannot be cooriented";
                    return std::nullopt;
                }
                if (x[g.tet] < 0) {
                    x[g.tet] = need;
                    q.push(g.tet);
                } else if (x[g.tet] != need) {
                    if (diag) *diag = "coorientation propagation contradiction at tet " + std::to_string(g.tet);
                    return std::nullopt;
                }
            }
        }
    }
    for (int t = 0; t < n; ++t) co.out[t] = out_faces_for(A.pi_pair[t], x[t]);
    // deterministic representative: tet 0 face 0 points outward
    if (n > 0 && !co.out[0][0])
        for (int t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f) co.out[t][f] = !co.out[t][f];
    return co;
}

int edge_coloring::blue_count() const {
    return static_cast<int>(std::count(color.begin(), color.end(), edge_color::blue));
}
int edge_coloring::red_count() const {
    return static_cast<int>(std::count(color.begin(), color.end(), edge_color::red));
}

namespace {

struct tet_frame {
    int a, b, c, d; // top edge (a,b), bottom edge (c,d)
    int s;          // sign of (a,b,c,d) times ambient tet sign
};

tet_frame make_frame(const taut_structure& A, const coorientation& co, const std::vector<int>& tet_sign, int t) {
    auto pe = taut_structure::pi_edges(A.pi_pair[t]);
    // top edge = the pi edge contained in both out-faces
    int top = -1, bot = -1;
    for (int k = 0; k < 2; ++k) {
        int e = pe[k];
        int u = tet_edge_verts[e][0], v = tet_edge_verts[e][1];
        // e lies in the faces opposite the two other vertices
        bool in_out_faces = true;
        for (int f = 0; f < 4; ++f) {
            if (f == u || f == v) continue;
            if (!co.out[t][f]) in_out_faces = false;
        }
        if (in_out_faces)
            top = e;
        else
            bot = e;
    }
    tet_frame fr;
    fr.a = tet_edge_verts[top][0];
    fr.b = tet_edge_verts[top][1];
    fr.c = tet_edge_verts[bot][0];
    fr.d = tet_edge_verts[bot][1];
    perm4 p;
    p.im = {static_cast<uint8_t>(fr.a), static_cast<uint8_t>(fr.b), static_cast<uint8_t>(fr.c),
            static_cast<uint8_t>(fr.d)};
    fr.s = p.sign() * tet_sign[t];
    return fr;
}

} // namespace

std::optional<edge_coloring> derive_veering_colors(const ideal_triangulation& T, const cell_classes& C,
                                                   const taut_structure& A, const coorientation& co,
                                                   const std::vector<int>& tet_sign, std::string* diag) {
    edge_coloring col;
    std::vector<int> assigned(C.edges.size(), -1); // -1 unknown, else 0 red / 1 blue
    for (int t = 0; t < T.tet_count(); ++t) {
        tet_frame fr = make_frame(A, co, tet_sign, t);
        // s = -1: (a,d),(b,c) red; s = +1: (a,c),(b,d) red
        std::array<std::pair<int, int>, 2> red_edges, blue_edges;
        if (fr.s < 0) {
            red_edges = {std::pair{fr.a, fr.d}, std::pair{fr.b, fr.c}};
            blue_edges = {std::pair{fr.a, fr.c}, std::pair{fr.b, fr.d}};
        } else {
            red_edges = {std::pair{fr.a, fr.c}, std::pair{fr.b, fr.d}};
            blue_edges = {std::pair{fr.a, fr.d}, std::pair{fr.b, fr.c}};
        }
        for (auto [u, v] : red_edges) {
            int ec = C.edge_of[t][tet_edge_index(u, v)];
            if (assigned[ec] == 1) {
                if (diag) *diag = "color clash on edge class " + std::to_string(ec);
                return std::nullopt;
            }
            assigned[ec] = 0;
        }
        for (auto [u, v] : blue_edges) {
            int ec = C.edge_of[t][tet_edge_index(u, v)];
            if (assigned[ec] == 0) {
                if (diag) *diag = "color clash on edge class " + std::to_string(ec);
                return std::nullopt;
            }
            assigned[ec] = 1;
        }
    }
    col.color.resize(C.edges.size());
    for (size_t i = 0; i < assigned.size(); ++i)
        col.color[i] = (assigned[i] == 1) ? edge_color::blue : edge_color::red; // unconstrained edges default red
    return col;
}

std::vector<tet_role> tet_roles(const ideal_triangulation& T, const cell_classes& C, const taut_structure& A,
                                const coorientation& co, const std::vector<int>& tet_sign) {
    std::vector<tet_role> roles;
    for (int t = 0; t < T.tet_count(); ++t) {
        tet_frame fr = make_frame(A, co, tet_sign, t);
        tet_role r;
        r.top_edge = C.edge_of[t][tet_edge_index(fr.a, fr.b)];
        r.bottom_edge = C.edge_of[t][tet_edge_index(fr.c, fr.d)];
        r.top_verts = {fr.a, fr.b};
        r.bottom_verts = {fr.c, fr.d};
        // anticlockwise from above starting at a: (a,d,b,c) if s<0 else (a,c,b,d)
        if (fr.s < 0)
            r.equator_cycle_verts = {fr.a, fr.d, fr.b, fr.c};
        else
            r.equator_cycle_verts = {fr.a, fr.c, fr.b, fr.d};
        for (int k = 0; k < 4; ++k) {
            int u = r.equator_cycle_verts[k], v = r.equator_cycle_verts[(k + 1) % 4];
            r.equator_edges[k] = C.edge_of[t][tet_edge_index(u, v)];
        }
        roles.push_back(r);
    }
    return roles;
}

veering_triangulation validate_veering(const ideal_triangulation& T, const taut_structure& A) {
    T.validate();
    veering_triangulation V;
    V.tri = T;
    V.cells = build_cell_classes(V.tri);
    V.angles = A;
    auto tr = validate_taut(V.tri, V.cells, V.angles);
    if (!tr.ok) {
        std::string msg = "not taut; bad edge classes:";
        for (int e : tr.bad_edges) msg += " " + std::to_string(e);
        throw validation_error(msg);
    }
    auto sign = V.tri.orientation();
    if (!sign) throw validation_error("triangulation is not orientable");
    V.tet_sign = *sign;
    std::string diag;
    auto co = derive_transverse_taut(V.tri, V.cells, V.angles, &diag);
    if (!co) throw validation_error("not transverse taut: " + diag);
    V.co = *co;
    auto colors = derive_veering_colors(V.tri, V.cells, V.angles, V.co, V.tet_sign, &diag);
    if (!colors) throw validation_error("not veering: " + diag);
    V.colors = *colors;
    V.roles = tet_roles(V.tri, V.cells, V.angles, V.co, V.tet_sign);
    return V;
}

std::pair<std::string, std::string> split_sig_angles(const std::string& combined) {
    auto pos = combined.find('_');
    if (pos == std::string::npos) throw validation_error("expected <isosig>_<angle-digits>");
    return {combined.substr(0, pos), combined.substr(pos + 1)};
}

veering_triangulation validate_veering(const std::string& sig_angles) {
    auto [sig, digits] = split_sig_angles(sig_angles);
    ideal_triangulation T = decode_isosig(sig);
    return validate_veering(T, parse_taut_angles(digits, T));
}

} // namespace veer
