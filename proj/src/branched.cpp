#include "veer/branched.hpp"

#include <map>

namespace veer {

std::vector<triple_point> triple_points(const veering_triangulation& V) {
    std::vector<triple_point> out;
    for (int t = 0; t < V.tri.tet_count(); ++t)
        out.push_back({t, V.colors.color[V.roles[t].top_edge]});
    return out;
}

namespace {

std::vector<strand> tet_strands(const veering_triangulation& V, int t) {
    const tet_role& r = V.roles[t];
    edge_color topcol = V.colors.color[r.top_edge];
    std::vector<strand> out;
    for (int k = 0; k < 4; ++k) {
        int ec = r.equator_edges[k];
        if (V.colors.color[ec] == topcol) continue; // minority color only
        int u = r.equator_cycle_verts[k], v = r.equator_cycle_verts[(k + 1) % 4];
        strand s;
        s.tet = t;
        s.edge = tet_edge_index(u, v);
        s.top_vert = (u == r.top_verts[0] || u == r.top_verts[1]) ? u : v;
        s.bottom_vert = (s.top_vert == u) ? v : u;
        // faces containing the strand edge: the two faces opposite the other
        // two vertices; top faces of the tet are those opposite c and d
        int f1 = -1, f2 = -1;
        for (int f = 0; f < 4; ++f) {
            if (f == u || f == v) continue;
            (f1 < 0 ? f1 : f2) = f;
        }
        bool f1_top = V.co.out[t][f1];
        s.in_face = f1_top ? f1 : f2;
        s.out_face = f1_top ? f2 : f1;
        out.push_back(s);
    }
    return out;
}

} // namespace

std::vector<branch_component> branch_components(const veering_triangulation& V) {
    const int n = V.tri.tet_count();
    std::map<std::pair<int, int>, strand> by_in_face; // (tet, top face) -> strand
    std::vector<strand> all;
    for (int t = 0; t < n; ++t) {
        for (const strand& s : tet_strands(V, t)) {
            by_in_face[{s.tet, s.in_face}] = s;
            all.push_back(s);
        }
    }
    auto faces = build_face_classes(V.tri);
    std::vector<std::array<int, 4>> fid(n, {-1, -1, -1, -1});
    for (const auto& fc : faces) {
        fid[fc.tet[0]][fc.face[0]] = fc.id;
        fid[fc.tet[1]][fc.face[1]] = fc.id;
    }

    std::map<std::pair<int, int>, int> comp_of; // (tet, edge) -> component id
    std::vector<branch_component> comps;
    for (const strand& s0 : all) {
        if (comp_of.count({s0.tet, s0.edge})) continue;
        branch_component bc;
        bc.id = static_cast<int>(comps.size());
        strand s = s0;
        int end = -1;
        while (!comp_of.count({s.tet, s.edge})) {
            comp_of[{s.tet, s.edge}] = bc.id;
            bc.strands.push_back(s);
            bc.face_classes.push_back(fid[s.tet][s.out_face]);
            // cusp assignment: the wedge between fin and quadrilateral hugs the
            // top-edge endpoint of the strand edge
            int e = V.cells.vertex_of[s.tet][s.top_vert];
            if (end < 0)
                end = e;
            else if (end != e)
                throw validation_error("branch component end assignment inconsistent (component " +
                                       std::to_string(bc.id) + ")");
            const gluing& g = V.tri.glu[s.tet][s.out_face];
            auto it = by_in_face.find({g.tet, g.p[s.out_face]});
            if (it == by_in_face.end())
                throw validation_error("branch strand chaining broke at tet " + std::to_string(s.tet));
            s = it->second;
        }
        bc.end = end;
        comps.push_back(std::move(bc));
    }
    return comps;
}

cusp_report ladderpole_counts(const veering_triangulation& V) {
    cusp_report rep;
    rep.ladderpole_count.assign(V.cells.vertices.size(), 0);
    for (const auto& bc : branch_components(V)) {
        ++rep.ladderpole_count[bc.end];
        ++rep.total_components;
    }
    return rep;
}

vbs_report verify_vbs_axioms(const ideal_triangulation& T, const cell_classes& C, const taut_structure& A,
                             const coorientation& co, const std::vector<int>& tet_sign,
                             const edge_coloring& colors) {
    vbs_report rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.violations.push_back(s);
    };
    // equatorial colors must alternate in every tetrahedron (two of each,
    // opposite edges matching); this is condition (iii)'s combinatorial shadow
    auto roles = tet_roles(T, C, A, co, tet_sign);
    for (int t = 0; t < T.tet_count(); ++t) {
        const auto& r = roles[t];
        for (int k = 0; k < 2; ++k) {
            if (colors.color[r.equator_edges[k]] != colors.color[r.equator_edges[k + 2]])
                fail("tet " + std::to_string(t) + ": opposite equatorial edges " + std::to_string(k) + "," +
                     std::to_string(k + 2) + " differ in color");
            if (colors.color[r.equator_edges[k]] == colors.color[r.equator_edges[k + 1]])
                fail("tet " + std::to_string(t) + ": adjacent equatorial edges share a color");
        }
    }
    // quadrilateral sectors: every edge class is top of exactly one tet and
    // bottom of exactly one
    std::vector<int> topm(C.edges.size(), 0), botm(C.edges.size(), 0);
    for (const auto& r : roles) {
        ++topm[r.top_edge];
        ++botm[r.bottom_edge];
    }
    for (size_t e = 0; e < C.edges.size(); ++e) {
        if (topm[e] != 1) fail("edge class " + std::to_string(e) + " has top multiplicity " + std::to_string(topm[e]));
        if (botm[e] != 1)
            fail("edge class " + std::to_string(e) + " has bottom multiplicity " + std::to_string(botm[e]));
    }
    return rep;
}

vbs_report verify_vbs_axioms(const veering_triangulation& V) {
    return verify_vbs_axioms(V.tri, V.cells, V.angles, V.co, V.tet_sign, V.colors);
}

} // namespace veer
