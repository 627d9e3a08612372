#include "veer/homology.hpp"

namespace veer {

imat dual_d1(const ideal_triangulation& T, const coorientation& co) {
    auto faces = build_face_classes(T);
    imat d1(T.tet_count(), static_cast<int>(faces.size()));
    for (const auto& fc : faces) {
        // dual edge oriented below -> above
        int below, above;
        if (co.out[fc.tet[0]][fc.face[0]]) {
            below = fc.tet[0];
            above = fc.tet[1];
        } else {
            below = fc.tet[1];
            above = fc.tet[0];
        }
        d1.at(above, fc.id) += 1;
        d1.at(below, fc.id) -= 1;
    }
    return d1;
}

imat dual_d2(const ideal_triangulation& T, const coorientation& co) {
    auto faces = build_face_classes(T);
    std::vector<std::array<int, 4>> fid(T.tet_count(), {-1, -1, -1, -1});
    for (const auto& fc : faces) {
        fid[fc.tet[0]][fc.face[0]] = fc.id;
        fid[fc.tet[1]][fc.face[1]] = fc.id;
    }
    auto C = build_cell_classes(T);
    imat d2(static_cast<int>(faces.size()), static_cast<int>(C.edges.size()));
    for (const auto& ec : C.edges) {
        // walk the fan; crossing face f of tet t contributes +1 if the
        // coorientation agrees with the walk direction (face points out of t)
        const auto& start = ec.fan.front();
        int t = start.tet, a = start.from, b = start.to;
        int f = -1;
        for (int v = 0; v < 4; ++v)
            if (v != a && v != b) { f = v; break; }
        const int t0 = t, a0 = a, b0 = b, f0 = f;
        do {
            d2.at(fid[t][f], ec.id) += co.out[t][f] ? 1 : -1;
            const gluing& g = T.glu[t][f];
            int na = g.p[a], nb = g.p[b], nf = g.p[f];
            int other = -1;
            for (int v = 0; v < 4; ++v)
                if (v != na && v != nb && v != nf) { other = v; break; }
            t = g.tet;
            a = na;
            b = nb;
            f = other;
        } while (!(t == t0 && a == a0 && b == b0 && f == f0));
    }
    return d2;
}

// H1 = ker d1 / im d2. ker d1 is a pure sublattice, so the torsion of the
// quotient equals the invariant factors of d2 and the free rank is
// (c1 - rank d1) - rank d2.
abelian_group homology_h1(const ideal_triangulation& T, const coorientation& co) {
    if (!T.orientation()) throw validation_error("homology_h1 requires an orientable triangulation");
    imat d1 = dual_d1(T, co);
    imat d2 = dual_d2(T, co);
    snf_result s1 = smith_normal_form(d1);
    snf_result s2 = smith_normal_form(d2);
    abelian_group H;
    H.free_rank = (d1.cols - s1.rank()) - s2.rank();
    for (long long d : s2.diagonal())
        if (d > 1) H.torsion.push_back(d);
    return H;
}

} // namespace veer
