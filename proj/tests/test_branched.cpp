#include "veer/branched.hpp"
#include "veer/homology.hpp"
#include "veer/isosig.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace veer;

TEST_CASE("triple points: one per tetrahedron, colored like the edge counts") {
    for (const auto& entry : fixtures::all_entries()) {
        veering_triangulation V = validate_veering(entry);
        auto tps = triple_points(V);
        CHECK(static_cast<int>(tps.size()) == V.tri.tet_count());
        int blue = 0, red = 0;
        for (const auto& tp : tps) (tp.color == edge_color::blue ? blue : red) += 1;
        // every edge is the top of exactly one tet, so the two counts agree
        CHECK(blue == V.colors.blue_count());
        CHECK(red == V.colors.red_count());
    }
}

TEST_CASE("the (2,6,6) candidates have (blue, red) = (12, 2) triple points") {
    for (const char* e : {fixtures::accepted_266, fixtures::rejected_266}) {
        veering_triangulation V = validate_veering(e);
        auto tps = triple_points(V);
        int blue = 0, red = 0;
        for (const auto& tp : tps) (tp.color == edge_color::blue ? blue : red) += 1;
        CHECK(blue == 12);
        CHECK(red == 2);
    }
}

TEST_CASE("branch components partition the strands and traverse each face once") {
    for (const auto& entry : fixtures::all_entries()) {
        veering_triangulation V = validate_veering(entry);
        auto comps = branch_components(V);
        int strands = 0;
        std::set<std::pair<int, int>> seen;
        std::map<int, int> face_traversals;
        for (const auto& bc : comps) {
            strands += static_cast<int>(bc.strands.size());
            CHECK(bc.strands.size() == bc.face_classes.size());
            for (const auto& s : bc.strands) CHECK(seen.insert({s.tet, s.edge}).second);
            for (int f : bc.face_classes) ++face_traversals[f];
        }
        CHECK(strands == 2 * V.tri.tet_count());
        // each face class is crossed exactly once by the chained locus
        CHECK(static_cast<int>(face_traversals.size()) == 2 * V.tri.tet_count());
        for (const auto& [f, c] : face_traversals) CHECK(c == 1);
    }
}

TEST_CASE("K10n14 branch components have total length 12") {
    veering_triangulation V = validate_veering(fixtures::k10n14);
    auto comps = branch_components(V);
    int total = 0;
    for (const auto& bc : comps) total += static_cast<int>(bc.strands.size());
    CHECK(total == 12);
}

TEST_CASE("ladderpole counts: accepted entries have exactly one per end") {
    for (const char* e : {fixtures::accepted_266, fixtures::accepted_2244}) {
        veering_triangulation V = validate_veering(e);
        auto rep = ladderpole_counts(V);
        for (int c : rep.ladderpole_count) CHECK(c == 1);
        int total = 0;
        for (int c : rep.ladderpole_count) total += c;
        CHECK(total == rep.total_components);
    }
    for (const auto& entry : fixtures::all_entries()) {
        veering_triangulation V = validate_veering(entry);
        auto rep = ladderpole_counts(V);
        for (int c : rep.ladderpole_count) CHECK(c >= 1);
    }
}

namespace {

// double cover glued by a mod-2 cocycle on the faces (test-side machinery for
// the fiberwise cover fixture)
ideal_triangulation double_cover(const ideal_triangulation& T, const std::vector<int>& eps) {
    auto faces = build_face_classes(T);
    std::vector<std::array<int, 4>> fid(T.tet_count(), {-1, -1, -1, -1});
    for (const auto& fc : faces) {
        fid[fc.tet[0]][fc.face[0]] = fc.id;
        fid[fc.tet[1]][fc.face[1]] = fc.id;
    }
    const int n = T.tet_count();
    ideal_triangulation D;
    D.glu.resize(2 * n);
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            const gluing& g = T.glu[t][f];
            int e = eps[fid[t][f]];
            for (int sheet = 0; sheet < 2; ++sheet)
                D.glu[t + sheet * n][f] = {g.tet + ((sheet + e) % 2) * n, g.p};
        }
    return D;
}

// all cocycle classes (zero sum around each edge fan) modulo per-tet flips
std::vector<std::vector<int>> cocycle_classes(const ideal_triangulation& T, const coorientation& co) {
    imat d2 = dual_d2(T, co);
    const int nf = d2.rows;
    const int ne = d2.cols;
    // rows of the constraint system: for each edge, sum of eps over its fan = 0
    std::vector<std::vector<int>> rows(ne, std::vector<int>(nf, 0));
    for (int f = 0; f < nf; ++f)
        for (int e = 0; e < ne; ++e) rows[e][f] = static_cast<int>(((d2.at(f, e) % 2) + 2) % 2);
    auto rref = [&](std::vector<std::vector<int>> m, std::vector<int>& piv) {
        int r = 0;
        for (int c = 0; c < nf && r < static_cast<int>(m.size()); ++c) {
            int pr = -1;
            for (int i = r; i < static_cast<int>(m.size()); ++i)
                if (m[i][c]) { pr = i; break; }
            if (pr < 0) continue;
            std::swap(m[r], m[pr]);
            for (int i = 0; i < static_cast<int>(m.size()); ++i)
                if (i != r && m[i][c])
                    for (int j = 0; j < nf; ++j) m[i][j] ^= m[r][j];
            piv.push_back(c);
            ++r;
        }
        m.resize(r);
        return m;
    };
    std::vector<int> piv;
    auto R = rref(rows, piv);
    std::vector<std::vector<int>> kernel;
    std::set<int> pivset(piv.begin(), piv.end());
    for (int c = 0; c < nf; ++c) {
        if (pivset.count(c)) continue;
        std::vector<int> v(nf, 0);
        v[c] = 1;
        for (size_t r = 0; r < R.size(); ++r)
            if (R[r][c]) v[piv[r]] = 1;
        kernel.push_back(v);
    }
    // coboundaries: per tet, flip its four faces
    auto faces = build_face_classes(T);
    std::vector<std::vector<int>> cob(T.tet_count(), std::vector<int>(nf, 0));
    for (const auto& fc : faces) {
        cob[fc.tet[0]][fc.id] ^= 1;
        cob[fc.tet[1]][fc.id] ^= 1;
    }
    std::vector<int> cpiv;
    auto CR = rref(cob, cpiv);
    auto reduce_vec = [&](std::vector<int> v) {
        for (size_t r = 0; r < CR.size(); ++r)
            if (v[cpiv[r]])
                for (int j = 0; j < nf; ++j) v[j] ^= CR[r][j];
        return v;
    };
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> reps;
    const size_t kb = kernel.size();
    REQUIRE(kb <= 20);
    for (uint32_t mask = 0; mask < (1u << kb); ++mask) {
        std::vector<int> v(nf, 0);
        for (size_t i = 0; i < kb; ++i)
            if (mask >> i & 1)
                for (int j = 0; j < nf; ++j) v[j] ^= kernel[i][j];
        auto key = reduce_vec(v);
        if (seen.insert(key).second) reps.push_back(v);
    }
    return reps;
}

} // namespace

TEST_CASE("a fiberwise double cover has two ladderpole curves per end") {
    auto [sig, digits] = split_sig_angles(fixtures::accepted_266);
    ideal_triangulation T = decode_isosig(sig);
    veering_triangulation V = validate_veering(T, parse_taut_angles(digits, T));
    bool found = false;
    for (const auto& eps : cocycle_classes(T, V.co)) {
        if (std::all_of(eps.begin(), eps.end(), [](int x) { return x == 0; })) continue;
        ideal_triangulation D = double_cover(T, eps);
        D.validate();
        if (!D.is_connected()) continue;
        veering_triangulation VD = validate_veering(D, parse_taut_angles(digits + digits, D));
        auto rep = ladderpole_counts(VD);
        if (rep.ladderpole_count.size() != V.cells.vertices.size()) continue; // ends must stay connected
        bool all2 = std::all_of(rep.ladderpole_count.begin(), rep.ladderpole_count.end(),
                                [](int c) { return c == 2; });
        if (all2) found = true;
    }
    CHECK(found);
}

TEST_CASE("vbs axioms pass on fixtures and catch a miscolored edge") {
    for (const auto& entry : fixtures::all_entries()) {
        veering_triangulation V = validate_veering(entry);
        CHECK(verify_vbs_axioms(V).ok);
        // flip one edge color: the alternation condition must break
        edge_coloring bad = V.colors;
        bad.color[0] = bad.color[0] == edge_color::red ? edge_color::blue : edge_color::red;
        auto rep = verify_vbs_axioms(V.tri, V.cells, V.angles, V.co, V.tet_sign, bad);
        CHECK_FALSE(rep.ok);
        CHECK_FALSE(rep.violations.empty());
    }
}

TEST_CASE("vbs axioms: empty triangulation passes vacuously") {
    ideal_triangulation T;
    cell_classes C = build_cell_classes(T);
    taut_structure A;
    coorientation co;
    edge_coloring colors;
    CHECK(verify_vbs_axioms(T, C, A, co, {}, colors).ok);
}
