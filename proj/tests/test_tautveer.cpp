#include "veer/isosig.hpp"
#include "veer/taut.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace veer;

TEST_CASE("angle digit parsing") {
    auto [sig, digits] = split_sig_angles(fixtures::k10n14);
    ideal_triangulation T = decode_isosig(sig);
    taut_structure A = parse_taut_angles("200211", T);
    CHECK(A.pi_pair == std::vector<int>{2, 0, 0, 2, 1, 1});
    CHECK_THROWS_AS(parse_taut_angles("20021", T), validation_error);
    CHECK_THROWS_AS(parse_taut_angles("200213", T), validation_error);

    auto [sig2, digits2] = split_sig_angles(fixtures::k12n121);
    ideal_triangulation T2 = decode_isosig(sig2);
    CHECK(parse_taut_angles(digits2, T2).pi_pair == std::vector<int>{2, 1, 1, 2, 2, 1, 2});
}

TEST_CASE("census entries are taut; all-zero digits are not") {
    for (const auto& entry : fixtures::all_entries()) {
        auto [sig, digits] = split_sig_angles(entry);
        ideal_triangulation T = decode_isosig(sig);
        cell_classes C = build_cell_classes(T);
        CHECK(validate_taut(T, C, parse_taut_angles(digits, T)).ok);
        auto zero = validate_taut(T, C, parse_taut_angles(std::string(digits.size(), '0'), T));
        CHECK_FALSE(zero.ok);
        CHECK_FALSE(zero.bad_edges.empty());
    }
}

TEST_CASE("empty triangulation is vacuously taut") {
    ideal_triangulation T;
    cell_classes C = build_cell_classes(T);
    taut_structure A;
    CHECK(validate_taut(T, C, A).ok);
}

TEST_CASE("transverse taut coorientations on all fixtures") {
    for (const auto& entry : fixtures::all_entries()) {
        auto [sig, digits] = split_sig_angles(entry);
        ideal_triangulation T = decode_isosig(sig);
        cell_classes C = build_cell_classes(T);
        taut_structure A = parse_taut_angles(digits, T);
        auto co = derive_transverse_taut(T, C, A);
        REQUIRE(co);
        // deterministic representative
        CHECK(co->out[0][0]);
        // two out, two in per tet
        for (int t = 0; t < T.tet_count(); ++t) {
            int outc = 0;
            for (int f = 0; f < 4; ++f) outc += co->out[t][f];
            CHECK(outc == 2);
        }
        // glued faces disagree (one out, one in)
        for (int t = 0; t < T.tet_count(); ++t)
            for (int f = 0; f < 4; ++f) CHECK(co->out[t][f] != co->out[T.glu[t][f].tet][T.glu[t][f].p[f]]);
        // the global reversal also satisfies every constraint
        coorientation rev = *co;
        for (auto& tf : rev.out)
            for (int f = 0; f < 4; ++f) tf[f] = !tf[f];
        for (int t = 0; t < T.tet_count(); ++t)
            for (int f = 0; f < 4; ++f) CHECK(rev.out[t][f] != rev.out[T.glu[t][f].tet][T.glu[t][f].p[f]]);
    }
}

TEST_CASE("a taut structure with an odd propagation cycle fails transverse taut") {
    // frozen from an offline exhaustive search over 2-tet gluings and digits:
    // tet 0 faces 0..3 glue to tet 1 via 0123, 2103, 1023, 1203
    ideal_triangulation T;
    T.glu.resize(2);
    const std::array<std::array<uint8_t, 4>, 4> ps = {{{0, 1, 2, 3}, {2, 1, 0, 3}, {1, 0, 2, 3}, {1, 2, 0, 3}}};
    for (int f = 0; f < 4; ++f) {
        perm4 p;
        p.im = ps[f];
        T.glu[0][f] = {1, p};
        T.glu[1][p[f]] = {0, p.inverse()};
    }
    T.validate();
    cell_classes C = build_cell_classes(T);
    taut_structure A{{0, 1}};
    REQUIRE(validate_taut(T, C, A).ok);
    std::string diag;
    CHECK_FALSE(derive_transverse_taut(T, C, A, &diag));
    CHECK_FALSE(diag.empty());
}

TEST_CASE("veering colors on all fixtures") {
    for (const auto& entry : fixtures::all_entries()) {
        veering_triangulation V = validate_veering(entry);
        CHECK(V.colors.blue_count() + V.colors.red_count() == V.tri.tet_count());
        // equatorial colors alternate in every tetrahedron
        for (const auto& r : V.roles) {
            for (int k = 0; k < 4; ++k)
                CHECK(V.colors.color[r.equator_edges[k]] != V.colors.color[r.equator_edges[(k + 1) % 4]]);
        }
    }
}

TEST_CASE("the accepted (2,6,6) entry has 12 blue and 2 red edges") {
    veering_triangulation V = validate_veering(fixtures::accepted_266);
    CHECK(V.colors.blue_count() == 12);
    CHECK(V.colors.red_count() == 2);
    veering_triangulation W = validate_veering(fixtures::rejected_266);
    CHECK(W.colors.blue_count() == 12);
    CHECK(W.colors.red_count() == 2);
}

TEST_CASE("reversing the ambient orientation swaps all colors") {
    for (const auto& entry : fixtures::all_entries()) {
        auto [sig, digits] = split_sig_angles(entry);
        ideal_triangulation T = decode_isosig(sig);
        cell_classes C = build_cell_classes(T);
        taut_structure A = parse_taut_angles(digits, T);
        auto co = derive_transverse_taut(T, C, A);
        REQUIRE(co);
        auto sign = T.orientation();
        REQUIRE(sign);
        auto colors = derive_veering_colors(T, C, A, *co, *sign);
        REQUIRE(colors);
        std::vector<int> flipped(sign->size());
        for (size_t i = 0; i < sign->size(); ++i) flipped[i] = -(*sign)[i];
        auto colors2 = derive_veering_colors(T, C, A, *co, flipped);
        REQUIRE(colors2);
        for (size_t e = 0; e < colors->color.size(); ++e) CHECK(colors->color[e] != colors2->color[e]);
    }
}

TEST_CASE("reversing the coorientation preserves the color partition and swaps roles") {
    for (const auto& entry : fixtures::all_entries()) {
        auto [sig, digits] = split_sig_angles(entry);
        ideal_triangulation T = decode_isosig(sig);
        cell_classes C = build_cell_classes(T);
        taut_structure A = parse_taut_angles(digits, T);
        auto co = derive_transverse_taut(T, C, A);
        REQUIRE(co);
        auto sign = T.orientation();
        coorientation rev = *co;
        for (auto& tf : rev.out)
            for (int f = 0; f < 4; ++f) tf[f] = !tf[f];
        auto colors = derive_veering_colors(T, C, A, *co, *sign);
        auto colors_rev = derive_veering_colors(T, C, A, rev, *sign);
        REQUIRE(colors);
        REQUIRE(colors_rev);
        for (size_t e = 0; e < colors->color.size(); ++e) CHECK(colors->color[e] == colors_rev->color[e]);
        auto roles = tet_roles(T, C, A, *co, *sign);
        auto roles_rev = tet_roles(T, C, A, rev, *sign);
        for (int t = 0; t < T.tet_count(); ++t) {
            CHECK(roles[t].top_edge == roles_rev[t].bottom_edge);
            CHECK(roles[t].bottom_edge == roles_rev[t].top_edge);
        }
    }
}

TEST_CASE("each edge class is top of exactly one tet and bottom of exactly one") {
    for (const auto& entry : fixtures::all_entries()) {
        veering_triangulation V = validate_veering(entry);
        std::vector<int> topm(V.cells.edges.size(), 0), botm(V.cells.edges.size(), 0);
        for (const auto& r : V.roles) {
            ++topm[r.top_edge];
            ++botm[r.bottom_edge];
        }
        for (size_t e = 0; e < V.cells.edges.size(); ++e) {
            CHECK(topm[e] == 1);
            CHECK(botm[e] == 1);
        }
    }
}
