#include "veer/census.hpp"

#include "veer/branched.hpp"
#include "veer/isosig.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace veer {

census_load_result load_census(std::istream& in) {
    census_load_result out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        // tolerate trailing CR and surrounding blanks
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line = line.substr(start);
        if (line[0] == '#') continue;
        census_entry e;
        e.line_no = no;
        e.raw = line;
        auto us = line.find('_');
        if (us == std::string::npos) {
            e.error = "missing '_' separator";
            out.bad.push_back(std::move(e));
            continue;
        }
        e.isosig = line.substr(0, us);
        e.angles = line.substr(us + 1);
        try {
            ideal_triangulation T = decode_isosig(e.isosig);
            if (static_cast<int>(e.angles.size()) != T.tet_count()) {
                e.error = "angle digit count " + std::to_string(e.angles.size()) + " != tet count " +
                          std::to_string(T.tet_count());
                out.bad.push_back(std::move(e));
                continue;
            }
        } catch (const std::exception& ex) {
            e.error = ex.what();
            out.bad.push_back(std::move(e));
            continue;
        }
        out.entries.push_back(std::move(e));
    }
    return out;
}

census_load_result load_census_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open census file: " + path);
    return load_census(in);
}

const entry_stats_record& entry_stats(census_entry& e) {
    if (e.stats) return *e.stats;
    veering_triangulation V = validate_veering(e.raw);
    entry_stats_record r;
    r.tets = V.tri.tet_count();
    r.blue = V.colors.blue_count();
    r.red = V.colors.red_count();
    r.cusps = static_cast<int>(V.cells.vertices.size());
    r.ladderpoles = ladderpole_counts(V).ladderpole_count;
    r.h1 = homology_h1(V.tri, V.co);
    dual_graph G = build_dual_graph(V.tri);
    r.doubled_edge = has_doubled_edge(G);
    r.triangles = has_triangle(G);
    e.stats = std::move(r);
    return *e.stats;
}

match_report match(const match_options& opt, std::vector<census_entry>& census) {
    match_report rep;
    rep.p = opt.p;
    rep.predicted = predict_stats(opt.p);
    for (auto& e : census) {
        match_report::candidate cand;
        cand.raw = e.raw;
        entry_stats_record st;
        try {
            st = entry_stats(e);
        } catch (const std::exception& ex) {
            cand.trail.emplace_back(std::string("veering validation: ") + ex.what(), false);
            cand.eliminated_by = "veering validation";
            rep.candidates.push_back(std::move(cand));
            continue;
        }
        auto fail = [&](const std::string& name) {
            cand.trail.emplace_back(name, false);
            if (cand.eliminated_by.empty()) cand.eliminated_by = name;
        };
        auto pass = [&](const std::string& name) { cand.trail.emplace_back(name, true); };

        // (1) tets/blue/red; the blue-red labeling depends on an orientation
        // convention, so the mirror-swapped pair is accepted too
        bool stats_ok = st.tets == rep.predicted.tets &&
                        ((st.blue == rep.predicted.blue && st.red == rep.predicted.red) ||
                         (st.blue == rep.predicted.red && st.red == rep.predicted.blue));
        stats_ok ? pass("stats (tets, blue, red)") : fail("stats (tets, blue, red)");
        // (2) exactly one ladderpole curve per end
        bool lp_ok = std::all_of(st.ladderpoles.begin(), st.ladderpoles.end(), [](int c) { return c == 1; });
        lp_ok ? pass("one ladderpole per end") : fail("one ladderpole per end");
        // (3) H1 free abelian of the expected rank
        bool h1_ok = st.h1.torsion.empty() && st.h1.free_rank == opt.h1_rank;
        h1_ok ? pass("homology Z^b") : fail("homology Z^b");
        rep.candidates.push_back(std::move(cand));
    }
    std::vector<size_t> survivors;
    for (size_t i = 0; i < rep.candidates.size(); ++i)
        if (rep.candidates[i].eliminated_by.empty()) survivors.push_back(i);

    // (4) structural predicates, applied only while several candidates remain
    if (survivors.size() > 1) {
        for (size_t i : survivors) {
            auto& cand = rep.candidates[i];
            const auto& st = *std::find_if(census.begin(), census.end(), [&](const census_entry& e) {
                                  return e.raw == cand.raw;
                              })->stats;
            if (!opt.allow_doubled) {
                bool ok = !st.doubled_edge;
                cand.trail.emplace_back("dual graph: no doubled pair (\"two edges between them\")", ok);
                if (!ok && cand.eliminated_by.empty()) cand.eliminated_by = "dual graph has a doubled pair";
            }
            if (!opt.allow_triangles) {
                bool ok = !st.triangles;
                cand.trail.emplace_back("dual graph: no triangles", ok);
                if (!ok && cand.eliminated_by.empty()) cand.eliminated_by = "dual graph has triangles";
            }
        }
    }
    for (const auto& c : rep.candidates)
        if (c.eliminated_by.empty()) rep.selected.push_back(c.raw);
    return rep;
}

} // namespace veer
