// veertool: command-line surface for the veering/branched-surface toolkit.
// JSON output is the machine contract; text output is human convenience.

#include "veer/branched.hpp"
#include "veer/census.hpp"
#include "veer/fatgraph.hpp"
#include "veer/flowgraph.hpp"
#include "veer/homology.hpp"
#include "veer/isosig.hpp"
#include "veer/markov.hpp"
#include "veer/montesinos.hpp"
#include "veer/taut.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

std::string default_format() {
    const char* env = std::getenv("VEERTOOL_FORMAT");
    return env ? env : "json";
}

std::string color_name(veer::edge_color c) { return c == veer::edge_color::blue ? "blue" : "red"; }

json flow_graph_json(const veer::flow_graph& F) {
    json j;
    j["vertices"] = F.g.n;
    j["orderings"] = "absent";
    json edges = json::array();
    for (size_t i = 0; i < F.g.edges.size(); ++i) {
        if (!F.g.edges[i].alive) continue;
        const auto& e = F.g.edges[i];
        const auto& l = F.edge_labels[i];
        const char* role = l.role == veer::flow_edge_role::top ? "top"
                           : l.role == veer::flow_edge_role::side_a ? "side_a"
                                                                    : "side_b";
        edges.push_back({{"src", e.src}, {"dst", e.dst}, {"tet", l.tet}, {"role", role}});
    }
    j["edges"] = edges;
    return j;
}

std::string digraph_dot(const veer::digraph& g, const std::vector<char>* alive = nullptr,
                        const std::vector<std::string>* names = nullptr) {
    std::ostringstream os;
    os << "digraph {\n";
    for (int v = 0; v < g.n; ++v) {
        if (alive && !(*alive)[v]) continue;
        os << "  v" << v;
        if (names) os << " [label=\"" << (*names)[v] << "\"]";
        os << ";\n";
    }
    for (const auto& e : g.edges) {
        if (!e.alive) continue;
        if (alive && (!(*alive)[e.src] || !(*alive)[e.dst])) continue;
        os << "  v" << e.src << " -> v" << e.dst << ";\n";
    }
    os << "}\n";
    return os.str();
}

json markov_json(const veer::markov_graph& MG, const std::vector<char>* alive = nullptr) {
    json j;
    j["framing"] = veer::markov_graph::framing;
    json verts = json::array();
    for (int v = 0; v < MG.g.n; ++v) {
        if (alive && !(*alive)[v]) continue;
        json names = json::array();
        for (const auto& a : MG.aliases[v]) names.push_back(a.label());
        verts.push_back({{"id", v},
                         {"aliases", names},
                         {"in_order", MG.in_order[v]},
                         {"out_order", MG.out_order[v]}});
    }
    j["vertices"] = verts;
    json edges = json::array();
    for (size_t i = 0; i < MG.g.edges.size(); ++i) {
        const auto& e = MG.g.edges[i];
        if (!e.alive) continue;
        if (alive && (!(*alive)[e.src] || !(*alive)[e.dst])) continue;
        const auto& info = MG.edge_infos[i];
        edges.push_back({{"id", i},
                         {"src", e.src},
                         {"dst", e.dst},
                         {"region", info.region},
                         {"frame", info.frame},
                         {"exit", std::string(1, info.exit_side)}});
    }
    j["edges"] = edges;
    return j;
}

veer::montesinos_params parse_p(const std::string& list) {
    veer::montesinos_params P;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        P.p.push_back(std::stoll(tok));
    }
    P.validate();
    return P;
}

int run(int argc, char** argv) {
    CLI::App app{"veering triangulation / branched surface toolkit"};
    app.require_subcommand(1);
    std::string format = default_format();

    // validate
    std::string sig_angles;
    auto* c_validate = app.add_subcommand("validate", "validate a taut angle structure and derive the veering data");
    c_validate->add_option("sig_angles", sig_angles, "<isosig>_<angle-digits>")->required();

    // flowgraph
    std::string fg_input;
    bool fg_reduced = false;
    auto* c_flow = app.add_subcommand("flowgraph", "flow graph of a veering triangulation");
    c_flow->add_option("sig_angles", fg_input, "<isosig>_<angle-digits>")->required();
    c_flow->add_flag("--reduced", fg_reduced, "remove infinitesimal cycles");
    c_flow->add_option("--format", format, "json|dot|text");

    // cusps
    std::string cusp_input;
    auto* c_cusps = app.add_subcommand("cusps", "branched-surface report: triple points, branch components, ladderpoles");
    c_cusps->add_option("sig_angles", cusp_input, "<isosig>_<angle-digits>")->required();

    // montesinos
    std::string plist;
    auto* c_mont = app.add_subcommand("montesinos", "predicted stats for the Montesinos family M(1/p1+1, 1/pi-1)");
    c_mont->add_option("--p", plist, "comma-separated parameters, e.g. 2,3,7")->required();

    // census-match
    std::string census_path, cm_p;
    int h1_rank = -1;
    bool allow_doubled = false, allow_triangles = false;
    auto* c_match = app.add_subcommand("census-match", "Montesinos identification pipeline over a census file");
    c_match->add_option("--census", census_path, "census file of <isosig>_<digits> lines, or - for stdin")->required();
    c_match->add_option("--p", cm_p, "Montesinos parameters")->required();
    c_match->add_option("--h1-rank", h1_rank, "expected free rank of H1")->required();
    c_match->add_flag("--allow-doubled", allow_doubled, "target dual graph has a doubled pair");
    c_match->add_flag("--allow-triangles", allow_triangles, "target dual graph has triangles");

    // geodesic
    std::string fat_path, half_edges;
    bool geo_reduced = false;
    auto* c_geo = app.add_subcommand("geodesic", "Markov-partition graph of the geodesic flow from a fatgraph");
    c_geo->add_option("--fatgraph", fat_path, "fatgraph JSON file")->required();
    c_geo->add_flag("--reduced", geo_reduced, "remove infinitesimal cycles");
    c_geo->add_option("--half", half_edges, "comma-separated doubling-curve edge ids; restrict to one half");
    c_geo->add_option("--format", format, "json|dot|text");

    // cycles
    std::string cy_sig, cy_fat;
    int max_len = 0;
    auto* c_cycles = app.add_subcommand("cycles", "elementary cycles of the (reduced) flow graph");
    c_cycles->add_option("sig_angles", cy_sig, "<isosig>_<angle-digits>");
    c_cycles->add_option("--fatgraph", cy_fat, "fatgraph JSON file");
    c_cycles->add_option("--max-len", max_len, "maximum cycle length")->required();

    // hexagons
    int genus = 0;
    auto* c_hex = app.add_subcommand("hexagons", "right-angled hexagon decomposition fatgraph of a genus-g surface");
    c_hex->add_option("--genus", genus, "genus >= 2")->required();

    CLI11_PARSE(app, argc, argv);

    if (*c_validate) {
        json out{{"taut", false}, {"transverse_taut", false}, {"veering", false}};
        auto [sig, digits] = veer::split_sig_angles(sig_angles);
        veer::ideal_triangulation T = veer::decode_isosig(sig);
        auto A = veer::parse_taut_angles(digits, T);
        auto C = veer::build_cell_classes(T);
        out["tets"] = T.tet_count();
        out["cusps"] = C.vertices.size();
        auto tr = veer::validate_taut(T, C, A);
        out["taut"] = tr.ok;
        if (!tr.ok) {
            out["bad_edges"] = tr.bad_edges;
            std::cout << out.dump() << "\n";
            std::cerr << "not taut\n";
            return 1;
        }
        auto sign = T.orientation();
        if (!sign) {
            std::cout << out.dump() << "\n";
            std::cerr << "not orientable\n";
            return 1;
        }
        std::string diag;
        auto co = veer::derive_transverse_taut(T, C, A, &diag);
        out["transverse_taut"] = bool(co);
        if (!co) {
            std::cout << out.dump() << "\n";
            std::cerr << diag << "\n";
            return 1;
        }
        auto colors = veer::derive_veering_colors(T, C, A, *co, *sign, &diag);
        out["veering"] = bool(colors);
        if (!colors) {
            std::cout << out.dump() << "\n";
            std::cerr << diag << "\n";
            return 1;
        }
        out["blue"] = colors->blue_count();
        out["red"] = colors->red_count();
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (*c_flow) {
        auto V = veer::validate_veering(fg_input);
        auto F = veer::build_flow_graph(V);
        if (!fg_reduced) {
            if (format == "dot")
                std::cout << digraph_dot(F.g);
            else
                std::cout << flow_graph_json(F).dump() << "\n";
        } else {
            auto R = veer::reduce(F.g);
            if (format == "dot") {
                std::cout << digraph_dot(R.graph, &R.vertex_alive);
            } else {
                veer::flow_graph FR{R.graph, F.edge_labels};
                json j = flow_graph_json(FR);
                j["removed_cycles"] = R.removed_cycles;
                int alive = 0;
                for (char a : R.vertex_alive) alive += a;
                j["vertices"] = alive;
                std::cout << j.dump() << "\n";
            }
        }
        return 0;
    }

    if (*c_cusps) {
        auto V = veer::validate_veering(cusp_input);
        json j;
        json tps = json::array();
        for (const auto& tp : veer::triple_points(V)) tps.push_back({{"tet", tp.tet}, {"color", color_name(tp.color)}});
        j["triple_points"] = tps;
        json comps = json::array();
        for (const auto& bc : veer::branch_components(V))
            comps.push_back({{"faces", bc.face_classes}, {"end", bc.end}});
        j["components"] = comps;
        auto rep = veer::ladderpole_counts(V);
        json lp;
        for (size_t i = 0; i < rep.ladderpole_count.size(); ++i) lp[std::to_string(i)] = rep.ladderpole_count[i];
        j["ladderpoles"] = lp;
        std::cout << j.dump() << "\n";
        return 0;
    }

    if (*c_mont) {
        auto P = parse_p(plist);
        auto st = veer::predict_stats(P);
        json j;
        j["e"] = veer::euler_e(P).str();
        json lbl = json::array();
        for (const auto& q : veer::montesinos_label(P)) lbl.push_back(q.str());
        j["label"] = lbl;
        j["tets"] = st.tets;
        j["blue"] = st.blue;
        j["red"] = st.red;
        std::cout << j.dump() << "\n";
        return 0;
    }

    if (*c_match) {
        veer::census_load_result census;
        if (census_path == "-")
            census = veer::load_census(std::cin);
        else
            census = veer::load_census_file(census_path);
        veer::match_options opt;
        opt.p = parse_p(cm_p);
        opt.h1_rank = h1_rank;
        opt.allow_doubled = allow_doubled;
        opt.allow_triangles = allow_triangles;
        auto rep = veer::match(opt, census.entries);
        json j;
        j["p"] = opt.p.p;
        j["predicted"] = {{"tets", rep.predicted.tets}, {"blue", rep.predicted.blue}, {"red", rep.predicted.red}};
        json cands = json::array();
        for (const auto& c : rep.candidates) {
            json trail = json::array();
            for (const auto& [name, ok] : c.trail) trail.push_back({{"filter", name}, {"passed", ok}});
            cands.push_back({{"entry", c.raw}, {"trail", trail}, {"eliminated_by", c.eliminated_by}});
        }
        j["candidates"] = cands;
        j["selected"] = rep.selected;
        json badl = json::array();
        for (const auto& b : census.bad) badl.push_back({{"line", b.line_no}, {"error", *b.error}});
        j["malformed_lines"] = badl;
        std::cout << j.dump() << "\n";
        return 0;
    }

    if (*c_geo) {
        std::ifstream in(fat_path);
        if (!in) {
            std::cerr << "cannot open " << fat_path << "\n";
            return 2;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        auto F = veer::load_fatgraph_json(buf.str());
        std::cerr << "note: parallel-component detection is out of scope; "
                     "hyperbolicity of the full-lift complement is not certified\n";
        auto MG = veer::build_markov_graph(F);
        if (!half_edges.empty()) {
            std::vector<int> edges;
            std::stringstream ss(half_edges);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) edges.push_back(std::stoi(tok));
            MG = veer::restrict_to_half(F, MG, edges);
        }
        if (geo_reduced) {
            auto R = veer::reduce(MG.g);
            if (format == "dot") {
                std::cout << digraph_dot(R.graph, &R.vertex_alive);
            } else {
                json j = markov_json(MG, &R.vertex_alive);
                // report against the pre-reduction graph
                j["removed_cycles"] = R.removed_cycles;
                std::cout << j.dump() << "\n";
            }
        } else {
            if (format == "dot")
                std::cout << digraph_dot(MG.g);
            else
                std::cout << markov_json(MG).dump() << "\n";
        }
        return 0;
    }

    if (*c_cycles) {
        veer::digraph g;
        if (!cy_sig.empty()) {
            auto V = veer::validate_veering(cy_sig);
            g = veer::build_flow_graph(V).g;
        } else if (!cy_fat.empty()) {
            std::ifstream in(cy_fat);
            if (!in) {
                std::cerr << "cannot open " << cy_fat << "\n";
                return 2;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            g = veer::build_markov_graph(veer::load_fatgraph_json(buf.str())).g;
        } else {
            std::cerr << "cycles: need <sig_angles> or --fatgraph\n";
            return 1;
        }
        auto cycles = veer::enumerate_cycles(g, max_len);
        json j;
        j["count"] = cycles.size();
        json lst = json::array();
        for (const auto& c : cycles) lst.push_back({{"vertices", c.vertices}, {"edges", c.edge_ids}});
        j["cycles"] = lst;
        std::cout << j.dump() << "\n";
        return 0;
    }

    if (*c_hex) {
        auto F = veer::hexagon_decomposition(genus);
        std::cout << veer::fatgraph_to_json(F) << "\n";
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const veer::decode_error& e) {
        std::cerr << "decode error: " << e.what() << "\n";
        return 1;
    } catch (const veer::validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const veer::fatgraph_error& e) {
        std::cerr << "fatgraph error: " << e.what() << "\n";
        return 1;
    } catch (const veer::montesinos_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
