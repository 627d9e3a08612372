#include "veer/fatgraph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>

namespace veer {

void fatgraph::finalize() {
    const int nv = vertex_count();
    const int nh = 4 * nv;
    vertex_of.assign(nh, -1);
    slot_of.assign(nh, -1);
    for (int v = 0; v < nv; ++v) {
        for (int s = 0; s < 4; ++s) {
            int h = slots[v][s];
            if (h < 0 || h >= nh) throw fatgraph_error("half-edge id out of range: " + std::to_string(h));
            if (vertex_of[h] >= 0) throw fatgraph_error("half-edge " + std::to_string(h) + " appears twice");
            vertex_of[h] = v;
            slot_of[h] = s;
        }
    }
    if (static_cast<int>(opp.size()) != nh) throw fatgraph_error("pairing does not cover all half-edges");
    for (int h = 0; h < nh; ++h) {
        if (opp[h] < 0 || opp[h] >= nh || opp[opp[h]] != h || opp[h] == h)
            throw fatgraph_error("pairing is not a perfect matching at half-edge " + std::to_string(h));
    }
    // connectivity
    if (nv > 0) {
        std::vector<char> seen(nv, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int h : slots[v]) {
                int w = vertex_of[opp[h]];
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
            }
        }
        if (cnt != nv) throw fatgraph_error("fatgraph is disconnected");
    }
    // faces: next(h) = rotate(opp(h), -1); interior on the left
    regions.clear();
    std::vector<char> used(nh, 0);
    for (int h0 = 0; h0 < nh; ++h0) {
        if (used[h0]) continue;
        region r;
        r.id = static_cast<int>(regions.size());
        int h = h0;
        do {
            used[h] = 1;
            r.sides.push_back(h);
            h = rotate(opp[h], -1);
        } while (h != h0);
        regions.push_back(std::move(r));
    }
    for (const auto& r : regions)
        if (r.size() < 4)
            throw fatgraph_error("region " + std::to_string(r.id) + " has " + std::to_string(r.size()) +
                                 " sides (< 4)");
}

std::vector<std::vector<int>> fatgraph::curve_components() const {
    const int nh = half_edge_count();
    std::vector<char> seen(nh, 0);
    std::vector<std::vector<int>> comps;
    for (int h0 = 0; h0 < nh; ++h0) {
        if (seen[h0]) continue;
        // directed traversal: continue through the opposite slot
        std::vector<int> fwd;
        int h = h0;
        do {
            seen[h] = 1;
            fwd.push_back(h);
            h = rotate(opp[h], 2);
        } while (h != h0);
        // mark the reverse direction as the same component
        for (int x : fwd) seen[opp[x]] = 1;
        comps.push_back(std::move(fwd));
    }
    return comps;
}

fatgraph load_fatgraph_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw fatgraph_error(std::string("bad fatgraph JSON: ") + e.what());
    }
    fatgraph F;
    if (!j.contains("vertices") || !j["vertices"].is_array()) throw fatgraph_error("missing 'vertices' array");
    for (const auto& v : j["vertices"]) {
        if (!v.contains("slots") || v["slots"].size() != 4)
            throw fatgraph_error("every vertex needs exactly 4 slots");
        std::array<int, 4> s;
        for (int i = 0; i < 4; ++i) s[i] = v["slots"][i].get<int>();
        F.slots.push_back(s);
    }
    if (!j.contains("pairing") || !j["pairing"].is_array()) throw fatgraph_error("missing 'pairing' array");
    F.opp.assign(4 * F.vertex_count(), -1);
    for (const auto& p : j["pairing"]) {
        if (p.size() != 2) throw fatgraph_error("pairing entries must be [h1,h2]");
        int a = p[0].get<int>(), b = p[1].get<int>();
        if (a < 0 || b < 0 || a >= static_cast<int>(F.opp.size()) || b >= static_cast<int>(F.opp.size()))
            throw fatgraph_error("pairing id out of range");
        if (F.opp[a] >= 0 || F.opp[b] >= 0) throw fatgraph_error("half-edge paired twice");
        F.opp[a] = b;
        F.opp[b] = a;
    }
    F.finalize();
    return F;
}

std::string fatgraph_to_json(const fatgraph& F) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& s : F.slots) j["vertices"].push_back({{"slots", s}});
    j["pairing"] = nlohmann::json::array();
    for (int h = 0; h < F.half_edge_count(); ++h)
        if (h < F.opp[h]) j["pairing"].push_back({h, F.opp[h]});
    return j.dump();
}

// ---- hexagon decomposition: double of a cyclic chain of g-1 pants ----
//
// Pants i (i mod m, m = g-1) has boundary curves gamma_{i-1}, f_i, gamma_i and
// seams a_i (gamma_{i-1} -> f_i), b_i (f_i -> gamma_i), c_i (gamma_{i-1} <->
// gamma_i). Doubling copies +/- across the free curves f_i. Vertices per i:
// x_i^{+,-} (gamma_i x seam curve b_i/a_{i+1}), y_i^{+,-} (gamma_i x c-curve),
// u_i, w_i (f_i x seams a/b from both copies).

namespace {

struct hex_builder {
    int m;
    std::map<std::pair<std::string, int>, std::array<int, 2>> halves; // edge key -> 2 half ids
    int next_id = 0;
    std::vector<std::array<int, 4>> slots;

    int he(const std::string& name, int i, int end) {
        auto key = std::make_pair(name, ((i % m) + m) % m);
        auto it = halves.find(key);
        if (it == halves.end()) {
            it = halves.emplace(key, std::array<int, 2>{-1, -1}).first;
        }
        if (it->second[end] < 0) it->second[end] = next_id++;
        return it->second[end];
    }

    void vertex(std::array<int, 4> s, bool flip) {
        if (flip) std::swap(s[1], s[3]);
        slots.push_back(s);
    }
};

} // namespace

fatgraph hexagon_decomposition(int genus) {
    if (genus < 2) throw fatgraph_error("hexagon decomposition needs genus >= 2");
    const int m = genus - 1;
    hex_builder B;
    B.m = m;
    // interleaving convention fixed by the face check below:
    // x+:0 x-:0 y+:1 y-:1 u:0 w:1, seam matching x_i = (b_i, a_{i+1}), y_i = (c_i, c_{i+1})
    for (int i = 0; i < m; ++i) {
        for (const char* eps : {"+", "-"}) {
            bool minus = eps[0] == '-';
            std::string g1 = std::string("g1") + eps, g2 = std::string("g2") + eps;
            std::string a = std::string("a") + eps, b = std::string("b") + eps, c = std::string("c") + eps;
            // x_i^eps
            B.vertex({B.he(g1, i, 0), B.he(b, i, 1), B.he(g2, i, 1), B.he(a, i + 1, 0)}, false);
            (void)minus;
        }
        for (const char* eps : {"+", "-"}) {
            std::string g1 = std::string("g1") + eps, g2 = std::string("g2") + eps;
            std::string c = std::string("c") + eps;
            // y_i^eps (flipped interleaving)
            B.vertex({B.he(g1, i, 1), B.he(c, i, 0), B.he(g2, i, 0), B.he(c, i + 1, 1)}, true);
        }
        // u_i, w_i on the mirror curve f_i
        B.vertex({B.he("fa", i, 0), B.he("a+", i, 1), B.he("fb", i, 1), B.he("a-", i, 1)}, false);
        B.vertex({B.he("fa", i, 1), B.he("b+", i, 0), B.he("fb", i, 0), B.he("b-", i, 0)}, true);
    }
    fatgraph F;
    F.slots = B.slots;
    F.opp.assign(4 * F.vertex_count(), -1);
    for (const auto& [key, pair] : B.halves) {
        if (pair[0] < 0 || pair[1] < 0) throw fatgraph_error("hexagon builder: unpaired arc " + key.first);
        F.opp[pair[0]] = pair[1];
        F.opp[pair[1]] = pair[0];
    }
    F.finalize();
    const int expected = 4 * (genus - 1);
    if (static_cast<int>(F.regions.size()) != expected)
        throw fatgraph_error("hexagon decomposition produced wrong region count");
    for (const auto& r : F.regions)
        if (r.size() != 6) throw fatgraph_error("hexagon decomposition produced a non-hexagon");
    return F;
}

std::vector<int> hexagon_mirror_edges(const fatgraph& F, int genus) {
    // the mirror curves are the f_i: by construction they are the curve
    // components through the u/w vertices (ids 4 and 5 within each block of 6)
    const int m = genus - 1;
    std::vector<int> edges;
    for (int i = 0; i < m; ++i) {
        int u = 6 * i + 4;
        // f arcs occupy slots 0 and 2 at u_i
        edges.push_back(F.edge_of_half(F.slots[u][0]));
        edges.push_back(F.edge_of_half(F.slots[u][2]));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

fatgraph torus_grid(int m, int k) {
    if (m < 1 || k < 1 || m * k < 2) throw fatgraph_error("torus grid needs at least 2 vertices");
    fatgraph F;
    auto hid = [&](int i, int j, int s) { return 4 * (((j % m + m) % m) * k + ((i % k + k) % k)) + s; };
    F.slots.resize(m * k);
    for (int v = 0; v < m * k; ++v) F.slots[v] = {4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3};
    F.opp.assign(4 * m * k, -1);
    // slots CCW: 0=E 1=N 2=W 3=S
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < k; ++i) {
            int e = hid(i, j, 0), w = hid(i + 1, j, 2);
            F.opp[e] = w;
            F.opp[w] = e;
            int nq = hid(i, j, 1), s = hid(i, j + 1, 3);
            F.opp[nq] = s;
            F.opp[s] = nq;
        }
    }
    F.finalize();
    return F;
}

long long flow_box_count(const fatgraph& F) {
    long long total = 0;
    for (const auto& r : F.regions) {
        long long n = r.size();
        total += 3 * n * (n - 3);
    }
    return total;
}

} // namespace veer
