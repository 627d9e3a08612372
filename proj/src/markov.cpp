#include "veer/markov.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace veer {

std::string markov_graph::arrow::label() const {
    switch (kind) {
        case arrow_kind::side: return "side(h" + std::to_string(half_edge) + ")";
        case arrow_kind::quadrant: return "quad(h" + std::to_string(half_edge) + ")";
        case arrow_kind::internal:
            return std::string(1, family) + "^(" + std::to_string(stage) + ")_" + std::to_string(index) + "@r" +
                   std::to_string(region);
    }
    return "?";
}

namespace {

struct uf {
    std::vector<int> p;
    explicit uf(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) {
            p[x] = p[p[x]];
            x = p[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[a] = b;
    }
};

} // namespace

int markov_graph::raw_side_arrow(const fatgraph& F, int h) const {
    (void)F;
    return h;
}
int markov_graph::raw_quadrant_arrow(const fatgraph& F, int h) const {
    return F.half_edge_count() + h;
}

markov_graph build_markov_graph(const fatgraph& F) {
    const int H = F.half_edge_count();
    markov_graph MG;

    // raw arrow ids: [0,H) side arrows, [H,2H) quadrant arrows, then internals
    int raw_count = 2 * H;
    struct internal_key {
        int region, stage, index;
        char family;
        bool operator<(const internal_key& o) const {
            return std::tie(region, stage, index, family) < std::tie(o.region, o.stage, o.index, o.family);
        }
    };
    std::map<internal_key, int> internal_ids;
    std::vector<markov_graph::arrow> raw_arrows(2 * H);
    for (int h = 0; h < H; ++h) {
        raw_arrows[h] = {markov_graph::arrow_kind::side, h, -1, -1, -1, 0};
        raw_arrows[H + h] = {markov_graph::arrow_kind::quadrant, h, -1, -1, -1, 0};
    }
    auto internal_id = [&](int region, char family, int stage, int index, int n) -> int {
        index = ((index % n) + n) % n;
        internal_key k{region, stage, index, family};
        auto it = internal_ids.find(k);
        if (it != internal_ids.end()) return it->second;
        int id = raw_count++;
        internal_ids[k] = id;
        raw_arrows.push_back({markov_graph::arrow_kind::internal, -1, region, stage, index, family});
        return id;
    };

    uf u(2 * H); // merges only ever involve global arrows (square identification)
    struct raw_edge {
        int src, dst, region, frame;
        char side;
    };
    std::vector<raw_edge> raw_edges;

    for (const auto& reg : F.regions) {
        const int n = reg.size();
        auto side_S = [&](int i) { return reg.sides[((i % n) + n) % n]; };                 // c_{i,S}
        auto side_N = [&](int i) { return F.opp[side_S(i)]; };                             // c_{i,N}
        auto quad_at = [&](int i, int dslot) {                                             // quadrant near corner i
            int h = side_S(i);
            return H + F.rotate(h, dslot);
        };
        auto dS = [&](int i) { return quad_at(i, 0); };
        auto dN = [&](int i) { return quad_at(i, 2); };
        auto dW = [&](int i) { return quad_at(i, -1); };
        auto dE = [&](int i) { return quad_at(i, 1); };

        const bool even = (n % 2 == 0);
        const int d_top = even ? (n - 2) / 2 : (n - 3) / 2; // identified level of the d family
        const int c_top = even ? (n - 4) / 2 : (n - 3) / 2;
        auto Vd = [&](int s, int j) -> int {
            if (s == 0) return dN(j);
            if (s == d_top) return even ? dS(j + n / 2) : side_S(j + (n - 1) / 2);
            return internal_id(reg.id, 'd', s, j, n);
        };
        auto Vc = [&](int s, int j) -> int {
            if (s == 0) return side_N(j);
            if (s == c_top) return even ? side_S(j + n / 2) : dS(j + (n + 1) / 2);
            return internal_id(reg.id, 'c', s, j, n);
        };

        if (n == 4) {
            // square degeneracy: c_{i,N} and c_{i+2,S} belong to the same sector
            for (int i = 0; i < 4; ++i) u.unite(side_N(i), side_S(i + 2));
        }

        // pre-final frames f = 0 .. n-5
        for (int f = 0; f + 4 < n; ++f) {
            if (f % 2 == 0) {
                int s = f / 2;
                for (int i = 0; i < n; ++i) {
                    int tgt = Vd(s, i - s - 1);
                    raw_edges.push_back({dW(i - 2 * s - 2), tgt, reg.id, f, 'L'});
                    raw_edges.push_back({Vd(s + 1, i - s - 1), tgt, reg.id, f, 'M'});
                    raw_edges.push_back({dE(i), tgt, reg.id, f, 'R'});
                }
            } else {
                int s = (f - 1) / 2;
                for (int i = 0; i < n; ++i) {
                    int tgt = Vc(s, i - s - 2);
                    raw_edges.push_back({dW(i - 2 * s - 3), tgt, reg.id, f, 'L'});
                    raw_edges.push_back({Vc(s + 1, i - s - 2), tgt, reg.id, f, 'M'});
                    raw_edges.push_back({dE(i), tgt, reg.id, f, 'R'});
                }
            }
        }
        // final frame
        const int f_final = n - 4;
        if (even) {
            for (int i = 0; i < n; ++i) {
                int tgt = Vd((n - 4) / 2, i);
                raw_edges.push_back({Vc((n - 4) / 2, i - 1), tgt, reg.id, f_final, 'L'});
                raw_edges.push_back({Vd((n - 2) / 2, i), tgt, reg.id, f_final, 'M'});
                raw_edges.push_back({Vc((n - 4) / 2, i), tgt, reg.id, f_final, 'R'});
            }
        } else {
            for (int i = 0; i < n; ++i) {
                int tgt = Vc((n - 5) / 2, i);
                raw_edges.push_back({Vd((n - 3) / 2, i), tgt, reg.id, f_final, 'L'});
                raw_edges.push_back({Vc((n - 3) / 2, i), tgt, reg.id, f_final, 'M'});
                raw_edges.push_back({Vd((n - 3) / 2, i + 1), tgt, reg.id, f_final, 'R'});
            }
        }
    }

    // canonicalize
    MG.canon_of_raw.assign(raw_count, -1);
    auto canon_raw = [&](int r) { return r < 2 * H ? u.find(r) : r; };
    int nv = 0;
    for (int r = 0; r < raw_count; ++r) {
        int cr = canon_raw(r);
        if (MG.canon_of_raw[cr] < 0) {
            MG.canon_of_raw[cr] = nv++;
            MG.aliases.push_back({});
        }
        MG.canon_of_raw[r] = MG.canon_of_raw[cr];
        MG.aliases[MG.canon_of_raw[r]].push_back(raw_arrows[r]);
    }
    MG.g.n = nv;
    MG.in_order.assign(nv, {});
    MG.out_order.assign(nv, {});
    for (const auto& re : raw_edges) {
        int id = MG.g.add_edge(MG.canon_of_raw[re.src], MG.canon_of_raw[re.dst]);
        MG.edge_infos.push_back({re.region, re.frame, re.side});
        MG.in_order[MG.canon_of_raw[re.dst]].push_back(id);
    }
    // outgoing order: left exits by (region, frame), then births, then right
    // exits by reverse (region, frame); incoming is already in move order
    for (size_t i = 0; i < MG.g.edges.size(); ++i) MG.out_order[MG.g.edges[i].src].push_back(static_cast<int>(i));
    auto side_rank = [](char c) { return c == 'L' ? 0 : (c == 'M' ? 1 : 2); };
    for (auto& lst : MG.out_order) {
        std::sort(lst.begin(), lst.end(), [&](int a, int b) {
            const auto &ia = MG.edge_infos[a], &ib = MG.edge_infos[b];
            if (ia.exit_side != ib.exit_side) return side_rank(ia.exit_side) < side_rank(ib.exit_side);
            if (ia.region != ib.region) return ia.region < ib.region;
            if (ia.frame != ib.frame) return ia.exit_side == 'R' ? ia.frame > ib.frame : ia.frame < ib.frame;
            return a < b;
        });
    }
    return MG;
}

bool square_flanked(const fatgraph& F, int h) {
    // the quadrant arrow at the corner of h; flanking regions are the corners
    // of the neighbouring slots
    std::vector<int> region_of_corner(F.half_edge_count(), -1);
    for (const auto& r : F.regions)
        for (int s : r.sides) region_of_corner[s] = r.id;
    int left = region_of_corner[F.rotate(h, 1)];
    int right = region_of_corner[F.rotate(h, -1)];
    return F.regions[left].size() == 4 && F.regions[right].size() == 4;
}

markov_reduction reduce_markov(const fatgraph& F, const markov_graph& MG) {
    markov_reduction out;
    out.red = reduce(MG.g);
    for (int v = 0; v < MG.g.n; ++v) {
        if (out.red.vertex_alive[v]) continue;
        bool quad = false, internal = false, other = false;
        for (const auto& a : MG.aliases[v]) {
            if (a.kind == markov_graph::arrow_kind::quadrant)
                quad = true;
            else if (a.kind == markov_graph::arrow_kind::internal)
                internal = true;
            else
                other = true;
        }
        if (quad && !other)
            out.removed_quadrant_arrows.push_back(v);
        else if (internal && !quad && !other)
            out.removed_internal.push_back(v);
        else
            out.removed_other.push_back(v);
    }
    (void)F;
    return out;
}

markov_graph restrict_to_half(const fatgraph& F, const markov_graph& MG, const std::vector<int>& doubling_edges,
                              int side) {
    std::set<int> curve(doubling_edges.begin(), doubling_edges.end());
    // must be a union of curve components
    for (const auto& comp : F.curve_components()) {
        bool any = false, all = true;
        for (int h : comp) {
            if (curve.count(F.edge_of_half(h)))
                any = true;
            else
                all = false;
        }
        if (any && !all) throw fatgraph_error("doubling curve is not a union of multicurve components");
    }
    // 2-color regions: crossing a curve edge flips the side
    std::vector<int> region_of_corner(F.half_edge_count(), -1);
    for (const auto& r : F.regions)
        for (int s : r.sides) region_of_corner[s] = r.id;
    std::vector<int> color(F.regions.size(), -1);
    color[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        for (int h : F.regions[r].sides) {
            int r2 = region_of_corner[F.opp[h]];
            int want = curve.count(F.edge_of_half(h)) ? 1 - color[r] : color[r];
            if (color[r2] < 0) {
                color[r2] = want;
                stack.push_back(r2);
            } else if (color[r2] != want) {
                throw fatgraph_error("doubling curve does not separate the surface");
            }
        }
    }

    const int H = F.half_edge_count();
    std::vector<char> vertex_on_curve(F.vertex_count(), 0);
    for (int h = 0; h < H; ++h)
        if (curve.count(F.edge_of_half(h))) vertex_on_curve[F.vertex_of[h]] = 1;

    auto raw_kept = [&](const markov_graph::arrow& a) {
        switch (a.kind) {
            case markov_graph::arrow_kind::side: {
                if (curve.count(F.edge_of_half(a.half_edge))) return false;
                return color[region_of_corner[a.half_edge]] == side;
            }
            case markov_graph::arrow_kind::quadrant: {
                int v = F.vertex_of[a.half_edge];
                if (vertex_on_curve[v]) return false;
                return color[region_of_corner[a.half_edge]] == side;
            }
            case markov_graph::arrow_kind::internal: return color[a.region] == side;
        }
        return false;
    };

    markov_graph R;
    std::vector<int> newid(MG.g.n, -1);
    for (int v = 0; v < MG.g.n; ++v) {
        bool keep = !MG.aliases[v].empty();
        for (const auto& a : MG.aliases[v]) keep = keep && raw_kept(a);
        if (keep) {
            newid[v] = R.g.add_vertex();
            R.aliases.push_back(MG.aliases[v]);
            R.in_order.push_back({});
            R.out_order.push_back({});
        }
    }
    std::vector<int> edge_newid(MG.g.edges.size(), -1);
    for (size_t i = 0; i < MG.g.edges.size(); ++i) {
        const auto& e = MG.g.edges[i];
        if (!e.alive || newid[e.src] < 0 || newid[e.dst] < 0) continue;
        edge_newid[i] = R.g.add_edge(newid[e.src], newid[e.dst]);
        R.edge_infos.push_back(MG.edge_infos[i]);
    }
    for (int v = 0; v < MG.g.n; ++v) {
        if (newid[v] < 0) continue;
        for (int ei : MG.in_order[v])
            if (edge_newid[ei] >= 0) R.in_order[newid[v]].push_back(edge_newid[ei]);
        for (int ei : MG.out_order[v])
            if (edge_newid[ei] >= 0) R.out_order[newid[v]].push_back(edge_newid[ei]);
    }
    return R;
}

bool same_planar_order(const std::vector<int>& a, const std::vector<int>& b) {
    if (a == b) return true;
    std::vector<int> r(b.rbegin(), b.rend());
    return a == r;
}

} // namespace veer
