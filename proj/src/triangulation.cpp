#include "veer/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace veer {

int tet_edge_index(int u, int v) {
    if (u > v) std::swap(u, v);
    for (int e = 0; e < 6; ++e)
        if (tet_edge_verts[e][0] == u && tet_edge_verts[e][1] == v) return e;
    throw std::out_of_range("bad tet edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

void ideal_triangulation::validate() const {
    const int n = tet_count();
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const gluing& g = glu[t][f];
            if (g.tet < 0 || g.tet >= n)
                throw validation_error("tet " + std::to_string(t) + " face " + std::to_string(f) + ": target out of range");
            int f2 = g.p[f];
            const gluing& back = glu[g.tet][f2];
            if (back.tet != t || back.p * g.p != perm4::identity() || back.p[f2] != f)
                throw validation_error("gluing not involutive at tet " + std::to_string(t) + " face " + std::to_string(f));
            if (g.tet == t && f2 == f)
                throw validation_error("face glued to itself at tet " + std::to_string(t) + " face " + std::to_string(f));
        }
    }
}

bool ideal_triangulation::is_connected() const {
    const int n = tet_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            int d = glu[t][f].tet;
            if (!seen[d]) {
                seen[d] = 1;
                ++cnt;
                stack.push_back(d);
            }
        }
    }
    return cnt == n;
}

std::optional<std::vector<int>> ideal_triangulation::orientation() const {
    const int n = tet_count();
    std::vector<int> sign(n, 0);
    for (int root = 0; root < n; ++root) {
        if (sign[root] != 0) continue;
        sign[root] = 1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const gluing& g = glu[t][f];
                int want = -sign[t] * g.p.sign();
                if (sign[g.tet] == 0) {
                    sign[g.tet] = want;
                    stack.push_back(g.tet);
                } else if (sign[g.tet] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return sign;
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

cell_classes build_cell_classes(const ideal_triangulation& T) {
    const int n = T.tet_count();
    cell_classes out;

    // edges: union-find over 6n tet-edges, then walk each fan
    uf eu(6 * n);
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const gluing& g = T.glu[t][f];
            for (int e = 0; e < 6; ++e) {
                auto [a, b] = tet_edge_verts[e];
                if (a == f || b == f) continue; // edge not in this face
                int e2 = tet_edge_index(g.p[a], g.p[b]);
                eu.unite(6 * t + e, 6 * g.tet + e2);
            }
        }
    }
    out.edge_of.assign(n, std::vector<int>(6, -1));
    std::vector<char> visited(6 * n, 0);
    for (int t = 0; t < n; ++t) {
        for (int e = 0; e < 6; ++e) {
            if (visited[6 * t + e]) continue;
            edge_class cls;
            cls.id = static_cast<int>(out.edges.size());
            // fan walk from (t, e); orient the edge as (a,b), cross faces
            int a = tet_edge_verts[e][0], b = tet_edge_verts[e][1];
            // start face: one of the two faces containing the edge
            int f = -1;
            for (int v = 0; v < 4; ++v)
                if (v != a && v != b) { f = v; break; }
            int ct = t, ca = a, cb = b, cf = f;
            const int expect = [&] {
                int c = 0;
                for (int i = 0; i < 6 * n; ++i)
                    if (eu.find(i) == eu.find(6 * t + e)) ++c;
                return c;
            }();
            do {
                int ce = tet_edge_index(ca, cb);
                if (visited[6 * ct + ce])
                    throw validation_error("edge fan revisits a tet-edge; not a single cycle");
                visited[6 * ct + ce] = 1;
                cls.fan.push_back({ct, ce, ca, cb});
                const gluing& g = T.glu[ct][cf];
                int na = g.p[ca], nb = g.p[cb], nf = g.p[cf];
                // next face of the target tet containing the image edge
                int other = -1;
                for (int v = 0; v < 4; ++v)
                    if (v != na && v != nb && v != nf) { other = v; break; }
                ct = g.tet;
                ca = na;
                cb = nb;
                cf = other;
            } while (!(ct == t && tet_edge_index(ca, cb) == e && cf == f));
            if (static_cast<int>(cls.fan.size()) != expect)
                throw validation_error("edge fan is not a single cycle (class " + std::to_string(cls.id) + ")");
            for (const auto& inc : cls.fan) out.edge_of[inc.tet][inc.edge] = cls.id;
            out.edges.push_back(std::move(cls));
        }
    }

    // vertices
    uf vu(4 * n);
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f)
            for (int v = 0; v < 4; ++v)
                if (v != f) vu.unite(4 * t + v, 4 * T.glu[t][f].tet + T.glu[t][f].p[v]);
    out.vertex_of.assign(n, {-1, -1, -1, -1});
    std::vector<int> vid(4 * n, -1);
    for (int t = 0; t < n; ++t) {
        for (int v = 0; v < 4; ++v) {
            int r = vu.find(4 * t + v);
            if (vid[r] < 0) {
                vid[r] = static_cast<int>(out.vertices.size());
                out.vertices.push_back({vid[r], {}});
            }
            out.vertex_of[t][v] = vid[r];
            out.vertices[vid[r]].corners.emplace_back(t, v);
        }
    }
    return out;
}

std::vector<face_class> build_face_classes(const ideal_triangulation& T) {
    std::vector<face_class> out;
    const int n = T.tet_count();
    std::vector<std::array<char, 4>> seen(n, {0, 0, 0, 0});
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            if (seen[t][f]) continue;
            const gluing& g = T.glu[t][f];
            int f2 = g.p[f];
            seen[t][f] = 1;
            seen[g.tet][f2] = 1;
            face_class fc;
            fc.id = static_cast<int>(out.size());
            fc.tet[0] = t;
            fc.face[0] = f;
            fc.tet[1] = g.tet;
            fc.face[1] = f2;
            out.push_back(fc);
        }
    }
    return out;
}

dual_graph build_dual_graph(const ideal_triangulation& T) {
    dual_graph G;
    G.vertex_count = T.tet_count();
    for (const auto& fc : build_face_classes(T)) G.edges.emplace_back(fc.tet[0], fc.tet[1]);
    return G;
}

bool has_doubled_edge(const dual_graph& G) {
    std::set<std::pair<int, int>> once;
    for (auto [a, b] : G.edges) {
        if (a == b) continue; // loops are not a doubled pair
        auto key = std::minmax(a, b);
        if (!once.insert(key).second) return true;
    }
    return false;
}

bool has_triangle(const dual_graph& G) {
    const int n = G.vertex_count;
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [a, b] : G.edges)
        if (a != b) adj[a][b] = adj[b][a] = 1;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (adj[a][b])
                for (int c = b + 1; c < n; ++c)
                    if (adj[a][c] && adj[b][c]) return true;
    return false;
}

} // namespace veer
