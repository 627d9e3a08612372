#include "veer/digraph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace veer {

std::vector<std::vector<int>> digraph::out_adj(const std::vector<char>* alive_vertex) const {
    std::vector<std::vector<int>> adj(n);
    for (size_t i = 0; i < edges.size(); ++i) {
        const edge& e = edges[i];
        if (!e.alive) continue;
        if (alive_vertex && (!(*alive_vertex)[e.src] || !(*alive_vertex)[e.dst])) continue;
        adj[e.src].push_back(static_cast<int>(i));
    }
    return adj;
}

std::vector<int> digraph::out_degree(const std::vector<char>* alive_vertex) const {
    std::vector<int> deg(n, 0);
    for (const edge& e : edges) {
        if (!e.alive) continue;
        if (alive_vertex && (!(*alive_vertex)[e.src] || !(*alive_vertex)[e.dst])) continue;
        ++deg[e.src];
    }
    return deg;
}

reduction_result reduce(const digraph& G) {
    reduction_result R;
    R.graph = G;
    R.vertex_alive.assign(G.n, 1);
    bool changed = true;
    while (changed) {
        changed = false;
        auto deg = R.graph.out_degree(&R.vertex_alive);
        // unique live out-edge target for out-degree-1 vertices
        std::vector<int> succ(G.n, -1);
        for (const auto& e : R.graph.edges) {
            if (!e.alive || !R.vertex_alive[e.src] || !R.vertex_alive[e.dst]) continue;
            if (deg[e.src] == 1) succ[e.src] = e.dst;
        }
        // cycles inside the out-degree-1 set
        std::vector<int> state(G.n, 0); // 0 unvisited, 1 active, 2 done
        std::vector<char> in_cycle(G.n, 0);
        for (int v = 0; v < G.n; ++v) {
            if (!R.vertex_alive[v] || deg[v] != 1 || state[v]) continue;
            std::vector<int> path;
            int x = v;
            while (x >= 0 && R.vertex_alive[x] && deg[x] == 1 && state[x] == 0) {
                state[x] = 1;
                path.push_back(x);
                x = succ[x];
            }
            if (x >= 0 && state[x] == 1) {
                auto it = std::find(path.begin(), path.end(), x);
                std::vector<int> cyc(it, path.end());
                for (int c : cyc) in_cycle[c] = 1;
                R.removed_cycles.push_back(std::move(cyc));
                changed = true;
            }
            for (int p : path) state[p] = 2;
        }
        if (!changed) break;
        for (int v = 0; v < G.n; ++v)
            if (in_cycle[v]) R.vertex_alive[v] = 0;
        for (auto& e : R.graph.edges)
            if (e.alive && (in_cycle[e.src] || in_cycle[e.dst])) e.alive = false;
    }
    return R;
}

bool is_infinitesimal_free(const digraph& G, inf_mode mode) {
    std::vector<char> alive(G.n, 1);
    return is_infinitesimal_free(G, alive, mode);
}

bool is_infinitesimal_free(const digraph& G, const std::vector<char>& vertex_alive, inf_mode mode) {
    std::vector<int> verts;
    for (int v = 0; v < G.n; ++v)
        if (vertex_alive[v]) verts.push_back(v);
    const int m = static_cast<int>(verts.size());
    if (m == 0) return true;

    if (mode == inf_mode::oracle) {
        if (m > 20) throw std::invalid_argument("oracle mode limited to 20 vertices");
        std::vector<int> idx(G.n, -1);
        for (int i = 0; i < m; ++i) idx[verts[i]] = i;
        // closed <=> no live edge from inside to outside
        for (uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
            bool closed = true;
            for (const auto& e : G.edges) {
                if (!e.alive || !vertex_alive[e.src] || !vertex_alive[e.dst]) continue;
                if ((mask >> idx[e.src] & 1) && !(mask >> idx[e.dst] & 1)) {
                    closed = false;
                    break;
                }
            }
            if (closed) return false;
        }
        return true;
    }

    // scc mode: a proper closed subset exists iff there is more than one SCC
    std::vector<int> idx(G.n, -1);
    for (int i = 0; i < m; ++i) idx[verts[i]] = i;
    std::vector<std::vector<int>> adj(m);
    for (const auto& e : G.edges) {
        if (!e.alive || !vertex_alive[e.src] || !vertex_alive[e.dst]) continue;
        adj[idx[e.src]].push_back(idx[e.dst]);
    }
    // Tarjan
    std::vector<int> low(m, -1), num(m, -1), stk;
    std::vector<char> on(m, 0);
    int counter = 0, nscc = 0;
    std::function<void(int)> dfs = [&](int v) {
        low[v] = num[v] = counter++;
        stk.push_back(v);
        on[v] = 1;
        for (int w : adj[v]) {
            if (num[w] < 0) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on[w]) {
                low[v] = std::min(low[v], num[w]);
            }
        }
        if (low[v] == num[v]) {
            ++nscc;
            for (;;) {
                int w = stk.back();
                stk.pop_back();
                on[w] = 0;
                if (w == v) break;
            }
        }
    };
    for (int v = 0; v < m; ++v)
        if (num[v] < 0) dfs(v);
    return nscc <= 1;
}

namespace {

// Johnson-style enumeration with a length cutoff: from each start vertex s,
// walk only vertices > s, keeping the path elementary.
void cycles_from(const digraph& G, const std::vector<std::vector<int>>& adj, int s, int max_len,
                 std::vector<cycle>& out) {
    std::vector<int> vpath{s};
    std::vector<int> epath;
    std::vector<char> on(G.n, 0);
    on[s] = 1;
    std::function<void(int)> go = [&](int v) {
        for (int ei : adj[v]) {
            int w = G.edges[ei].dst;
            if (w < s) continue;
            if (w == s) {
                cycle c;
                c.vertices = vpath;
                c.edge_ids = epath;
                c.edge_ids.push_back(ei);
                out.push_back(std::move(c));
                continue;
            }
            if (on[w] || static_cast<int>(vpath.size()) >= max_len) continue;
            on[w] = 1;
            vpath.push_back(w);
            epath.push_back(ei);
            go(w);
            epath.pop_back();
            vpath.pop_back();
            on[w] = 0;
        }
    };
    go(s);
}

} // namespace

std::vector<cycle> enumerate_cycles(const digraph& G, int max_len) {
    if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
    auto adj = G.out_adj();
    for (auto& lst : adj)
        std::sort(lst.begin(), lst.end(), [&](int a, int b) {
            return G.edges[a].dst != G.edges[b].dst ? G.edges[a].dst < G.edges[b].dst : a < b;
        });
    std::vector<cycle> out;
    for (int s = 0; s < G.n; ++s) cycles_from(G, adj, s, max_len, out);
    std::sort(out.begin(), out.end(), [](const cycle& a, const cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.vertices != b.vertices) return a.vertices < b.vertices;
        return a.edge_ids < b.edge_ids;
    });
    return out;
}

} // namespace veer
