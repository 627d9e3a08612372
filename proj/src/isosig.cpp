#include "veer/isosig.hpp"

#include <algorithm>
#include <vector>

namespace veer {

namespace {

const std::string charset = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-";

int char_val(char c, size_t off) {
    auto p = charset.find(c);
    if (p == std::string::npos) throw decode_error("malformed character", off);
    return static_cast<int>(p);
}

struct reader {
    const std::string& s;
    size_t pos = 0;
    int take() {
        if (pos >= s.size()) throw decode_error("truncated payload", pos);
        int v = char_val(s[pos], pos);
        ++pos;
        return v;
    }
};

int dest_chars(size_t n) {
    int c = 1;
    while ((n - 1) >> (6 * c)) ++c;
    return c;
}

// one component starting at r.pos; appends tetrahedra to glu
void decode_component(reader& r, std::vector<std::array<gluing, 4>>& glu) {
    size_t size_off = r.pos;
    long long n = r.take();
    if (n == 63) {
        int nchars = r.take();
        if (nchars <= 0 || nchars > 8) throw decode_error("bad size length", size_off);
        n = 0;
        for (int i = 0; i < nchars; ++i) n |= static_cast<long long>(r.take()) << (6 * i);
    }
    if (n <= 0) throw decode_error("bad component size", size_off);

    // facet actions: 2 bits each, 3 per char; read until the facet budget 4n is met
    std::vector<int> types;
    long long acc = 0;
    while (acc < 4 * n) {
        size_t off = r.pos;
        int v = r.take();
        for (int k = 0; k < 3 && acc < 4 * n; ++k) {
            int t = (v >> (2 * k)) & 3;
            if (t == 3) throw decode_error("bad facet action", off);
            types.push_back(t);
            acc += (t == 0) ? 1 : 2;
        }
    }
    if (acc != 4 * n) throw decode_error("facet action overflow", r.pos == 0 ? 0 : r.pos - 1);

    int n2 = static_cast<int>(std::count(types.begin(), types.end(), 2));
    const int dc = dest_chars(static_cast<size_t>(n));
    std::vector<int> dests(n2);
    std::vector<size_t> dest_off(n2);
    for (int i = 0; i < n2; ++i) {
        dest_off[i] = r.pos;
        int d = 0;
        for (int j = 0; j < dc; ++j) d |= r.take() << (6 * j);
        dests[i] = d;
    }
    std::vector<perm4> perms(n2);
    std::vector<size_t> perm_off(n2);
    for (int i = 0; i < n2; ++i) {
        perm_off[i] = r.pos;
        int idx = r.take();
        if (idx >= 24) throw decode_error("bad permutation index", perm_off[i]);
        perms[i] = perm4::from_lex_index(idx);
    }

    const int base = static_cast<int>(glu.size());
    glu.resize(base + n);
    std::vector<std::array<char, 4>> done(n, {0, 0, 0, 0});
    size_t ti = 0, di = 0;
    int next_new = 1;
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            if (done[t][f]) continue;
            int ty = types[ti++];
            if (ty == 0) throw decode_error("boundary facet not allowed here", size_off);
            if (ty == 1) {
                if (next_new >= n) throw decode_error("new-simplex overflow", size_off);
                glu[base + t][f] = {base + next_new, perm4::identity()};
                glu[base + next_new][f] = {base + t, perm4::identity()};
                done[t][f] = done[next_new][f] = 1;
                ++next_new;
            } else {
                int d = dests[di];
                const perm4& p = perms[di];
                if (d >= n) throw decode_error("destination out of range", dest_off[di]);
                int f2 = p[f];
                if (done[d][f2]) throw decode_error("facet glued twice", perm_off[di]);
                glu[base + t][f] = {base + d, p};
                glu[base + d][f2] = {base + t, p.inverse()};
                done[t][f] = done[d][f2] = 1;
                ++di;
            }
        }
    }
    if (next_new != n) throw decode_error("component data disconnected", size_off);
}

// ---- encoding ----

struct enc_candidate {
    std::vector<int> types;
    std::vector<int> dests;
    std::vector<int> perms;
    int n;
};

enc_candidate scan_from(const ideal_triangulation& T, const std::vector<int>& comp, int start, const perm4& p0) {
    // comp: sorted tet ids of this component
    enc_candidate out;
    out.n = static_cast<int>(comp.size());
    std::vector<int> label(T.tet_count(), -1);
    std::vector<perm4> rho(T.tet_count()); // original vertex -> canonical vertex
    std::vector<int> order;
    label[start] = 0;
    rho[start] = p0;
    order.push_back(start);
    std::vector<std::array<char, 4>> done(out.n, {0, 0, 0, 0});
    int next_new = 1;
    for (int t = 0; t < static_cast<int>(order.size()); ++t) {
        int ot = order[t];
        for (int f = 0; f < 4; ++f) {
            if (done[t][f]) continue;
            int of = rho[ot].inverse()[f];
            const gluing& g = T.glu[ot][of];
            if (label[g.tet] < 0) {
                label[g.tet] = next_new;
                rho[g.tet] = rho[ot] * g.p.inverse();
                order.push_back(g.tet);
                out.types.push_back(1);
                done[t][f] = done[next_new][f] = 1;
                ++next_new;
            } else {
                perm4 cp = rho[g.tet] * g.p * rho[ot].inverse();
                int dl = label[g.tet];
                int f2 = cp[f];
                out.types.push_back(2);
                out.dests.push_back(dl);
                out.perms.push_back(cp.lex_index());
                done[t][f] = 1;
                done[dl][f2] = 1;
            }
        }
    }
    return out;
}

std::string render(const enc_candidate& c) {
    std::string s;
    long long n = c.n;
    if (n < 63) {
        s += charset[n];
    } else {
        s += charset[63];
        int nchars = 0;
        long long tmp = n;
        while (tmp > 0) {
            tmp >>= 6;
            ++nchars;
        }
        s += charset[nchars];
        tmp = n;
        for (int i = 0; i < nchars; ++i) {
            s += charset[tmp & 63];
            tmp >>= 6;
        }
    }
    for (size_t i = 0; i < c.types.size(); i += 3) {
        int v = 0;
        for (size_t k = 0; k < 3 && i + k < c.types.size(); ++k) v |= c.types[i + k] << (2 * k);
        s += charset[v];
    }
    const int dc = dest_chars(static_cast<size_t>(c.n));
    for (int d : c.dests)
        for (int j = 0; j < dc; ++j) s += charset[(d >> (6 * j)) & 63];
    for (int p : c.perms) s += charset[p];
    return s;
}

} // namespace

ideal_triangulation decode_isosig(const std::string& sig) {
    if (sig.empty()) throw decode_error("empty signature", 0);
    reader r{sig};
    ideal_triangulation T;
    while (r.pos < sig.size()) decode_component(r, T.glu);
    T.validate();
    return T;
}

std::string encode_isosig(const ideal_triangulation& T) {
    T.validate();
    const int n = T.tet_count();
    // split into components
    std::vector<int> comp_id(n, -1);
    int ncomp = 0;
    for (int root = 0; root < n; ++root) {
        if (comp_id[root] >= 0) continue;
        std::vector<int> stack{root};
        comp_id[root] = ncomp;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                int d = T.glu[t][f].tet;
                if (comp_id[d] < 0) {
                    comp_id[d] = ncomp;
                    stack.push_back(d);
                }
            }
        }
        ++ncomp;
    }
    std::vector<std::string> parts;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> comp;
        for (int t = 0; t < n; ++t)
            if (comp_id[t] == c) comp.push_back(t);
        std::string best;
        for (int start : comp) {
            for (int pi = 0; pi < 24; ++pi) {
                std::string cand = render(scan_from(T, comp, start, perm4::from_lex_index(pi)));
                if (best.empty() || cand < best) best = cand;
            }
        }
        parts.push_back(best);
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) out += p;
    return out;
}

} // namespace veer
