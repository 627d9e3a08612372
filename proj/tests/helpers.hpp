#pragma once

#include "veer/digraph.hpp"
#include "veer/smith.hpp"
#include "veer/triangulation.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace fixtures {

// the two knot entries and the four Appendix-style candidates
inline const char* k10n14 = "gLLMQaedfdffjxaxjkn_200211";
inline const char* k12n121 = "hLAPzkbcbeefgghhwjsahr_2112212";
inline const char* rejected_266 = "oLLvAwQMLQcbeehgiijjlnlmnnxxxavccaaaxcavc_21112002212120";
inline const char* accepted_266 = "ovvLALQLQQchgggkijmnllnmnmaaaaaggaaggaaaa_10000111111100";
inline const char* rejected_2244 = "qvLAMAwPLzQkdcegfghiklmonppopbbbahabhbhabbhhga_2011022001120201";
inline const char* accepted_2244 = "qvvLLMLzQQQkfgfjiloknoplmnoppaaaavvavaaavvaaav_1020212211211200";

inline std::vector<std::string> all_entries() {
    return {k10n14, k12n121, rejected_266, accepted_266, rejected_2244, accepted_2244};
}

// figure-eight knot complement (2 tetrahedra), codec sanity anchor
inline const char* fig8 = "cPcbbbiht";

} // namespace fixtures

namespace oracle {

// ---- brute-force elementary cycle enumeration ----
// DFS over edge walks keeping the vertex set elementary; counts each cycle
// once by requiring the start to be the smallest vertex on it.
inline long long count_cycles_brute(const veer::digraph& g, int max_len) {
    auto adj = g.out_adj();
    long long count = 0;
    std::vector<char> on(g.n, 0);
    std::function<void(int, int, int)> walk = [&](int start, int v, int len) {
        for (int ei : adj[v]) {
            int w = g.edges[ei].dst;
            if (w == start) {
                ++count;
                continue;
            }
            if (w < start || on[w] || len >= max_len) continue;
            on[w] = 1;
            walk(start, w, len + 1);
            on[w] = 0;
        }
    };
    for (int s = 0; s < g.n; ++s) {
        on[s] = 1;
        walk(s, s, 1);
        on[s] = 0;
    }
    return count;
}

// determinantal divisors: d1...dk with d1 = gcd of entries, d1*...*dk = gcd of
// k x k minors; independent characterization of the invariant factors (no
// elementary operations at all, so it shares nothing with the library path)
inline std::vector<long long> snf_diagonal_minors(const std::vector<std::vector<long long>>& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    const int n = std::min(rows, cols);
    auto minor_det = [&](const std::vector<int>& ri, const std::vector<int>& ci) {
        const int k = static_cast<int>(ri.size());
        veer::imat m(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m.at(i, j) = a[ri[i]][ci[j]];
        return veer::det(m);
    };
    std::vector<long long> gk(n + 1, 0); // gk[k] = gcd of all k x k minors
    for (int k = 1; k <= n; ++k) {
        std::vector<int> ri(k), ci(k);
        std::function<void(int, int)> loop_rows = [&](int pos, int start) {
            if (pos == k) {
                std::function<void(int, int)> loop_cols = [&](int cpos, int cstart) {
                    if (cpos == k) {
                        long long d = minor_det(ri, ci);
                        gk[k] = std::gcd(gk[k], d < 0 ? -d : d);
                        return;
                    }
                    for (int c = cstart; c < cols; ++c) {
                        ci[cpos] = c;
                        loop_cols(cpos + 1, c + 1);
                    }
                };
                loop_cols(0, 0);
                return;
            }
            for (int r = start; r < rows; ++r) {
                ri[pos] = r;
                loop_rows(pos + 1, r + 1);
            }
        };
        loop_rows(0, 0);
    }
    std::vector<long long> diag;
    long long prev = 1;
    for (int k = 1; k <= n; ++k) {
        if (gk[k] == 0) break;
        diag.push_back(gk[k] / prev);
        prev = gk[k];
    }
    return diag;
}

// rank over Q (fraction-free) and over F_p; used as the independent homology
// rank check: free rank over Q, torsion-freeness via equal ranks mod p
inline int rank_rational(std::vector<std::vector<long long>> a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    int rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            long long g = std::gcd(std::llabs(a[i][c]), std::llabs(a[r][c]));
            long long fi = a[r][c] / g, fr = a[i][c] / g;
            for (size_t j = 0; j < cols; ++j) a[i][j] = a[i][j] * fi - a[r][j] * fr;
        }
        ++r;
        ++rank;
    }
    return rank;
}

inline int rank_mod_p(const std::vector<std::vector<long long>>& m, long long p) {
    std::vector<std::vector<long long>> a = m;
    for (auto& row : a)
        for (auto& x : row) x = ((x % p) + p) % p;
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    auto inv = [&](long long x) {
        long long b = p - 2, r = 1;
        while (b) {
            if (b & 1) r = r * x % p;
            x = x * x % p;
            b >>= 1;
        }
        return r;
    };
    int rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        long long iv = inv(a[r][c]);
        for (size_t j = 0; j < cols; ++j) a[r][j] = a[r][j] * iv % p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            long long f = a[i][c];
            for (size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
        }
        ++r;
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<long long>> to_rows(const veer::imat& m) {
    std::vector<std::vector<long long>> out(m.rows, std::vector<long long>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out[i][j] = m.at(i, j);
    return out;
}

} // namespace oracle
