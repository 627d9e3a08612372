#include "veer/smith.hpp"

#include <limits>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace veer {

imat operator*(const imat& x, const imat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("imat shape mismatch");
    imat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            long long xv = x.at(i, k);
            if (!xv) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
        }
    return r;
}

int snf_result::rank() const {
    int r = 0;
    for (int i = 0; i < std::min(s.rows, s.cols); ++i)
        if (s.at(i, i) != 0) ++r;
    return r;
}

std::vector<long long> snf_result::diagonal() const {
    std::vector<long long> d;
    for (int i = 0; i < std::min(s.rows, s.cols); ++i) d.push_back(s.at(i, i));
    return d;
}

namespace {

struct worker {
    imat s, u, v;

    void row_swap(int i, int j) {
        for (int c = 0; c < s.cols; ++c) std::swap(s.at(i, c), s.at(j, c));
        for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void col_swap(int i, int j) {
        for (int r = 0; r < s.rows; ++r) std::swap(s.at(r, i), s.at(r, j));
        for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void row_add(int src, int dst, long long k) { // row dst += k * row src
        for (int c = 0; c < s.cols; ++c) s.at(dst, c) += k * s.at(src, c);
        for (int c = 0; c < u.cols; ++c) u.at(dst, c) += k * u.at(src, c);
    }
    void col_add(int src, int dst, long long k) {
        for (int r = 0; r < s.rows; ++r) s.at(r, dst) += k * s.at(r, src);
        for (int r = 0; r < v.rows; ++r) v.at(r, dst) += k * v.at(r, src);
    }
    void row_neg(int i) {
        for (int c = 0; c < s.cols; ++c) s.at(i, c) = -s.at(i, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    }
};

} // namespace

namespace {

// quotient with minimal-magnitude remainder: |a - q*b| <= |b|/2
long long rounded_div(long long a, long long b) {
    long long q = a / b;
    long long r = a - q * b;
    if (2 * std::llabs(r) > std::llabs(b)) q += (r > 0) == (b > 0) ? 1 : -1;
    return q;
}

} // namespace

snf_result smith_normal_form(const imat& A) {
    worker w;
    w.s = A;
    w.u = imat::eye(A.rows);
    w.v = imat::eye(A.cols);
    const int n = std::min(A.rows, A.cols);

    int t = 0;
    while (t < n) {
        // pivot: smallest nonzero |entry| in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < w.s.rows; ++i)
            for (int j = t; j < w.s.cols; ++j)
                if (w.s.at(i, j) != 0 && (pi < 0 || std::llabs(w.s.at(i, j)) < std::llabs(w.s.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        if (w.s.at(t, t) < 0) w.row_neg(t);

        // clear the pivot row and column with minimal remainders; any leftover
        // remainder is strictly smaller than the pivot, so re-pivot
        bool dirty = false;
        for (int i = t + 1; i < w.s.rows; ++i) {
            if (w.s.at(i, t) == 0) continue;
            w.row_add(t, i, -rounded_div(w.s.at(i, t), w.s.at(t, t)));
            dirty = dirty || w.s.at(i, t) != 0;
        }
        for (int j = t + 1; j < w.s.cols; ++j) {
            if (w.s.at(t, j) == 0) continue;
            w.col_add(t, j, -rounded_div(w.s.at(t, j), w.s.at(t, t)));
            dirty = dirty || w.s.at(t, j) != 0;
        }
        if (dirty) continue;
        // the pivot must divide the whole trailing block, so the invariant
        // factors come out in divisibility order; fold a bad row in and redo
        int bi = -1;
        for (int i = t + 1; i < w.s.rows && bi < 0; ++i)
            for (int j = t + 1; j < w.s.cols && bi < 0; ++j)
                if (w.s.at(i, j) % w.s.at(t, t) != 0) bi = i;
        if (bi >= 0) {
            w.row_add(bi, t, 1);
            continue;
        }
        ++t;
    }
    return {w.u, w.s, w.v};
}

long long det(const imat& A) {
    if (A.rows != A.cols) throw std::invalid_argument("det of non-square");
    const int n = A.rows;
    if (n == 0) return 1;
    // fraction-free Bareiss over 128 bits; every intermediate is a minor of A,
    // so the Hadamard bound certifies the computation is exact
    {
        long double bound = 1.0L;
        for (int i = 0; i < n; ++i) {
            long double norm = 0.0L;
            for (int j = 0; j < n; ++j) norm += static_cast<long double>(A.at(i, j)) * A.at(i, j);
            bound *= sqrtl(norm);
            if (bound > 1.5e38L) throw std::overflow_error("determinant bound exceeds 128-bit range");
        }
    }
    std::vector<__int128> m(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i) * n + j] = A.at(i, j);
    auto at = [&](int i, int j) -> __int128& { return m[static_cast<size_t>(i) * n + j]; };
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    __int128 d = sign * at(n - 1, n - 1);
    if (d > std::numeric_limits<long long>::max() || d < std::numeric_limits<long long>::min())
        throw std::overflow_error("determinant does not fit in long long");
    return static_cast<long long>(d);
}

} // namespace veer
