#pragma once

#include <cstdint>
#include <vector>

namespace veer {

// Dense integer matrix, row-major.
struct imat {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    imat() = default;
    imat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static imat eye(int n) {
        imat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    friend imat operator*(const imat& x, const imat& y);
    friend bool operator==(const imat& x, const imat& y) { return x.rows == y.rows && x.cols == y.cols && x.a == y.a; }
};

// U*A*V = S, U and V unimodular, S diagonal with d1 | d2 | ..., all di >= 0.
struct snf_result {
    imat u, s, v;
    int rank() const;
    std::vector<long long> diagonal() const;
};

snf_result smith_normal_form(const imat& A);

// exact determinant (Bareiss); only valid for square matrices that fit in long long
long long det(const imat& A);

} // namespace veer
