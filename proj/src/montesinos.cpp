#include "veer/montesinos.hpp"

#include <algorithm>
#include <numeric>

namespace veer {

rational::rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw montesinos_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

rational operator+(rational a, rational b) { return rational(a.num * b.den + b.num * a.den, a.den * b.den); }
rational operator-(rational a, rational b) { return rational(a.num * b.den - b.num * a.den, a.den * b.den); }
bool operator<(const rational& a, const rational& b) { return a.num * b.den < b.num * a.den; }

std::string rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

void surgery_system::validate() const {
    const size_t s = n.size();
    if (m.size() != s || q.size() != s) throw montesinos_error("surgery system sizes disagree");
    for (size_t i = 0; i < s; ++i) {
        if (n[i] < 0 || m[i] < 0) throw montesinos_error("negative branch count");
        if (q[i].size() != s) throw montesinos_error("q is not square");
        if (q[i][i] != 0) throw montesinos_error("q has nonzero diagonal");
        for (size_t j = 0; j < s; ++j) {
            if (q[i][j] < 0) throw montesinos_error("negative intersection count");
            if (q[i][j] != q[j][i]) throw montesinos_error("q is not symmetric");
        }
    }
}

std::vector<std::vector<long long>> surgery_system::matrix_c() const {
    const size_t s = n.size();
    std::vector<std::vector<long long>> C(s, std::vector<long long>(s, 0));
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j) {
            long long prod = q[i][j] * n[i] * n[j];
            if (prod % 4 != 0) throw montesinos_error("c_ij = q_ij n_i n_j / 4 is not an integer");
            C[i][j] = prod / 4;
        }
    return C;
}

std::vector<long long> surgery_system::vector_d() const {
    std::vector<long long> d(n.size());
    for (size_t i = 0; i < n.size(); ++i) d[i] = n[i] * m[i];
    return d;
}

long long added_triple_points_horizontal(long long n1, long long n2, long long k) {
    if (n1 < 0 || n2 < 0 || k < 0) throw montesinos_error("negative surgery data");
    return k * n1 * n2;
}

long long added_triple_points_vertical(long long n1, long long n2, long long k) {
    return added_triple_points_horizontal(n1, n2, k);
}

long long added_triple_points_concurrent(const surgery_system& S, const std::vector<long long>& k, bool halved) {
    S.validate();
    if (k.size() != S.n.size()) throw montesinos_error("coefficient vector size mismatch");
    for (long long v : k)
        if (v < 0) throw montesinos_error("negative surgery coefficient");
    auto C = S.matrix_c();
    auto d = S.vector_d();
    long long total = 0;
    for (size_t i = 0; i < k.size(); ++i) {
        long long row = d[i];
        for (size_t j = 0; j < k.size(); ++j) row += C[i][j] * k[j];
        total += k[i] * row;
    }
    if (!halved) return total;
    if (total % 2 != 0) throw montesinos_error("halved triple point count is not an integer");
    return total / 2;
}

void montesinos_params::validate() const {
    if (p.size() < 3) throw montesinos_error("need at least 3 parameters");
    for (long long v : p)
        if (v < 2) throw montesinos_error("parameters must be >= 2");
}

rational euler_e(const montesinos_params& P) {
    P.validate();
    rational e(2 - static_cast<long long>(P.p.size()), 1);
    for (long long v : P.p) e = e + rational(1, v);
    return e;
}

montesinos_params canonicalize(const montesinos_params& P) {
    P.validate();
    const size_t n = P.p.size();
    std::vector<long long> best = P.p;
    auto consider = [&](std::vector<long long> v) {
        if (v < best) best = v;
    };
    std::vector<long long> cur = P.p;
    for (size_t r = 0; r < n; ++r) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        consider(cur);
        std::vector<long long> rev(cur.rbegin(), cur.rend());
        consider(rev);
    }
    return {best};
}

triangulation_stats predict_stats(const montesinos_params& P) {
    P.validate();
    rational e = euler_e(P);
    if (!(e < rational(0)))
        throw montesinos_error("not Anosov-admissible: e = " + e.str() + " >= 0");
    const size_t n = P.p.size();
    triangulation_stats st;
    if (n == 3) {
        auto p = canonicalize(P).p; // p1 <= p2 <= p3
        if (p[0] == 2 && p[1] == 3) {
            // case 1: p3 > 6
            long long k = p[2] - 6;
            st.tets = 2 * k + 1;
            st.blue = 2 * k;
            st.red = 1;
        } else if (p[0] == 2) {
            // case 2: (p2,p3) > (4,4)
            long long k1 = p[1] - 4, k2 = p[2] - 4;
            st.blue = k1 * k2 + 2 * k1 + 2 * k2;
            st.red = 2;
            st.tets = st.blue + st.red;
        } else {
            // case 3: (p1,p2,p3) > (3,3,3)
            long long k1 = p[0] - 3, k2 = p[1] - 3, k3 = p[2] - 3;
            st.blue = k1 * k2 + k1 * k3 + k2 * k3 + 2 * (k1 + k2 + k3);
            st.red = 3;
            st.tets = st.blue + st.red;
        }
        return st;
    }
    // n >= 4: k_i = p_i - 2, sums over ordered pairs with cyclic |i-j|
    const long long nn = static_cast<long long>(n);
    std::vector<long long> k(n);
    for (size_t i = 0; i < n; ++i) k[i] = P.p[i] - 2;
    long long adj = 0, far = 0, sum = 0;
    for (size_t i = 0; i < n; ++i) {
        sum += k[i];
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            size_t diff = i > j ? i - j : j - i;
            size_t dist = std::min(diff, n - diff);
            if (dist == 1)
                adj += k[i] * k[j];
            else
                far += k[i] * k[j];
        }
    }
    st.blue = adj / 2 + far + 2 * (nn - 3) * sum + nn * (nn - 4);
    st.red = nn;
    st.tets = st.blue + st.red;
    return st;
}

std::vector<rational> montesinos_label(const montesinos_params& P) {
    P.validate();
    std::vector<rational> out;
    out.push_back(rational(1, P.p[0]) + rational(1));
    for (size_t i = 1; i < P.p.size(); ++i) out.push_back(rational(1, P.p[i]) - rational(1));
    return out;
}

} // namespace veer
