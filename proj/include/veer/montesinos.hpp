#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace veer {

// exact rational, always reduced, denominator > 0
struct rational {
    long long num = 0, den = 1;
    rational() = default;
    rational(long long n, long long d = 1);
    friend rational operator+(rational a, rational b);
    friend rational operator-(rational a, rational b);
    friend bool operator==(const rational& a, const rational& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(const rational& a, const rational& b);
    std::string str() const;
};

// (n_i, m_i, q_ij) data of a system of equivariant connecting annuli, with the
// derived C (c_ij = q_ij n_i n_j / 4) and d (d_i = n_i m_i)
struct surgery_system {
    std::vector<long long> n, m;
    std::vector<std::vector<long long>> q; // symmetric, zero diagonal
    void validate() const;
    std::vector<std::vector<long long>> matrix_c() const;
    std::vector<long long> vector_d() const;
};

long long added_triple_points_horizontal(long long n1, long long n2, long long k);
long long added_triple_points_vertical(long long n1, long long n2, long long k);
// k^T (C k + d), halved for the quotient under the involution; throws if the
// halved count is not an integer
long long added_triple_points_concurrent(const surgery_system& S, const std::vector<long long>& k, bool halved);

struct montesinos_params {
    std::vector<long long> p; // each >= 2, at least 3 entries
    void validate() const;
};

rational euler_e(const montesinos_params& P);

struct triangulation_stats {
    long long tets = 0, blue = 0, red = 0;
    friend bool operator==(const triangulation_stats& a, const triangulation_stats& b) {
        return a.tets == b.tets && a.blue == b.blue && a.red == b.red;
    }
};

// tetrahedron/blue/red counts of the veering triangulation on the Montesinos
// link complement; cases dispatch on the canonicalized parameters for n = 3,
// general formula with cyclic distances for n >= 4. Requires e < 0.
triangulation_stats predict_stats(const montesinos_params& P);

// lexicographic minimum over cyclic rotations and reversals
montesinos_params canonicalize(const montesinos_params& P);

// M(1/p1 + 1, 1/p2 - 1, ..., 1/pn - 1)
std::vector<rational> montesinos_label(const montesinos_params& P);

struct montesinos_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace veer
