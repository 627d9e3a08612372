#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace veer {

// Permutation of {0,1,2,3}. Index space is the lexicographic ordering of S4,
// which is what the isosig alphabet uses.
struct perm4 {
    std::array<uint8_t, 4> im{0, 1, 2, 3};

    static perm4 identity() { return perm4{}; }

    uint8_t operator[](int i) const { return im[i]; }

    perm4 inverse() const {
        perm4 r;
        for (int i = 0; i < 4; ++i) r.im[im[i]] = i;
        return r;
    }

    // composition: (a*b)(i) = a(b(i))
    friend perm4 operator*(const perm4& a, const perm4& b) {
        perm4 r;
        for (int i = 0; i < 4; ++i) r.im[i] = a.im[b.im[i]];
        return r;
    }

    friend bool operator==(const perm4& a, const perm4& b) { return a.im == b.im; }
    friend bool operator!=(const perm4& a, const perm4& b) { return a.im != b.im; }

    int sign() const {
        int s = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (im[i] > im[j]) s = -s;
        return s;
    }

    // lexicographic rank in S4, 0..23
    int lex_index() const {
        int idx = 0;
        for (int i = 0; i < 4; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < 4; ++j)
                if (im[j] < im[i]) ++smaller;
            int fact = 1;
            for (int k = 2; k <= 3 - i; ++k) fact *= k;
            idx += smaller * fact;
        }
        return idx;
    }

    static perm4 from_lex_index(int idx) {
        if (idx < 0 || idx >= 24) throw std::out_of_range("perm4 index " + std::to_string(idx));
        std::array<uint8_t, 4> pool{0, 1, 2, 3};
        perm4 r;
        int fact[4] = {6, 2, 1, 1};
        int avail = 4;
        for (int i = 0; i < 4; ++i) {
            int f = (i < 3) ? fact[i] : 1;
            int k = idx / f;
            idx %= f;
            r.im[i] = pool[k];
            for (int j = k; j < avail - 1; ++j) pool[j] = pool[j + 1];
            --avail;
        }
        return r;
    }
};

} // namespace veer
