#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bignum.hpp"

namespace f4aut {

using Oct = std::array<int64_t, 8>;  // coordinates in the Coxeter basis {1,e1,e2,e3,h1,h2,h3,h4}
using OctE2 = std::array<int64_t, 8>;  // doubled coordinates in the basis {1,e1,...,e7}

// Multiplication and conversion data for Coxeter's integral octonion order.
// The structure constants are generated from the e-relations, not hand-typed.
class OctonionAlgebra {
public:
    // c[i][j] = Coxeter coordinates of b_i * b_j
    std::array<std::array<Oct, 8>, 8> table{};
    std::array<OctE2, 8> basis_e2{};  // doubled e-coordinates of the Coxeter basis
    std::array<std::array<int64_t, 8>, 8> conj_mat{};  // conjugation on Coxeter coords
    std::array<std::array<int64_t, 8>, 8> gram{};      // <b_i, b_j> = Tr(b_i conj(b_j)); the E8 form

    static const OctonionAlgebra& get() {
        static const OctonionAlgebra alg;
        return alg;
    }

    // product in the ambient doubled e-coordinates: returns e-product of two
    // doubled vectors (doubled(x)*doubled(y) = 4 x y, i.e. 2*doubled(xy))
    static OctE2 e2_mul(const OctE2& x, const OctE2& y) {
        OctE2 r{};
        for (int i = 0; i < 8; ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < 8; ++j) {
                if (!y[j]) continue;
                auto [k, sign] = e_basis_mul(i, j);
                r[k] += sign * x[i] * y[j];
            }
        }
        return r;
    }

    Oct mul(const Oct& x, const Oct& y) const {
        Oct r{};
        for (int i = 0; i < 8; ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < 8; ++j) {
                if (!y[j]) continue;
                for (int k = 0; k < 8; ++k) r[k] += x[i] * y[j] * table[i][j][k];
            }
        }
        return r;
    }

    Oct conj(const Oct& x) const {
        Oct r{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) r[i] += conj_mat[i][j] * x[j];
        return r;
    }

    int64_t norm(const Oct& x) const {
        int64_t q2 = 0;  // = 2 N(x)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) q2 += x[i] * gram[i][j] * x[j];
        if (q2 % 2) throw std::logic_error("octonion norm not integral");
        return q2 / 2;
    }

    int64_t trace(const Oct& x) const {
        OctE2 d = to_e2(x);
        return d[0];  // Tr = 2 * real part; real part = d[0]/2
    }

    OctE2 to_e2(const Oct& x) const {
        OctE2 r{};
        for (int j = 0; j < 8; ++j)
            for (int i = 0; i < 8; ++i) r[i] += basis_e2[j][i] * x[j];
        return r;
    }

    // Tr(xyz), trace-associative so the bracketing is immaterial.
    int64_t trace3(const Oct& x, const Oct& y, const Oct& z) const {
        Oct xy = mul(x, y);
        Oct xyz = mul(xy, z);
        return trace(xyz);
    }

    // all 240 unit octonions (N = 1)
    const std::vector<Oct>& roots() const { return roots_; }

private:
    std::vector<Oct> roots_;

    static std::pair<int, int> e_basis_mul(int i, int j) {
        // basis elements 0 = 1, 1..7 = e1..e7; Fano lines (i, i+1, i+3) mod 7
        if (i == 0) return {j, 1};
        if (j == 0) return {i, 1};
        if (i == j) return {0, -1};
        static const auto line = [] {
            std::array<std::array<std::pair<int, int>, 8>, 8> t{};
            auto wrap = [](int a) { return (a - 1) % 7 + 1; };
            for (int a = 1; a <= 7; ++a) {
                int b = wrap(a + 1), c = wrap(a + 3);
                t[a][b] = {c, 1};
                t[b][a] = {c, -1};
                t[b][c] = {a, 1};
                t[c][b] = {a, -1};
                t[c][a] = {b, 1};
                t[a][c] = {b, -1};
            }
            return t;
        }();
        return line[i][j];
    }

    OctonionAlgebra() {
        basis_e2[0] = {2, 0, 0, 0, 0, 0, 0, 0};
        basis_e2[1] = {0, 2, 0, 0, 0, 0, 0, 0};
        basis_e2[2] = {0, 0, 2, 0, 0, 0, 0, 0};
        basis_e2[3] = {0, 0, 0, 2, 0, 0, 0, 0};
        basis_e2[4] = {1, 1, 1, 0, 1, 0, 0, 0};  // h1 = (1+e1+e2+e4)/2
        basis_e2[5] = {1, 1, 0, 1, 0, 0, 0, 1};  // h2 = (1+e1+e3+e7)/2
        basis_e2[6] = {1, 1, 0, 0, 0, 1, 1, 0};  // h3 = (1+e1+e5+e6)/2
        basis_e2[7] = {0, 1, 1, 1, 0, 1, 0, 0};  // h4 = (e1+e2+e3+e5)/2

        // invert the basis matrix over Q once
        std::array<std::array<Rat, 8>, 8> binv = invert_basis();

        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                OctE2 prod2 = e2_mul(basis_e2[i], basis_e2[j]);  // = 2 doubled(b_i b_j)
                OctE2 d{};
                for (int k = 0; k < 8; ++k) {
                    if (prod2[k] % 2) throw std::logic_error("octonion product not in the order");
                    d[k] = prod2[k] / 2;
                }
                table[i][j] = solve_coords(binv, d);
            }

        for (int j = 0; j < 8; ++j) {
            OctE2 c = basis_e2[j];
            for (int k = 1; k < 8; ++k) c[k] = -c[k];
            Oct coord = solve_coords(binv, c);
            for (int i = 0; i < 8; ++i) conj_mat[i][j] = coord[i];
        }

        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                int64_t dot = 0;
                for (int k = 0; k < 8; ++k) dot += basis_e2[i][k] * basis_e2[j][k];
                if (dot % 2) throw std::logic_error("octonion gram not integral");
                gram[i][j] = dot / 2;  // <x,y> = 2*(e-dot of true coords)
            }

        // norm-1 elements: doubled coordinates with sum of squares 4
        enumerate_roots();
        if (roots_.size() != 240) throw std::logic_error("unit octonion count != 240");
    }

    std::array<std::array<Rat, 8>, 8> invert_basis() const {
        std::array<std::array<Rat, 8>, 16> aug{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) aug[j][i] = Rat(basis_e2[i][j]);  // rows = e-coords
        std::array<std::array<Rat, 8>, 8> a{}, inv{};
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) a[i][j] = aug[i][j];
            inv[i][i] = 1;
        }
        for (int col = 0; col < 8; ++col) {
            int piv = col;
            while (a[piv][col] == 0) ++piv;
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
            Rat p = a[col][col];
            for (int j = 0; j < 8; ++j) {
                a[col][j] /= p;
                inv[col][j] /= p;
            }
            for (int r = 0; r < 8; ++r) {
                if (r == col || a[r][col] == 0) continue;
                Rat f = a[r][col];
                for (int j = 0; j < 8; ++j) {
                    a[r][j] -= f * a[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
        return inv;
    }

    static Oct solve_coords(const std::array<std::array<Rat, 8>, 8>& binv, const OctE2& d) {
        Oct c{};
        for (int i = 0; i < 8; ++i) {
            Rat v(0);
            for (int j = 0; j < 8; ++j) v += binv[i][j] * Rat(d[j]);
            if (!is_integer(v)) throw std::logic_error("octonion coordinates not integral");
            c[i] = (int64_t)numerator(v);
        }
        return c;
    }

    void enumerate_roots() {
        // N(x) = 1 means the doubled e-coordinates satisfy sum d_i^2 = 4:
        // either a single +-2 or four +-1 entries; keep those in the order.
        std::array<std::array<Rat, 8>, 8> binv = invert_basis();
        auto push = [&](const OctE2& d) {
            try {
                roots_.push_back(solve_coords(binv, d));
            } catch (const std::logic_error&) {
                // candidate lies outside the Coxeter order
            }
        };
        OctE2 d{};
        for (int i = 0; i < 8; ++i)
            for (int s : {2, -2}) {
                d.fill(0);
                d[i] = s;
                push(d);
            }
        for (int pos = 0; pos < 256; ++pos) {
            if (__builtin_popcount(pos) != 4) continue;
            for (int signs = 0; signs < 16; ++signs) {
                d.fill(0);
                int bit = 0;
                for (int i = 0; i < 8; ++i)
                    if (pos >> i & 1) d[i] = (signs >> bit++ & 1) ? 1 : -1;
                push(d);
            }
        }
    }
};

inline Oct oct_mul(const Oct& x, const Oct& y) { return OctonionAlgebra::get().mul(x, y); }
inline Oct oct_conj(const Oct& x) { return OctonionAlgebra::get().conj(x); }
inline int64_t oct_norm(const Oct& x) { return OctonionAlgebra::get().norm(x); }

}  // namespace f4aut
