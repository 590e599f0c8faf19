#pragma once

#include <array>
#include <optional>
#include <vector>

#include "octonion.hpp"

namespace f4aut {

// Point of the rank-27 integral exceptional Jordan lattice in the basis
// (E1, E2, E3, F1(b0..b7), F2(b0..b7), F3(b0..b7)) with b = Coxeter basis.
using Jor = std::array<int64_t, 27>;
using JorRat = std::array<Rat, 27>;
using Mat27 = std::vector<std::array<int64_t, 27>>;  // 27 rows

struct Violation : std::runtime_error {
    explicit Violation(const std::string& what) : std::runtime_error(what) {}
};

inline Jor jordan_element(int64_t a, int64_t b, int64_t c, const Oct& x, const Oct& y, const Oct& z) {
    Jor v{};
    v[0] = a;
    v[1] = b;
    v[2] = c;
    for (int i = 0; i < 8; ++i) {
        v[3 + i] = x[i];
        v[11 + i] = y[i];
        v[19 + i] = z[i];
    }
    return v;
}

inline Jor jordan_E(int i) {
    Jor v{};
    v[i] = 1;
    return v;
}
inline Jor jordan_F(int i, const Oct& x) {
    Jor v{};
    for (int j = 0; j < 8; ++j) v[3 + 8 * i + j] = x[j];
    return v;
}

inline Jor jordan_identity() {
    Jor v{};
    v[0] = v[1] = v[2] = 1;
    return v;
}

// The polarization E = [2,2,2; beta, beta, beta], beta = (-1 + e1 + ... + e7)/2.
inline const Jor& jordan_polarization_E() {
    static const Jor e = [] {
        const auto& alg = OctonionAlgebra::get();
        // beta has doubled e-coordinates (-1, 1, 1, 1, 1, 1, 1, 1)
        OctE2 beta2{-1, 1, 1, 1, 1, 1, 1, 1};
        // beta = h4 + h3 + h2 - 1 - e1 + ... solve through the algebra helper:
        // reuse the root solver by asking the algebra for coordinates
        Oct beta{};
        {
            // solve sum c_i basis = beta2 by Gaussian elimination over Q
            std::array<std::array<Rat, 8>, 8> m{};
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) m[j][i] = Rat(alg.basis_e2[i][j]);
            std::array<Rat, 8> rhs{};
            for (int j = 0; j < 8; ++j) rhs[j] = Rat(beta2[j]);
            for (int col = 0; col < 8; ++col) {
                int piv = col;
                while (m[piv][col] == 0) ++piv;
                std::swap(m[piv], m[col]);
                std::swap(rhs[piv], rhs[col]);
                Rat p = m[col][col];
                for (int j = 0; j < 8; ++j) m[col][j] /= p;
                rhs[col] /= p;
                for (int r = 0; r < 8; ++r) {
                    if (r == col || m[r][col] == 0) continue;
                    Rat f = m[r][col];
                    for (int j = 0; j < 8; ++j) m[r][j] -= f * m[col][j];
                    rhs[r] -= f * rhs[col];
                }
            }
            for (int i = 0; i < 8; ++i) {
                if (!is_integer(rhs[i])) throw std::logic_error("beta not in the Coxeter order");
                beta[i] = (int64_t)numerator(rhs[i]);
            }
        }
        return jordan_element(2, 2, 2, beta, beta, beta);
    }();
    return e;
}

// A o B = (AB + BA)/2 through octonionic 3x3 matrix multiplication; the
// result can be half-integral, hence rational output coordinates.
inline JorRat jordan_mul(const Jor& A, const Jor& B) {
    const auto& alg = OctonionAlgebra::get();
    auto oct_of = [&](const Jor& v, int block) {
        Oct o{};
        for (int i = 0; i < 8; ++i) o[i] = v[3 + 8 * block + i];
        return o;
    };
    // matrix entries as (real numerator over 2-free) pairs is awkward; use the
    // trace-closed formula for the Jordan product of Hermitian matrices:
    //   A = [a1,a2,a3; x1,x2,x3], entries x_i placed as in the paper.
    // (A o B) has diagonal  a_i b_i + (<x_j, u_j> + <x_k, u_k>)/2   ({i,j,k} = {1,2,3})
    // and off-diagonal block i:  (a_j + b_j + a_k + b_k)/2 * ? -- safer to
    // multiply the actual octonion matrices; do that with exact rationals.
    std::array<std::array<std::array<Rat, 8>, 3>, 3> MA{}, MB{};
    auto put = [&](std::array<std::array<std::array<Rat, 8>, 3>, 3>& M, const Jor& v) {
        Oct x = oct_of(v, 0), y = oct_of(v, 1), z = oct_of(v, 2);
        auto set = [&](int r, int c, const Oct& o) {
            for (int i = 0; i < 8; ++i) M[r][c][i] = Rat(o[i]);
        };
        Oct a{}, b{}, cc{};
        a[0] = v[0];
        b[0] = v[1];
        cc[0] = v[2];
        set(0, 0, a);
        set(1, 1, b);
        set(2, 2, cc);
        set(0, 1, z);
        set(1, 0, alg.conj(z));
        set(0, 2, alg.conj(y));
        set(2, 0, y);
        set(1, 2, x);
        set(2, 1, alg.conj(x));
    };
    put(MA, A);
    put(MB, B);
    auto mulq = [&](const std::array<Rat, 8>& u, const std::array<Rat, 8>& v) {
        std::array<Rat, 8> r{};
        for (int i = 0; i < 8; ++i) {
            if (u[i] == 0) continue;
            for (int j = 0; j < 8; ++j) {
                if (v[j] == 0) continue;
                for (int k = 0; k < 8; ++k)
                    if (alg.table[i][j][k]) r[k] += u[i] * v[j] * Rat(alg.table[i][j][k]);
            }
        }
        return r;
    };
    std::array<std::array<std::array<Rat, 8>, 3>, 3> P{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            for (int k = 0; k < 3; ++k) {
                auto ab = mulq(MA[r][k], MB[k][c]);
                auto ba = mulq(MB[r][k], MA[k][c]);
                for (int i = 0; i < 8; ++i) P[r][c][i] += (ab[i] + ba[i]) / 2;
            }
    JorRat out{};
    out[0] = P[0][0][0];
    out[1] = P[1][1][0];
    out[2] = P[2][2][0];
    for (int i = 0; i < 8; ++i) {
        out[3 + i] = P[1][2][i];   // x
        out[11 + i] = P[2][0][i];  // y
        out[19 + i] = P[0][1][i];  // z
    }
    return out;
}

// det(A) = abc + Tr(xyz) - a N(x) - b N(y) - c N(z); exact integer on J_Z.
inline int64_t det3(const Jor& v) {
    const auto& alg = OctonionAlgebra::get();
    Oct x{}, y{}, z{};
    for (int i = 0; i < 8; ++i) {
        x[i] = v[3 + i];
        y[i] = v[11 + i];
        z[i] = v[19 + i];
    }
    int64_t a = v[0], b = v[1], c = v[2];
    return a * b * c + alg.trace3(x, y, z) - a * alg.norm(x) - b * alg.norm(y) - c * alg.norm(z);
}

// 2*(A,B,C), the doubled polarization of det; integer-valued.
inline int64_t trilinear2(const Jor& A, const Jor& B, const Jor& C) {
    auto add = [](const Jor& u, const Jor& v) {
        Jor r{};
        for (int i = 0; i < 27; ++i) r[i] = u[i] + v[i];
        return r;
    };
    Jor ab = add(A, B), bc = add(B, C), ca = add(C, A), abc = add(ab, C);
    return det3(abc) - det3(ab) - det3(bc) - det3(ca) + det3(A) + det3(B) + det3(C);
}

// B_Q(A,B) = Tr(A o B): the integer bilinear form of Q(A) = Tr(A o A)/2.
inline int64_t bilinear_Q(const Jor& A, const Jor& B) {
    const auto& alg = OctonionAlgebra::get();
    int64_t s = A[0] * B[0] + A[1] * B[1] + A[2] * B[2];
    for (int blk = 0; blk < 3; ++blk) {
        Oct u{}, v{};
        for (int i = 0; i < 8; ++i) {
            u[i] = A[3 + 8 * blk + i];
            v[i] = B[3 + 8 * blk + i];
        }
        int64_t q2 = 0;  // <u,v> = Tr(u conj(v))
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) q2 += u[i] * alg.gram[i][j] * v[j];
        s += q2;
    }
    return s;
}

// <A,B>_E = (A,E,E)(B,E,E) - 2(A,B,E).
inline int64_t bilinear_E(const Jor& A, const Jor& B) {
    const Jor& E = jordan_polarization_E();
    int64_t aee2 = trilinear2(A, E, E), bee2 = trilinear2(B, E, E);
    if (aee2 % 2 || bee2 % 2) throw std::logic_error("trilinear (.,E,E) not integral");
    return (aee2 / 2) * (bee2 / 2) - trilinear2(A, B, E);
}

// The symmetric tensor 2*(b_i, b_j, b_k) over the 27-element basis.
class TrilinearTensor {
public:
    static const TrilinearTensor& get() {
        static const TrilinearTensor t;
        return t;
    }
    int64_t at(int i, int j, int k) const { return v_[(i * 27 + j) * 27 + k]; }
    const std::vector<int64_t>& flat() const { return v_; }

private:
    std::vector<int64_t> v_;
    TrilinearTensor() : v_(27 * 27 * 27) {
        std::array<Jor, 27> basis{};
        for (int i = 0; i < 27; ++i) basis[i][i] = 1;
        for (int i = 0; i < 27; ++i)
            for (int j = i; j < 27; ++j)
                for (int k = j; k < 27; ++k) {
                    int64_t t = trilinear2(basis[i], basis[j], basis[k]);
                    int idx[3] = {i, j, k};
                    std::sort(idx, idx + 3);
                    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
                    for (auto& p : perms)
                        v_[(idx[p[0]] * 27 + idx[p[1]]) * 27 + idx[p[2]]] = t;
                }
    }
};

// Full polarization check: g preserves the cubic form iff the transformed
// trilinear tensor is unchanged, plus g fixes the designated polarization.
inline std::optional<std::string> check_group_element(const Mat27& g, const Jor& polarization) {
    Jor im{};
    for (int i = 0; i < 27; ++i) {
        int64_t s = 0;
        for (int j = 0; j < 27; ++j) s += g[(size_t)i][(size_t)j] * polarization[j];
        im[i] = s;
    }
    if (im != polarization) return "polarization not fixed";
    const auto& T = TrilinearTensor::get().flat();
    std::vector<int64_t> u1(27 * 27 * 27), u2(27 * 27 * 27), u3(27 * 27 * 27);
    // contract one index at a time with g
    for (int a = 0; a < 27; ++a)
        for (int j = 0; j < 27; ++j)
            for (int k = 0; k < 27; ++k) {
                int64_t s = 0;
                for (int i = 0; i < 27; ++i) s += T[(i * 27 + j) * 27 + k] * g[(size_t)i][(size_t)a];
                u1[(a * 27 + j) * 27 + k] = s;
            }
    for (int a = 0; a < 27; ++a)
        for (int b = 0; b < 27; ++b)
            for (int k = 0; k < 27; ++k) {
                int64_t s = 0;
                for (int j = 0; j < 27; ++j) s += u1[(a * 27 + j) * 27 + k] * g[(size_t)j][(size_t)b];
                u2[(a * 27 + b) * 27 + k] = s;
            }
    for (int a = 0; a < 27; ++a)
        for (int b = 0; b < 27; ++b)
            for (int c = 0; c < 27; ++c) {
                int64_t s = 0;
                for (int k = 0; k < 27; ++k) s += u2[(a * 27 + b) * 27 + k] * g[(size_t)k][(size_t)c];
                u3[(a * 27 + b) * 27 + c] = s;
            }
    for (int a = 0; a < 27; ++a)
        for (int b = 0; b < 27; ++b)
            for (int c = 0; c < 27; ++c)
                if (u3[(a * 27 + b) * 27 + c] != T[(a * 27 + b) * 27 + c])
                    return "cubic form not preserved at basis triple (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")";
    return std::nullopt;
}

inline void verify_group_element(const Mat27& g, const Jor& polarization) {
    if (auto err = check_group_element(g, polarization)) throw Violation(*err);
}

namespace detail {

inline Mat27 block_map(const std::array<std::array<int64_t, 8>, 8>& f1,
                       const std::array<std::array<int64_t, 8>, 8>& f2,
                       const std::array<std::array<int64_t, 8>, 8>& f3) {
    Mat27 g(27);
    for (int i = 0; i < 3; ++i) g[(size_t)i][(size_t)i] = 1;
    for (int blk = 0; blk < 3; ++blk) {
        const auto& f = blk == 0 ? f1 : blk == 1 ? f2 : f3;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) g[(size_t)(3 + 8 * blk + i)][(size_t)(3 + 8 * blk + j)] = f[i][j];
    }
    return g;
}

inline std::array<std::array<int64_t, 8>, 8> oct_linear(const std::function<Oct(const Oct&)>& f) {
    std::array<std::array<int64_t, 8>, 8> m{};
    for (int j = 0; j < 8; ++j) {
        Oct e{};
        e[j] = 1;
        Oct im = f(e);
        for (int i = 0; i < 8; ++i) m[i][j] = im[i];
    }
    return m;
}

}  // namespace detail

// Generators of Aut(J_Z, det, I): the isotopy triples of the 240 unit
// octonions, the permutation realisation of S3, and the central triple.
inline std::vector<Mat27> generators_model_I() {
    const auto& alg = OctonionAlgebra::get();
    std::vector<Mat27> gens;
    for (const Oct& alpha : alg.roots()) {
        Oct abar = alg.conj(alpha);
        auto l = detail::oct_linear([&](const Oct& x) { return alg.mul(abar, x); });
        auto r = detail::oct_linear([&](const Oct& y) { return alg.mul(y, abar); });
        auto b = detail::oct_linear([&](const Oct& z) { return alg.mul(alpha, alg.mul(z, alpha)); });
        gens.push_back(detail::block_map(l, r, b));
    }
    auto conj_m = detail::oct_linear([&](const Oct& x) { return alg.conj(x); });
    std::array<std::array<int64_t, 8>, 8> id{}, neg{};
    for (int i = 0; i < 8; ++i) {
        id[i][i] = 1;
        neg[i][i] = -1;
    }
    // g_(12): [a,b,c; x,y,z] -> [b,a,c; conj y, conj x, conj z]
    {
        Mat27 g(27);
        g[0][1] = g[1][0] = g[2][2] = 1;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                g[(size_t)(3 + i)][(size_t)(11 + j)] = conj_m[i][j];
                g[(size_t)(11 + i)][(size_t)(3 + j)] = conj_m[i][j];
                g[(size_t)(19 + i)][(size_t)(19 + j)] = conj_m[i][j];
            }
        gens.push_back(std::move(g));
    }
    // g_(123) with sigma(1)=2: [a,b,c; x,y,z] -> [c,a,b; z,x,y]
    {
        Mat27 g(27);
        g[0][2] = g[1][0] = g[2][1] = 1;
        for (int i = 0; i < 8; ++i) {
            g[(size_t)(3 + i)][(size_t)(19 + i)] = 1;
            g[(size_t)(11 + i)][(size_t)(3 + i)] = 1;
            g[(size_t)(19 + i)][(size_t)(11 + i)] = 1;
        }
        gens.push_back(std::move(g));
    }
    gens.push_back(detail::block_map(neg, neg, id));
    return gens;
}

}  // namespace f4aut
