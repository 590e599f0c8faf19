#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "jordan.hpp"
#include "torsion.hpp"

namespace f4aut {

namespace modp {

inline int64_t pow_mod(int64_t b, int64_t e, int64_t p) {
    int64_t r = 1;
    b %= p;
    if (b < 0) b += p;
    while (e) {
        if (e & 1) r = (__int128)r * b % p;
        b = (__int128)b * b % p;
        e >>= 1;
    }
    return r;
}
inline int64_t inv_mod(int64_t a, int64_t p) { return pow_mod(a, p - 2, p); }

// value known to satisfy |v| <= bound < p/2, recovered from its residue
inline int64_t recover_symmetric(int64_t r, int64_t p) { return r > p / 2 ? r - p : r; }

}  // namespace modp

// 27x27 integer matrices flattened row-major.
using Flat27 = std::array<int64_t, 27 * 27>;

inline Flat27 flat_from(const Mat27& m) {
    Flat27 f{};
    for (int i = 0; i < 27; ++i)
        for (int j = 0; j < 27; ++j) f[(size_t)(27 * i + j)] = m[(size_t)i][(size_t)j];
    return f;
}

// The Lie algebra of the det-preserving group (type E6, dimension 78) with an
// exact integer basis: doubled multiplication operators 2 L_a for traceless a
// together with commutators [2L_i, 2L_j], filtered to an independent set.
class DetLieAlgebra {
public:
    static const DetLieAlgebra& get() {
        static const DetLieAlgebra alg;
        return alg;
    }

    const std::vector<Flat27>& basis() const { return basis_; }

    // Exact integer basis of the 52-dimensional stabilizer subalgebra
    // { X : X(e) = 0 } for the given polarization.
    std::vector<Flat27> stabilizer_basis(const Jor& e) const {
        // kernel of the 27 x 78 rational matrix whose columns are X_k(e)
        int n = (int)basis_.size();
        std::vector<std::vector<Rat>> m(27, std::vector<Rat>(n));
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < 27; ++i) {
                int64_t s = 0;
                for (int j = 0; j < 27; ++j) s += basis_[(size_t)k][(size_t)(27 * i + j)] * e[(size_t)j];
                m[(size_t)i][(size_t)k] = Rat(s);
            }
        // row-reduce, track pivot columns
        std::vector<int> pivot_col;
        int row = 0;
        for (int col = 0; col < n && row < 27; ++col) {
            int piv = -1;
            for (int r = row; r < 27; ++r)
                if (m[(size_t)r][(size_t)col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            std::swap(m[(size_t)piv], m[(size_t)row]);
            Rat p = m[(size_t)row][(size_t)col];
            for (int c = 0; c < n; ++c) m[(size_t)row][(size_t)c] /= p;
            for (int r = 0; r < 27; ++r) {
                if (r == row || m[(size_t)r][(size_t)col] == 0) continue;
                Rat f = m[(size_t)r][(size_t)col];
                for (int c = 0; c < n; ++c) m[(size_t)r][(size_t)c] -= f * m[(size_t)row][(size_t)c];
            }
            pivot_col.push_back(col);
            ++row;
        }
        std::vector<bool> is_pivot(n, false);
        for (int c : pivot_col) is_pivot[(size_t)c] = true;
        std::vector<Flat27> out;
        for (int free = 0; free < n; ++free) {
            if (is_pivot[(size_t)free]) continue;
            // kernel vector: coefficient 1 at `free`, solve pivots; clear
            // denominators to get an integer combination
            std::vector<Rat> coeff((size_t)n, Rat(0));
            coeff[(size_t)free] = 1;
            for (size_t r = 0; r < pivot_col.size(); ++r)
                coeff[(size_t)pivot_col[r]] = -m[r][(size_t)free];
            Int lcm = 1;
            for (const Rat& c : coeff) lcm = boost::multiprecision::lcm(lcm, denominator(c));
            Flat27 x{};
            for (int k = 0; k < n; ++k) {
                Rat scaled = coeff[(size_t)k] * Rat(lcm);
                int64_t ck = (int64_t)numerator(scaled);
                if (ck == 0) continue;
                for (int idx = 0; idx < 27 * 27; ++idx) x[(size_t)idx] += ck * basis_[(size_t)k][(size_t)idx];
            }
            out.push_back(x);
        }
        return out;
    }

private:
    std::vector<Flat27> basis_;

    DetLieAlgebra() {
        std::array<Jor, 27> e{};
        for (int i = 0; i < 27; ++i) e[(size_t)i][(size_t)i] = 1;
        // 2 L_a on basis vectors (integer since L has half-integer entries)
        auto twoL = [&](const Jor& a) {
            Flat27 m{};
            for (int j = 0; j < 27; ++j) {
                JorRat col = jordan_mul(a, e[(size_t)j]);
                for (int i = 0; i < 27; ++i) {
                    Rat v = col[(size_t)i] * 2;
                    if (!is_integer(v)) throw std::logic_error("2L not integral");
                    m[(size_t)(27 * i + j)] = (int64_t)numerator(v);
                }
            }
            return m;
        };
        std::vector<Flat27> candidates;
        // traceless multiplications: E1-E2, E2-E3, all F blocks
        {
            Jor d1{}, d2{};
            d1[0] = 1;
            d1[1] = -1;
            d2[1] = 1;
            d2[2] = -1;
            candidates.push_back(twoL(d1));
            candidates.push_back(twoL(d2));
            for (int i = 3; i < 27; ++i) candidates.push_back(twoL(e[(size_t)i]));
        }
        std::vector<Flat27> lmats;
        for (int i = 0; i < 27; ++i) lmats.push_back(twoL(e[(size_t)i]));
        for (int i = 0; i < 27; ++i)
            for (int j = i + 1; j < 27; ++j) {
                Flat27 comm{};
                for (int r = 0; r < 27; ++r)
                    for (int c = 0; c < 27; ++c) {
                        int64_t s = 0;
                        for (int k = 0; k < 27; ++k)
                            s += lmats[(size_t)i][(size_t)(27 * r + k)] * lmats[(size_t)j][(size_t)(27 * k + c)] -
                                 lmats[(size_t)j][(size_t)(27 * r + k)] * lmats[(size_t)i][(size_t)(27 * k + c)];
                        comm[(size_t)(27 * r + c)] = s;
                    }
                candidates.push_back(comm);
            }
        // greedy mod-p independence filter up to dimension 78
        const int64_t p = 2147483629;
        std::vector<std::vector<int64_t>> rows;  // reduced rows
        std::vector<int> lead;
        for (const Flat27& cand : candidates) {
            std::vector<int64_t> v(27 * 27);
            for (int i = 0; i < 27 * 27; ++i) v[(size_t)i] = ((cand[(size_t)i] % p) + p) % p;
            for (size_t r = 0; r < rows.size(); ++r) {
                int64_t f = v[(size_t)lead[r]];
                if (!f) continue;
                for (int i = 0; i < 27 * 27; ++i)
                    v[(size_t)i] = (v[(size_t)i] - (__int128)f * rows[r][(size_t)i]) % p;
            }
            int l = -1;
            for (int i = 0; i < 27 * 27; ++i) {
                v[(size_t)i] = (v[(size_t)i] + p) % p;
                if (l < 0 && v[(size_t)i]) l = i;
            }
            if (l < 0) continue;
            int64_t inv = modp::inv_mod(v[(size_t)l], p);
            for (int i = 0; i < 27 * 27; ++i) v[(size_t)i] = (__int128)v[(size_t)i] * inv % p;
            rows.push_back(std::move(v));
            lead.push_back(l);
            basis_.push_back(cand);
            if (basis_.size() == 78) break;
        }
        if (basis_.size() != 78) throw std::logic_error("det Lie algebra dimension != 78");
        verify_derivation_identity();
    }

    // (X u, v, w) + (u, X v, w) + (u, v, X w) = 0 on all basis triples,
    // checked exactly through the trilinear tensor.
    void verify_derivation_identity() const {
        const auto& T = TrilinearTensor::get().flat();
        for (const Flat27& X : basis_) {
            std::vector<int64_t> u1(27 * 27 * 27, 0);
            for (int a = 0; a < 27; ++a)
                for (int j = 0; j < 27; ++j)
                    for (int k = 0; k < 27; ++k) {
                        int64_t s = 0;
                        for (int i = 0; i < 27; ++i)
                            s += X[(size_t)(27 * i + a)] * T[(size_t)((i * 27 + j) * 27 + k)];
                        u1[(size_t)((a * 27 + j) * 27 + k)] = s;
                    }
            for (int a = 0; a < 27; ++a)
                for (int b = 0; b < 27; ++b)
                    for (int c = 0; c < 27; ++c) {
                        int64_t total = u1[(size_t)((a * 27 + b) * 27 + c)] +
                                        u1[(size_t)((b * 27 + a) * 27 + c)] +
                                        u1[(size_t)((c * 27 + a) * 27 + b)];
                        if (total != 0) throw std::logic_error("derivation identity violated");
                    }
        }
    }
};

// Modular kernel for adjoint traces on the stabilizer subalgebra L_e:
// tr(Ad g | L_e) = sum_{a,b,c,d} K[a,b,c,d] g[b,c] g^{-1}[d,a] with
// K = sum_k dual(D_k) (x) D_k, everything reduced mod p.
class AdTraceKernel {
public:
    AdTraceKernel(const Jor& polarization, int64_t p) : p_(p) {
        auto basis = DetLieAlgebra::get().stabilizer_basis(polarization);
        n_ = (int)basis.size();
        if (n_ != 52) throw std::logic_error("stabilizer subalgebra dimension != 52");
        // Gram of the trace form, exact then reduced
        std::vector<std::vector<Int>> gram((size_t)n_, std::vector<Int>((size_t)n_));
        for (int k = 0; k < n_; ++k)
            for (int l = k; l < n_; ++l) {
                Int s = 0;
                for (int i = 0; i < 27; ++i)
                    for (int j = 0; j < 27; ++j)
                        s += Int(basis[(size_t)k][(size_t)(27 * i + j)]) * basis[(size_t)l][(size_t)(27 * j + i)];
                gram[(size_t)k][(size_t)l] = gram[(size_t)l][(size_t)k] = s;
            }
        std::vector<std::vector<int64_t>> ginv = invert_mod(gram);
        // dual basis entries mod p
        std::vector<std::vector<int64_t>> dual((size_t)n_, std::vector<int64_t>(27 * 27, 0));
        for (int k = 0; k < n_; ++k)
            for (int j = 0; j < n_; ++j) {
                int64_t f = ginv[(size_t)k][(size_t)j];
                if (!f) continue;
                for (int idx = 0; idx < 27 * 27; ++idx) {
                    int64_t add = (__int128)f * (((basis[(size_t)j][(size_t)idx] % p_) + p_) % p_) % p_;
                    dual[(size_t)k][(size_t)idx] = (dual[(size_t)k][(size_t)idx] + add) % p_;
                }
            }
        k_.assign(27 * 27 * 27 * 27, 0);
        for (int k = 0; k < n_; ++k)
            for (int ab = 0; ab < 27 * 27; ++ab) {
                int64_t dk = dual[(size_t)k][(size_t)ab];
                if (!dk) continue;
                for (int cd = 0; cd < 27 * 27; ++cd) {
                    int64_t bk = ((basis[(size_t)k][(size_t)cd] % p_) + p_) % p_;
                    if (!bk) continue;
                    size_t idx = (size_t)ab * (27 * 27) + (size_t)cd;
                    k_[idx] = (int64_t)((k_[idx] + (__int128)dk * bk) % p_);
                }
            }
    }

    int64_t p() const { return p_; }

    // g and ginv as mod-p flattened matrices; returns tr(Ad g | L_e) mod p.
    int64_t trace_mod(const std::vector<int64_t>& g, const std::vector<int64_t>& ginv) const {
        // T1[a][d] = sum_{b,c} K[(a,b),(c,d)] g[b,c]
        std::array<int64_t, 27 * 27> t1{};
        for (int a = 0; a < 27; ++a)
            for (int b = 0; b < 27; ++b) {
                const int64_t* krow = &k_[((size_t)(a * 27 + b)) * (27 * 27)];
                __int128 acc[27];
                for (int d = 0; d < 27; ++d) acc[d] = 0;
                for (int c = 0; c < 27; ++c) {
                    int64_t gv = g[(size_t)(27 * b + c)];
                    if (!gv) continue;
                    const int64_t* kcd = krow + 27 * c;
                    for (int d = 0; d < 27; ++d) acc[d] += (__int128)gv * kcd[d];
                }
                for (int d = 0; d < 27; ++d)
                    t1[(size_t)(27 * a + d)] = (t1[(size_t)(27 * a + d)] + (int64_t)(acc[d] % p_)) % p_;
            }
        __int128 tr = 0;
        for (int a = 0; a < 27; ++a)
            for (int d = 0; d < 27; ++d) tr += (__int128)t1[(size_t)(27 * a + d)] * ginv[(size_t)(27 * d + a)];
        int64_t r = (int64_t)(tr % p_);
        return (r + p_) % p_;
    }

private:
    int64_t p_;
    int n_;
    std::vector<int64_t> k_;

    std::vector<std::vector<int64_t>> invert_mod(const std::vector<std::vector<Int>>& gram) const {
        int n = n_;
        std::vector<std::vector<int64_t>> a((size_t)n, std::vector<int64_t>((size_t)(2 * n), 0));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Int r = gram[(size_t)i][(size_t)j] % p_;
                if (r < 0) r += p_;
                a[(size_t)i][(size_t)j] = (int64_t)r;
            }
            a[(size_t)i][(size_t)(n + i)] = 1;
        }
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (a[(size_t)r][(size_t)col]) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw std::logic_error("trace form singular mod p; pick another prime");
            std::swap(a[(size_t)piv], a[(size_t)col]);
            int64_t inv = modp::inv_mod(a[(size_t)col][(size_t)col], p_);
            for (int j = 0; j < 2 * n; ++j) a[(size_t)col][(size_t)j] = (__int128)a[(size_t)col][(size_t)j] * inv % p_;
            for (int r = 0; r < n; ++r) {
                if (r == col || !a[(size_t)r][(size_t)col]) continue;
                int64_t f = a[(size_t)r][(size_t)col];
                for (int j = 0; j < 2 * n; ++j) {
                    a[(size_t)r][(size_t)j] =
                        (int64_t)(((a[(size_t)r][(size_t)j] - (__int128)f * a[(size_t)col][(size_t)j]) % p_ + p_) % p_);
                }
            }
        }
        std::vector<std::vector<int64_t>> inv((size_t)n, std::vector<int64_t>((size_t)n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) inv[(size_t)i][(size_t)j] = a[(size_t)i][(size_t)(n + j)];
        return inv;
    }
};

enum class Model { I, E };

// Fingerprint machinery for one integral model: characteristic-polynomial
// coefficients from power traces, adjoint trace from the stabilizer kernel.
class Fingerprinter {
public:
    explicit Fingerprinter(Model model)
        : pol_(model == Model::I ? jordan_identity() : jordan_polarization_E()),
          k1_(pol_, 2147483629),
          k2_(pol_, 2147483563) {}

    const Jor& polarization() const { return pol_; }

    InvariantQuadruple fingerprint(const Mat27& g) const {
        std::vector<int64_t> gm = mod_flat(g, k1_.p());
        std::vector<int64_t> gi = invert_mod_matrix(gm, k1_.p());
        InvariantQuadruple q = from_power_traces(g);
        q.ad_trace = ad_trace(gm, gi);
        return q;
    }

    // mod-p flattened input (both primes share the matrix entries via lift)
    int64_t ad_trace(const std::vector<int64_t>& g_mod_p1, const std::vector<int64_t>& ginv_mod_p1) const {
        int64_t r1 = k1_.trace_mod(g_mod_p1, ginv_mod_p1);
        return modp::recover_symmetric(r1, k1_.p());
    }

    // slow-path double check against the second prime
    int64_t ad_trace_checked(const Mat27& g) const {
        std::vector<int64_t> g1 = mod_flat(g, k1_.p()), i1 = invert_mod_matrix(g1, k1_.p());
        std::vector<int64_t> g2 = mod_flat(g, k2_.p()), i2 = invert_mod_matrix(g2, k2_.p());
        int64_t t1 = modp::recover_symmetric(k1_.trace_mod(g1, i1), k1_.p());
        int64_t t2 = modp::recover_symmetric(k2_.trace_mod(g2, i2), k2_.p());
        if (t1 != t2) throw std::logic_error("adjoint trace prime mismatch");
        return t1;
    }

    static InvariantQuadruple from_power_traces(const Mat27& g) {
        // e1 = a26, e2 = a25, e3 = a24 under the paper's sign convention
        auto mul = [](const Mat27& a, const Mat27& b) {
            Mat27 r(27);
            for (int i = 0; i < 27; ++i)
                for (int k = 0; k < 27; ++k) {
                    int64_t v = a[(size_t)i][(size_t)k];
                    if (!v) continue;
                    for (int j = 0; j < 27; ++j) r[(size_t)i][(size_t)j] += v * b[(size_t)k][(size_t)j];
                }
            return r;
        };
        Mat27 g2 = mul(g, g), g3 = mul(g2, g);
        int64_t p1 = 0, p2 = 0, p3 = 0;
        for (int i = 0; i < 27; ++i) {
            p1 += g[(size_t)i][(size_t)i];
            p2 += g2[(size_t)i][(size_t)i];
            p3 += g3[(size_t)i][(size_t)i];
        }
        int64_t e1 = p1;
        int64_t e2 = (p1 * p1 - p2) / 2;
        int64_t e3 = (p1 * p1 * p1 - 3 * p1 * p2 + 2 * p3) / 6;
        return InvariantQuadruple{e1, e2, e3, 0};
    }

    static std::vector<int64_t> mod_flat(const Mat27& g, int64_t p) {
        std::vector<int64_t> m(27 * 27);
        for (int i = 0; i < 27; ++i)
            for (int j = 0; j < 27; ++j) m[(size_t)(27 * i + j)] = ((g[(size_t)i][(size_t)j] % p) + p) % p;
        return m;
    }

    static std::vector<int64_t> invert_mod_matrix(const std::vector<int64_t>& g, int64_t p) {
        std::array<std::array<int64_t, 54>, 27> a{};
        for (int i = 0; i < 27; ++i) {
            for (int j = 0; j < 27; ++j) a[(size_t)i][(size_t)j] = g[(size_t)(27 * i + j)];
            a[(size_t)i][(size_t)(27 + i)] = 1;
        }
        for (int col = 0; col < 27; ++col) {
            int piv = -1;
            for (int r = col; r < 27; ++r)
                if (a[(size_t)r][(size_t)col]) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw std::logic_error("matrix singular mod p");
            std::swap(a[(size_t)piv], a[(size_t)col]);
            int64_t inv = modp::inv_mod(a[(size_t)col][(size_t)col], p);
            for (int j = 0; j < 54; ++j) a[(size_t)col][(size_t)j] = (__int128)a[(size_t)col][(size_t)j] * inv % p;
            for (int r = 0; r < 27; ++r) {
                if (r == col || !a[(size_t)r][(size_t)col]) continue;
                int64_t f = a[(size_t)r][(size_t)col];
                for (int j = 0; j < 54; ++j)
                    a[(size_t)r][(size_t)j] =
                        (int64_t)(((a[(size_t)r][(size_t)j] - (__int128)f * a[(size_t)col][(size_t)j]) % p + p) % p);
            }
        }
        std::vector<int64_t> inv(27 * 27);
        for (int i = 0; i < 27; ++i)
            for (int j = 0; j < 27; ++j) inv[(size_t)(27 * i + j)] = a[(size_t)i][(size_t)(27 + j)];
        return inv;
    }

    const AdTraceKernel& kernel() const { return k1_; }

private:
    Jor pol_;
    AdTraceKernel k1_, k2_;
};

}  // namespace f4aut
