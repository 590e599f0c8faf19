#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cyclo.hpp"
#include "rootsys.hpp"
#include "torsion.hpp"

namespace f4aut {

struct IrrationalTrace : std::runtime_error {
    IrrationalTrace() : std::runtime_error("trace value is not rational") {}
};
struct NonIntegralDimension : std::runtime_error {
    NonIntegralDimension() : std::runtime_error("invariant dimension is not a non-negative integer") {}
};

struct ClassCountRecord {
    KacCoordinates kac;
    InvariantQuadruple inv;
    int64_t n1, n2;  // |c_s ∩ F4,I(Z)|, |c_s ∩ F4,E(Z)|
};

struct GroupOrders {
    Int order1 = Int(1) << 15;
    Int order2 = Int(1) << 12;
    GroupOrders() {
        order1 *= Int(729) * 25 * 7;        // 2^15 3^6 5^2 7
        order2 *= Int(243) * 49 * 13;       // 2^12 3^5 7^2 13
    }
    // 1/|G1| + 1/|G2| = 691 / (2^15 3^6 5^2 7^2 13)
    Rat mass() const { return Rat(1) / Rat(order1) + Rat(1) / Rat(order2); }
};

// Data of the connected centralizer M of the torsion element with Kac
// coordinates s: Phi_M^+ (congruence criterion), rho_M, and the coset set
// W^M = { w : w^{-1} Phi_M^+ inside Phi^+ }.
struct CentralizerData {
    KacCoordinates kac;
    std::vector<Vec4> phi_m_plus;
    Vec4 rho_m2{};  // doubled half-sum, i.e. the plain sum of Phi_M^+
    std::vector<size_t> w_m;  // indices into weyl_group(build_f4())
};

// Inverses of the Weyl matrices (unimodular, so adjugate works exactly).
inline const std::vector<Mat4>& weyl_inverses(const RootDatum& d) {
    static const std::vector<Mat4> inv = [&d]() {
        std::vector<Mat4> out;
        for (const WeylElement& w : weyl_group(d)) {
            Mat4 m{};
            int64_t det = mat_det(w.action);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    int64_t sub[3][3];
                    int rr = 0;
                    for (int r = 0; r < 4; ++r) {
                        if (r == j) continue;
                        int cc = 0;
                        for (int c = 0; c < 4; ++c) {
                            if (c == i) continue;
                            sub[rr][cc++] = w.action[r][c];
                        }
                        ++rr;
                    }
                    int64_t minor = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1]) -
                                    sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0]) +
                                    sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
                    m[i][j] = (((i + j) % 2) ? -minor : minor) * det;
                }
            out.push_back(m);
        }
        return out;
    }();
    return inv;
}

inline CentralizerData centralizer_data(const RootDatum& d, const KacCoordinates& s) {
    CentralizerData cd;
    cd.kac = s;
    for (const Vec4& a : d.positive_roots)
        if (pairing_mod_m(a, s) == 0) {
            cd.phi_m_plus.push_back(a);
            cd.rho_m2 = cd.rho_m2 + a;
        }
    const auto& w = weyl_group(d);
    const auto& winv = weyl_inverses(d);
    for (size_t i = 0; i < w.size(); ++i) {
        bool ok = true;
        for (const Vec4& a : cd.phi_m_plus)
            if (!RootDatum::is_positive(mat_apply(winv[i], a))) {
                ok = false;
                break;
            }
        if (ok) cd.w_m.push_back(i);
    }
    return cd;
}

namespace detail {

// Per-class evaluation context: centralizer data plus the precomputed inverse
// of the character-formula denominator (independent of lambda).
struct ClassContext {
    CentralizerData cd;
    std::vector<int64_t> denom_pairing_num;  // 4*(alpha, rho_M) wait: ip4(alpha, rho_m2) per alpha
    CycloNumber denom_inv;                   // inverse of prod (1 - zeta^{-<alpha,s>})
};

inline const ClassContext& class_context(const RootDatum& d, const KacCoordinates& s) {
    static std::map<KacCoordinates, ClassContext> cache;
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;
    ClassContext ctx;
    ctx.cd = centralizer_data(d, s);
    for (const Vec4& a : ctx.cd.phi_m_plus) ctx.denom_pairing_num.push_back(d.ip4(a, ctx.cd.rho_m2));
    CycloNumber denom(Rat(1));
    for (const Vec4& a : d.positive_roots) {
        int64_t k = pairing_mod_m(a, s);
        if (k == 0) continue;  // alpha in Phi_M^+
        denom *= CycloNumber(Rat(1)) - root_of_unity(s.m, -(long long)k);
    }
    ctx.denom_inv = denom.invert();
    return cache.emplace(s, std::move(ctx)).first->second;
}

}  // namespace detail

// Exact trace of the torsion element s on V_lambda by the degenerate Weyl
// character formula.  `form_scale` rescales the invariant form globally; the
// result is independent of it (exercised by tests).
inline CycloNumber trace_cyclo(const RootDatum& d, const DominantWeight& lambda, const KacCoordinates& s,
                               int64_t form_scale = 1) {
    const auto& ctx = detail::class_context(d, s);
    const auto& W = weyl_group(d);
    Vec4 lr = lambda.root_coords + d.rho;
    std::vector<Rat> bucket(s.m, Rat(0));
    for (size_t wi : ctx.cd.w_m) {
        Vec4 v = mat_apply(W[wi].action, lr);
        int64_t k = pairing_mod_m(v - d.rho, s);
        Rat ratio(W[wi].sign);
        for (size_t j = 0; j < ctx.cd.phi_m_plus.size(); ++j)
            ratio *= Rat(2 * form_scale * d.ip4(ctx.cd.phi_m_plus[j], v), form_scale * ctx.denom_pairing_num[j]);
        bucket[(size_t)k] += ratio;
    }
    return CycloNumber::from_exponent_coeffs(s.m, std::move(bucket)) * ctx.denom_inv;
}

inline Rat trace(const RootDatum& d, const DominantWeight& lambda, const KacCoordinates& s) {
    try {
        return trace_cyclo(d, lambda, s).as_rational();
    } catch (const NotRational&) {
        throw IrrationalTrace();
    }
}

// Weyl dimension formula (the degenerate formula specialised at the identity).
inline Int dim_rep(const RootDatum& d, const DominantWeight& lambda) {
    Vec4 lr = lambda.root_coords + d.rho;
    Rat prod(1);
    for (const Vec4& a : d.positive_roots) prod *= Rat(d.ip4(a, lr), d.ip4(a, d.rho));
    if (!is_integer(prod) || prod <= 0) throw NonIntegralDimension();
    return numerator(prod);
}

struct InvariantDims {
    Int d1, d2, d;
};

// d_i(lambda) = (1/|Gamma_i|) sum_s n_i(s) trace(lambda, s); both must come
// out as non-negative integers.
inline InvariantDims dims_invariants(const RootDatum& d, const DominantWeight& lambda,
                                     const std::vector<ClassCountRecord>& table,
                                     const GroupOrders& orders = GroupOrders()) {
    Rat s1(0), s2(0);
    for (const ClassCountRecord& row : table) {
        Rat t = trace(d, lambda, row.kac);
        if (row.n1) s1 += Rat(row.n1) * t;
        if (row.n2) s2 += Rat(row.n2) * t;
    }
    s1 /= Rat(orders.order1);
    s2 /= Rat(orders.order2);
    if (!is_integer(s1) || !is_integer(s2) || s1 < 0 || s2 < 0) throw NonIntegralDimension();
    return InvariantDims{numerator(s1), numerator(s2), numerator(s1) + numerator(s2)};
}

}  // namespace f4aut
