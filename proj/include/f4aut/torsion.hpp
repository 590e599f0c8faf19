#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "cyclo.hpp"
#include "rootsys.hpp"

namespace f4aut {

struct InvariantQuadruple {
    int64_t a26, a25, a24, ad_trace;
    auto operator<=>(const InvariantQuadruple&) const = default;
};

struct RationalClass {
    KacCoordinates kac;
    unsigned order;
    InvariantQuadruple inv;
};

// All Kac coordinate vectors of order m: nonnegative solutions of
// s0 + 2 s1 + 3 s2 + 4 s3 + 2 s4 = m with gcd(s0..s4) = 1, lexicographic.
inline std::vector<KacCoordinates> enumerate_kac(unsigned m) {
    std::vector<KacCoordinates> out;
    for (int64_t s0 = 0; s0 <= (int64_t)m; ++s0)
        for (int64_t s1 = 0; s0 + 2 * s1 <= (int64_t)m; ++s1)
            for (int64_t s2 = 0; s0 + 2 * s1 + 3 * s2 <= (int64_t)m; ++s2)
                for (int64_t s3 = 0; s0 + 2 * s1 + 3 * s2 + 4 * s3 <= (int64_t)m; ++s3) {
                    int64_t rest = (int64_t)m - s0 - 2 * s1 - 3 * s2 - 4 * s3;
                    if (rest % 2 != 0) continue;
                    int64_t s4 = rest / 2;
                    uint64_t g = 0;
                    for (int64_t v : {s0, s1, s2, s3, s4}) g = gcd_u64(g, (uint64_t)v);
                    if (g != 1) continue;
                    out.push_back(KacCoordinates{{s0, s1, s2, s3, s4}, m});
                }
    std::sort(out.begin(), out.end());
    return out;
}

// Exponent multiset of the 26 weights of J_C = V_{w4} + C at the torsion
// element s (the trivial summand contributes exponent 0 once more).
inline std::vector<int64_t> rep26_exponents(const RootDatum& d, const KacCoordinates& s) {
    std::vector<int64_t> e;
    for (const auto& [w, mult] : weights_rep26(d).entries)
        for (int i = 0; i < mult; ++i) e.push_back(pairing_mod_m(w, s));
    return e;
}

// Characteristic polynomial on J_C: degree 27, coefficients in Q(zeta_m),
// index i holds the coefficient of X^i.
inline std::vector<CycloNumber> charpoly_26(const RootDatum& d, const KacCoordinates& s) {
    std::vector<CycloNumber> poly{CycloNumber(Rat(1))};
    auto mul_linear = [&](const CycloNumber& root) {
        // poly *= (X - root)
        std::vector<CycloNumber> next(poly.size() + 1);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * root;
        }
        poly = std::move(next);
    };
    for (int64_t k : rep26_exponents(d, s)) mul_linear(root_of_unity(s.m, k));
    mul_linear(CycloNumber(Rat(1)));
    return poly;
}

inline CycloNumber adjoint_trace(const RootDatum& d, const KacCoordinates& s) {
    std::vector<Rat> coeff(s.m, Rat(0));
    coeff[0] += 4;
    for (const Vec4& r : d.all_roots) coeff[(size_t)pairing_mod_m(r, s)] += 1;
    return CycloNumber::from_exponent_coeffs(s.m, std::move(coeff));
}

namespace detail {

// A product of (X - zeta^k) has rational coefficients iff the exponent
// multiset is stable under every Galois substitution k -> t k mod m.
inline bool exponents_galois_stable(std::vector<int64_t> e, unsigned m) {
    std::sort(e.begin(), e.end());
    std::vector<int64_t> mapped(e.size());
    for (unsigned t = 2; t < m; ++t) {
        if (gcd_u64(t, m) != 1) continue;
        for (size_t i = 0; i < e.size(); ++i) mapped[i] = (e[i] * t) % m;
        std::sort(mapped.begin(), mapped.end());
        if (mapped != e) return false;
    }
    return true;
}

inline InvariantQuadruple quadruple_from(const std::vector<CycloNumber>& poly, const CycloNumber& adtr) {
    // P(X) = sum (-1)^{i+1} a_i X^i, so a_i = (-1)^{i+1} coeff_i.
    auto coeff_int = [&](int i, int sign) {
        Rat c = poly[(size_t)i].as_rational() * sign;
        if (!is_integer(c)) throw std::logic_error("charpoly coefficient not integral");
        return (int64_t)numerator(c);
    };
    Rat t = adtr.as_rational();
    if (!is_integer(t)) throw std::logic_error("adjoint trace not integral");
    return InvariantQuadruple{coeff_int(26, -1), coeff_int(25, 1), coeff_int(24, -1),
                              (int64_t)numerator(t)};
}

}  // namespace detail

// Orders that can carry a rational torsion class (Lemma: phi(m) <= 24).
inline std::vector<unsigned> rational_class_orders() {
    std::vector<unsigned> orders;
    for (unsigned n = 1; n <= 60; ++n)
        if (euler_phi(n) <= 24) orders.push_back(n);
    for (unsigned n : {66, 70, 72, 78, 84, 90}) orders.push_back(n);
    return orders;
}

// The rational torsion conjugacy classes of compact F4: all Kac classes whose
// characteristic polynomial on J_C and adjoint trace are rational.
inline const std::vector<RationalClass>& rational_classes() {
    static const std::vector<RationalClass> classes = [] {
        const RootDatum& d = build_f4();
        std::vector<RationalClass> out;
        for (unsigned m : rational_class_orders())
            for (const KacCoordinates& s : enumerate_kac(m)) {
                if (!detail::exponents_galois_stable(rep26_exponents(d, s), m)) continue;
                CycloNumber adtr = adjoint_trace(d, s);
                if (!adtr.is_rational()) continue;
                auto poly = charpoly_26(d, s);
                bool rational = true;
                for (const CycloNumber& c : poly)
                    if (!c.is_rational()) { rational = false; break; }
                if (!rational) continue;
                out.push_back(RationalClass{s, m, detail::quadruple_from(poly, adtr)});
            }
        std::sort(out.begin(), out.end(), [](const RationalClass& a, const RationalClass& b) {
            if (a.order != b.order) return a.order < b.order;
            return a.kac < b.kac;
        });
        return out;
    }();
    return classes;
}

// The unique rational class with the given invariant quadruple, if any.
inline std::optional<RationalClass> classify_by_invariant(const InvariantQuadruple& q) {
    for (const RationalClass& c : rational_classes())
        if (c.inv == q) return c;
    return std::nullopt;
}

}  // namespace f4aut
