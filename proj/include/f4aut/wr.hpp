#pragma once

#include <cstdint>
#include <map>

#include "bignum.hpp"

namespace f4aut {

// Semisimple representation of the real Weil group built from the blocks
// 1, eps_{C/R}, and the 2-dimensional induced representations I_w (w > 0).
struct WRRep {
    int64_t triv = 0;
    int64_t sign = 0;                 // eps_{C/R}
    std::map<int64_t, int64_t> ind;   // w -> multiplicity of I_w

    int64_t dim() const {
        int64_t d = triv + sign;
        for (auto& [w, m] : ind) d += 2 * m;
        return d;
    }
    WRRep& add(const WRRep& o) {
        triv += o.triv;
        sign += o.sign;
        for (auto& [w, m] : o.ind) ind[w] += m;
        return *this;
    }
    static WRRep I(int64_t w, int64_t mult = 1) {
        WRRep r;
        r.ind[w] = mult;
        return r;
    }
    static WRRep one(int64_t mult = 1) {
        WRRep r;
        r.triv = mult;
        return r;
    }
    bool operator==(const WRRep&) const = default;
};

// The fourth root of unity eps(r), returned as an exponent e with value i^e:
// eps(1) = 1, eps(eps_{C/R}) = i, eps(I_w) = i^{w+1}; multiplicative.
inline int epsilon_WR_exponent(const WRRep& r) {
    int64_t e = r.sign;
    for (auto& [w, m] : r.ind) e += m * (w + 1);
    return (int)(((e % 4) + 4) % 4);
}

// eps as +-1 for the self-dual combinations where it is real (exponent even).
inline int epsilon_WR_sign(const WRRep& r) {
    int e = epsilon_WR_exponent(r);
    if (e % 2) throw std::logic_error("epsilon_WR: value is imaginary");
    return e == 0 ? 1 : -1;
}

// I_w (x) I_w' = I_{w+w'} + I_{|w-w'|} (w != w'), I_w (x) I_w = I_{2w} + 1 + eps;
// eps (x) I_w = I_w, eps (x) eps = 1; bilinear extension.
inline WRRep tensor_WR(const WRRep& a, const WRRep& b) {
    WRRep r;
    r.triv += a.triv * b.triv + a.sign * b.sign;
    r.sign += a.triv * b.sign + a.sign * b.triv;
    auto bump = [&r](int64_t w, int64_t m) {
        if (m) r.ind[w] += m;
    };
    for (auto& [w, m] : b.ind) bump(w, (a.triv + a.sign) * m);
    for (auto& [w, m] : a.ind) bump(w, (b.triv + b.sign) * m);
    for (auto& [w1, m1] : a.ind)
        for (auto& [w2, m2] : b.ind) {
            int64_t m = m1 * m2;
            bump(w1 + w2, m);
            if (w1 == w2) {
                r.triv += m;
                r.sign += m;
            } else
                bump(std::abs(w1 - w2), m);
        }
    return r;
}

}  // namespace f4aut
