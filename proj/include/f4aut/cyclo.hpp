#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "bignum.hpp"

namespace f4aut {

struct ZeroInversion : std::runtime_error {
    ZeroInversion() : std::runtime_error("inversion of zero cyclotomic number") {}
};
struct NotRational : std::runtime_error {
    NotRational() : std::runtime_error("cyclotomic number is not rational") {}
};

// Monic integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<Int>;

namespace detail {

// Exact division of integer polynomials, remainder must vanish.
inline IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
    IntPoly q(num.size() - den.size() + 1, 0);
    for (size_t i = q.size(); i-- > 0;) {
        Int c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

}  // namespace detail

// m-th cyclotomic polynomial, computed as (x^m - 1) / prod_{d | m, d < m} Phi_d.
inline const IntPoly& cyclotomic_poly(unsigned m) {
    static std::map<unsigned, IntPoly> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    IntPoly num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) num = detail::poly_div_exact(num, cyclotomic_poly(d));
    return cache.emplace(m, std::move(num)).first->second;
}

// Element of Q(zeta_m): rational coefficients c[0..phi(m)-1] of the residue
// mod Phi_m in the power basis 1, zeta, ..., zeta^{phi(m)-1}.  Order-1 values
// coincide with plain rationals.
class CycloNumber {
public:
    CycloNumber() : m_(1), c_(1, Rat(0)) {}
    explicit CycloNumber(const Rat& r) : m_(1), c_(1, r) {}
    CycloNumber(unsigned m, std::vector<Rat> coeffs) : m_(m), c_(std::move(coeffs)) {
        c_.resize(euler_phi(m_), Rat(0));
    }

    unsigned order() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    static CycloNumber root_of_unity(unsigned m, long long k) {
        long long kk = ((k % (long long)m) + m) % m;
        std::vector<Rat> poly((size_t)kk + 1, Rat(0));
        poly[(size_t)kk] = 1;
        return from_poly(m, std::move(poly));
    }

    // Builds sum_k coeff[k] * zeta_m^k from exponent-indexed coefficients.
    static CycloNumber from_exponent_coeffs(unsigned m, std::vector<Rat> coeff) {
        coeff.resize(m, Rat(0));
        return from_poly(m, std::move(coeff));
    }

    bool is_zero() const {
        for (const Rat& x : c_)
            if (x != 0) return false;
        return true;
    }

    // Rational value iff all power-basis coefficients of index >= 1 vanish.
    Rat as_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) throw NotRational();
        return c_[0];
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    CycloNumber promote(unsigned target) const {
        if (target == m_) return *this;
        if (target % m_ != 0) throw std::logic_error("promote: order must divide target");
        unsigned step = target / m_;
        std::vector<Rat> poly((c_.size() - 1) * step + 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
        return from_poly(target, std::move(poly));
    }

    friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
        auto [x, y] = align(a, b);
        for (size_t i = 0; i < y.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) {
        auto [x, y] = align(a, b);
        for (size_t i = 0; i < y.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }
    CycloNumber operator-() const {
        CycloNumber r = *this;
        for (Rat& x : r.c_) x = -x;
        return r;
    }
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
        auto [x, y] = align(a, b);
        std::vector<Rat> prod(x.c_.size() + y.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i] == 0) continue;
            for (size_t j = 0; j < y.c_.size(); ++j)
                if (y.c_[j] != 0) prod[i + j] += x.c_[i] * y.c_[j];
        }
        return from_poly(x.m_, std::move(prod));
    }
    CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
    CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
    CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }

    friend bool operator==(const CycloNumber& a, const CycloNumber& b) {
        auto [x, y] = align(a, b);
        return x.c_ == y.c_;
    }

    // Inverse via extended gcd of the residue with Phi_m over Q.
    CycloNumber invert() const {
        if (is_zero()) throw ZeroInversion();
        const IntPoly& phi = cyclotomic_poly(m_);
        std::vector<Rat> r0(phi.begin(), phi.end()), r1(c_);
        trim(r1);
        std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};
        // invariant: s_k * this == r_k (mod Phi_m)
        while (true) {
            if (r1.size() == 1) {
                CycloNumber res = from_poly(m_, std::move(s1));
                Rat inv = Rat(1) / r1[0];
                for (Rat& x : res.c_) x *= inv;
                return res;
            }
            auto [q, r] = poly_divmod(r0, r1);
            std::vector<Rat> s2 = poly_sub(s0, poly_mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
            if (r1.empty()) throw std::logic_error("invert: common factor with Phi_m");
        }
    }

    // Galois action zeta_m -> zeta_m^k for gcd(k, m) = 1.
    CycloNumber galois(unsigned k) const {
        if (gcd_u64(k, m_) != 1) throw std::logic_error("galois: k not coprime to m");
        std::vector<Rat> poly(m_, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) poly[(i * (size_t)k) % m_] += c_[i];
        return from_poly(m_, std::move(poly));
    }

private:
    unsigned m_;
    std::vector<Rat> c_;

    static void trim(std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }

    // Reduces an arbitrary-degree polynomial in zeta_m mod Phi_m.
    static CycloNumber from_poly(unsigned m, std::vector<Rat> poly) {
        const IntPoly& phi = cyclotomic_poly(m);
        size_t deg = phi.size() - 1;
        for (size_t i = poly.size(); i-- > deg;) {
            Rat c = poly[i];
            if (c == 0) continue;
            poly[i] = 0;
            for (size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * Rat(phi[j]);
        }
        poly.resize(deg, Rat(0));
        CycloNumber r;
        r.m_ = m;
        r.c_ = std::move(poly);
        return r;
    }

    static std::pair<CycloNumber, CycloNumber> align(const CycloNumber& a, const CycloNumber& b) {
        if (a.m_ == b.m_) return {a, b};
        unsigned l = (unsigned)(a.m_ / gcd_u64(a.m_, b.m_) * (uint64_t)b.m_);
        return {a.promote(l), b.promote(l)};
    }

    static std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(std::vector<Rat> num,
                                                                     const std::vector<Rat>& den) {
        std::vector<Rat> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
        for (size_t i = q.size(); i-- > 0;) {
            Rat c = num[i + den.size() - 1] / den.back();
            q[i] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
        }
        trim(num);
        return {q, num};
    }
    static std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        if (a.empty() || b.empty()) return {};
        std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    }
    static std::vector<Rat> poly_sub(std::vector<Rat> a, const std::vector<Rat>& b) {
        if (a.size() < b.size()) a.resize(b.size(), Rat(0));
        for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
        return a;
    }
};

inline CycloNumber root_of_unity(unsigned m, long long k) { return CycloNumber::root_of_unity(m, k); }

}  // namespace f4aut
