#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "bignum.hpp"

namespace f4aut {

using Vec4 = std::array<int64_t, 4>;
using Mat4 = std::array<std::array<int64_t, 4>, 4>;

inline Vec4 operator+(const Vec4& a, const Vec4& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
inline Vec4 operator-(const Vec4& a, const Vec4& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline Vec4 operator-(const Vec4& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

inline Vec4 mat_apply(const Mat4& m, const Vec4& v) {
    Vec4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += m[i][j] * v[j];
    return r;
}
inline Mat4 mat_mul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}
inline int64_t mat_det(const Mat4& m) {
    int64_t d = 0;
    int perm[4] = {0, 1, 2, 3};
    // 24 permutations, explicit expansion
    std::array<int, 4> p = {0, 1, 2, 3};
    (void)perm;
    do {
        int sign = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) sign = -sign;
        d += sign * m[0][p[0]] * m[1][p[1]] * m[2][p[2]] * m[3][p[3]];
    } while (std::next_permutation(p.begin(), p.end()));
    return d;
}

struct WeylElement {
    Mat4 action;  // on simple-root coordinates
    int sign;     // epsilon(w) = (-1)^length = det
};

// A dominant weight of F4 in both the fundamental-weight and simple-root bases.
struct DominantWeight {
    Vec4 coords;       // (lambda_1..lambda_4), all >= 0
    Vec4 root_coords;  // same weight in simple-root coordinates
};

struct WeightMultiset {
    std::vector<std::pair<Vec4, int>> entries;  // (weight in root coords, multiplicity)
    int total() const {
        int t = 0;
        for (auto& e : entries) t += e.second;
        return t;
    }
};

struct KacCoordinates {
    std::array<int64_t, 5> s;  // (s0..s4)
    unsigned m;                // order: s0 + 2 s1 + 3 s2 + 4 s3 + 2 s4
    auto operator<=>(const KacCoordinates&) const = default;
};

// Exact combinatorics of the F4 root system in Bourbaki coordinates:
//   a1 = e2-e3, a2 = e3-e4, a3 = e4, a4 = (e1-e2-e3-e4)/2.
// Roots and weights are stored in simple-root coordinates (integers); the
// W-invariant form is evaluated through doubled epsilon-coordinates.
class RootDatum {
public:
    std::array<Vec4, 4> simple_eps2;  // simple roots, epsilon-coords doubled
    Mat4 cartan;                      // cartan[i][j] = <a_i, a_j^vee>
    Mat4 cartan_t_inv;                // inverse of cartan^T (integer: det = 1)
    std::vector<Vec4> positive_roots;
    std::vector<Vec4> all_roots;
    Vec4 rho;                                // root coords (8,15,21,11)
    std::array<int64_t, 5> marks{1, 2, 3, 4, 2};
    Mat4 gram4;  // gram4[i][j] = 4*(a_i, a_j)

    RootDatum() {
        simple_eps2 = {Vec4{0, 2, -2, 0}, Vec4{0, 0, 2, -2}, Vec4{0, 0, 0, 2}, Vec4{1, -1, -1, -1}};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                int64_t dot = 0;
                for (int k = 0; k < 4; ++k) dot += simple_eps2[i][k] * simple_eps2[j][k];
                gram4[i][j] = dot;  // = 4 (a_i, a_j)
            }
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) cartan[i][j] = 2 * gram4[i][j] / gram4[j][j];
        cartan_t_inv = invert_unimodular(transpose(cartan));

        // closure of the simple roots under simple reflections
        std::vector<Vec4> roots;
        for (int i = 0; i < 4; ++i) {
            Vec4 e{};
            e[i] = 1;
            roots.push_back(e);
        }
        for (size_t head = 0; head < roots.size(); ++head)
            for (int i = 0; i < 4; ++i) {
                Vec4 r = reflect_simple(i, roots[head]);
                if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
            }
        for (const Vec4& r : roots) {
            all_roots.push_back(r);
            if (is_positive(r)) positive_roots.push_back(r);
        }
        std::sort(positive_roots.begin(), positive_roots.end());
        std::sort(all_roots.begin(), all_roots.end());
        Vec4 two_rho{};
        for (const Vec4& r : positive_roots) two_rho = two_rho + r;
        rho = {two_rho[0] / 2, two_rho[1] / 2, two_rho[2] / 2, two_rho[3] / 2};
    }

    // 4*(u, v) for u, v in root coordinates; exact integer.
    int64_t ip4(const Vec4& u, const Vec4& v) const {
        int64_t s = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) s += u[i] * gram4[i][j] * v[j];
        return s;
    }

    static bool is_positive(const Vec4& r) {
        for (int i = 0; i < 4; ++i)
            if (r[i] != 0) return r[i] > 0;
        return false;
    }

    Vec4 reflect_simple(int i, const Vec4& x) const {
        int64_t pairing = 0;
        for (int j = 0; j < 4; ++j) pairing += x[j] * cartan[j][i];
        Vec4 r = x;
        r[i] -= pairing;
        return r;
    }

    Mat4 simple_reflection_matrix(int i) const {
        Mat4 m{};
        for (int j = 0; j < 4; ++j) {
            Vec4 e{};
            e[j] = 1;
            Vec4 im = reflect_simple(i, e);
            for (int k = 0; k < 4; ++k) m[k][j] = im[k];
        }
        return m;
    }

    Vec4 fundamental_to_root(const Vec4& fund) const { return mat_apply(cartan_t_inv, fund); }

    DominantWeight weight(int64_t l1, int64_t l2, int64_t l3, int64_t l4) const {
        if (l1 < 0 || l2 < 0 || l3 < 0 || l4 < 0) throw std::invalid_argument("weight: negative coordinate");
        Vec4 f{l1, l2, l3, l4};
        return DominantWeight{f, fundamental_to_root(f)};
    }

    Vec4 highest_root() const {
        Vec4 best = positive_roots[0];
        for (const Vec4& r : positive_roots) {
            Vec4 d = r - best;
            if (is_positive(d)) best = r;
        }
        return best;
    }

private:
    static Mat4 transpose(const Mat4& m) {
        Mat4 t{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) t[i][j] = m[j][i];
        return t;
    }
    static Mat4 invert_unimodular(const Mat4& m) {
        // adjugate over the integers; requires det = +-1
        int64_t det = mat_det(m);
        if (det != 1 && det != -1) throw std::logic_error("invert_unimodular: |det| != 1");
        Mat4 inv{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                int64_t sub[3][3];
                int rr = 0;
                for (int r = 0; r < 4; ++r) {
                    if (r == j) continue;
                    int cc = 0;
                    for (int c = 0; c < 4; ++c) {
                        if (c == i) continue;
                        sub[rr][cc++] = m[r][c];
                    }
                    ++rr;
                }
                int64_t minor = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1]) -
                                sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0]) +
                                sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
                inv[i][j] = (((i + j) % 2) ? -minor : minor) * det;
            }
        return inv;
    }
};

inline const RootDatum& build_f4() {
    static const RootDatum d;
    return d;
}

// The full Weyl group (1152 elements) as matrices on simple-root coordinates,
// generated by closure of the simple reflections.
inline const std::vector<WeylElement>& weyl_group(const RootDatum& d) {
    static const std::vector<WeylElement> group = [&d]() {
        std::vector<Mat4> gens;
        for (int i = 0; i < 4; ++i) gens.push_back(d.simple_reflection_matrix(i));
        std::map<Mat4, size_t> seen;
        std::vector<Mat4> elems;
        Mat4 id{};
        for (int i = 0; i < 4; ++i) id[i][i] = 1;
        elems.push_back(id);
        seen.emplace(id, 0);
        for (size_t head = 0; head < elems.size(); ++head)
            for (const Mat4& g : gens) {
                Mat4 p = mat_mul(g, elems[head]);
                if (seen.emplace(p, elems.size()).second) elems.push_back(p);
            }
        std::vector<WeylElement> out;
        out.reserve(elems.size());
        for (const Mat4& m : elems) out.push_back({m, (int)mat_det(m)});
        return out;
    }();
    return group;
}

// Weights of the 26-dimensional representation: the W-orbit of w_4 with
// multiplicity 1, plus the zero weight twice.
inline WeightMultiset weights_rep26(const RootDatum& d) {
    Vec4 w4 = d.fundamental_to_root({0, 0, 0, 1});
    std::vector<Vec4> orbit{w4};
    for (size_t head = 0; head < orbit.size(); ++head)
        for (int i = 0; i < 4; ++i) {
            Vec4 r = d.reflect_simple(i, orbit[head]);
            if (std::find(orbit.begin(), orbit.end(), r) == orbit.end()) orbit.push_back(r);
        }
    std::sort(orbit.begin(), orbit.end());
    WeightMultiset w;
    for (const Vec4& v : orbit) w.entries.push_back({v, 1});
    w.entries.push_back({Vec4{0, 0, 0, 0}, 2});
    return w;
}

inline WeightMultiset weights_adjoint(const RootDatum& d) {
    WeightMultiset w;
    for (const Vec4& r : d.all_roots) w.entries.push_back({r, 1});
    w.entries.push_back({Vec4{0, 0, 0, 0}, 4});
    return w;
}

// Exponent k with mu(t) = zeta_m^k for t = exp(sum_i s_i w_i^vee / m):
// sum_i c_i s_i mod m where mu = sum c_i a_i.
inline int64_t pairing_mod_m(const Vec4& mu, const KacCoordinates& s) {
    int64_t v = 0;
    for (int i = 0; i < 4; ++i) v += mu[i] * s.s[i + 1];
    int64_t m = (int64_t)s.m;
    return ((v % m) + m) % m;
}

}  // namespace f4aut
