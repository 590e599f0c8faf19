#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "rootsys.hpp"

namespace f4aut {

// Doubled eigenvalues (= Hodge-weight scale) of the infinitesimal character
// of V_lambda composed with the 26-dimensional representation, sorted
// descending.  For lambda = (a,b,c,d) the eigenvalue list is
//   0, 0, +-(a+1), +-(b+1), +-(a+b+2), +-(b+c+2), +-(a+b+c+3), +-(b+c+d+3),
//   +-(a+b+c+d+4), +-(a+2b+c+4), +-(a+2b+c+d+5), +-(a+2b+2c+d+6),
//   +-(a+3b+2c+d+7), +-(2a+3b+2c+d+8).
inline std::array<int64_t, 26> inf_char2(int64_t a, int64_t b, int64_t c, int64_t d) {
    std::array<int64_t, 13> pos{a + 1,
                                b + 1,
                                a + b + 2,
                                b + c + 2,
                                a + b + c + 3,
                                b + c + d + 3,
                                a + b + c + d + 4,
                                a + 2 * b + c + 4,
                                a + 2 * b + c + d + 5,
                                a + 2 * b + 2 * c + d + 6,
                                a + 3 * b + 2 * c + d + 7,
                                2 * a + 3 * b + 2 * c + d + 8,
                                0};
    std::array<int64_t, 26> out{};
    size_t k = 0;
    for (int i = 0; i < 12; ++i) {
        out[k++] = 2 * pos[(size_t)i];
        out[k++] = -2 * pos[(size_t)i];
    }
    out[k++] = 0;
    out[k++] = 0;
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

inline std::array<int64_t, 26> inf_char2(const Vec4& lambda) {
    return inf_char2(lambda[0], lambda[1], lambda[2], lambda[3]);
}

// Recovers the dominant weight from a sorted doubled eigenvalue multiset, if
// it is of the above form; the top four values are strictly decreasing and
// determine (a, b, c) by differences.
inline std::optional<Vec4> solve_lambda(const std::array<int64_t, 26>& sorted2) {
    int64_t m1 = sorted2[0] / 2, m2 = sorted2[1] / 2, m3 = sorted2[2] / 2, m4 = sorted2[3] / 2;
    if (sorted2[0] % 2 || sorted2[1] % 2 || sorted2[2] % 2 || sorted2[3] % 2) return std::nullopt;
    int64_t a = m1 - m2 - 1, b = m2 - m3 - 1, c = m3 - m4 - 1;
    int64_t d = m4 - a - 2 * b - c - 5;
    if (a < 0 || b < 0 || c < 0 || d < 0) return std::nullopt;
    if (inf_char2(a, b, c, d) != sorted2) return std::nullopt;
    return Vec4{a, b, c, d};
}

// 2 * max eigenvalue, the motivic weight w(lambda).
inline int64_t motivic_weight(const Vec4& lambda) {
    return 2 * (2 * lambda[0] + 3 * lambda[1] + 2 * lambda[2] + lambda[3] + 8);
}

}  // namespace f4aut
