#pragma once

#include <vector>

#include "bignum.hpp"

namespace f4aut {

using GramMatrix = std::vector<std::vector<int64_t>>;

// All nonzero integer vectors v with v^T G v <= bound (G positive definite),
// both signs included.  Fincke-Pohst enumeration over the exact rational
// quadratic completion Q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2.
inline std::vector<std::vector<int64_t>> short_vectors(const GramMatrix& g, int64_t bound) {
    const int n = (int)g.size();
    std::vector<std::vector<Rat>> u(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> diag(n);
    {
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = Rat(g[(size_t)i][(size_t)j]);
        for (int i = 0; i < n; ++i) {
            diag[i] = a[i][i];
            if (diag[i] <= 0) throw std::invalid_argument("short_vectors: form not positive definite");
            for (int j = i + 1; j < n; ++j) u[i][j] = a[i][j] / diag[i];
            for (int k = i + 1; k < n; ++k)
                for (int l = i + 1; l < n; ++l) a[k][l] -= diag[i] * u[i][k] * u[i][l];
        }
    }
    std::vector<std::vector<int64_t>> out;
    if (bound < 0) return out;
    std::vector<int64_t> x(n, 0);
    // enumerate from the last coordinate; rem = remaining budget, shift_i =
    // sum_{j>i} u_ij x_j
    std::vector<Rat> shift(n, Rat(0));
    std::function<void(int, Rat)> descend = [&](int i, Rat rem) {
        if (i < 0) {
            for (int64_t c : x)
                if (c != 0) {
                    out.push_back(x);
                    return;
                }
            return;  // skip zero
        }
        Rat center(0);
        for (int j = i + 1; j < n; ++j) center += u[(size_t)i][(size_t)j] * Rat(x[(size_t)j]);
        // d_i (x_i + center)^2 <= rem
        Rat radius2 = rem / diag[(size_t)i];
        Int lo, hi;
        {
            Int s = rat_floor_sqrt(radius2);
            // |x_i + center| <= sqrt(radius2): refine both ends exactly
            Rat low = -Rat(s) - center, high = Rat(s) - center;
            lo = rat_ceil(low);
            hi = rat_floor(high);
            // the isqrt truncation can clip admissible endpoints; widen and filter
            lo -= 1;
            hi += 1;
        }
        for (Int xi = lo; xi <= hi; ++xi) {
            Rat t = Rat(xi) + center;
            Rat used = diag[(size_t)i] * t * t;
            if (used > rem) continue;
            x[(size_t)i] = (int64_t)xi;
            descend(i - 1, rem - used);
        }
        x[(size_t)i] = 0;
    };
    descend(n - 1, Rat(bound));
    return out;
}

// Vectors of exact norm `value`.
inline std::vector<std::vector<int64_t>> vectors_of_norm(const GramMatrix& g, int64_t value) {
    std::vector<std::vector<int64_t>> out;
    for (auto& v : short_vectors(g, value)) {
        int64_t q = 0;
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = 0; j < v.size(); ++j) q += v[i] * g[i][j] * v[j];
        if (q == value) out.push_back(v);
    }
    return out;
}

}  // namespace f4aut
