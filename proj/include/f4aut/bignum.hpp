#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace f4aut {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Exact truncation toward zero is not enough for lattice bounds; we need
// floor/ceil of rationals.
inline Int rat_floor(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}
inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

// floor(sqrt(n)) for n >= 0.
inline Int int_floor_sqrt(const Int& n) {
    if (n <= 0) return 0;
    Int x = Int(1) << ((boost::multiprecision::msb(n) / 2) + 1);
    while (true) {
        Int y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

// floor(sqrt(r)) for a rational r >= 0.
inline Int rat_floor_sqrt(const Rat& r) {
    if (r <= 0) return 0;
    Int num = numerator(r), den = denominator(r);
    Int lo = int_floor_sqrt(num / den);
    while ((lo + 1) * (lo + 1) * den <= num) ++lo;
    while (lo * lo * den > num) --lo;
    return lo;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) { r *= n - i; r /= i + 1; }
    return r;
}

inline uint64_t euler_phi(uint64_t n) {
    uint64_t result = n;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) { uint64_t t = a % b; a = b; b = t; }
    return a;
}

}  // namespace f4aut
