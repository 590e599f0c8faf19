#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "charform.hpp"
#include "cusptable.hpp"
#include "infchar.hpp"
#include "wr.hpp"

namespace f4aut {

struct DegenerateTop : std::runtime_error {
    DegenerateTop() : std::runtime_error("top four eigenvalues are not strictly decreasing") {}
};
struct NegativeResidual : std::runtime_error {
    NegativeResidual() : std::runtime_error("enumerated parameters exceed d(lambda)") {}
};

// Building blocks for cuspidal summands.  Eigenvalues are kept doubled
// (Hodge-weight scale) so that everything stays integral.
enum class RK {
    A1Tensor,  // tensor of Sym^{k}(pi_i), PGL2 factors; empty product = trivial
    Sp4,
    LamSp4,
    Sym2Sp4,
    Sp6,
    LamSp6,
    V14Sp6,
    Sym2Sp6,
    SO9,
    SpinSO9,
    SO8,
    SpinSO8p,
    SpinSO8m,
    G2,
};

struct RepExpr {
    RK kind = RK::A1Tensor;
    std::vector<std::pair<int, int>> a1;  // (sym power, a1 weight-variable index)
};

inline RepExpr trivial_rep() { return RepExpr{}; }
inline RepExpr sym_rep(int k, int var) { return RepExpr{RK::A1Tensor, {{k, var}}}; }
inline RepExpr tensor_rep(std::vector<std::pair<int, int>> factors) {
    return RepExpr{RK::A1Tensor, std::move(factors)};
}
inline RepExpr base_rep(RK kind, std::vector<std::pair<int, int>> factors = {}) {
    return RepExpr{kind, std::move(factors)};
}

struct Summand {
    RepExpr rep;
    int d = 1;
    uint8_t chi = 0;  // character of C_psi as a bitmask over the chosen generators
};

struct Assignment {
    std::vector<int64_t> a1;     // PGL2 Hodge weights (odd)
    std::vector<int64_t> tuple;  // family Hodge weights, descending
};

// Doubled eigenvalue multiset of a cuspidal building block.
inline std::vector<int64_t> rep_eigen2(const RepExpr& r, const Assignment& w) {
    std::vector<int64_t> base;
    const auto& t = w.tuple;
    auto pm = [&](std::initializer_list<int64_t> vals) {
        for (int64_t v : vals) {
            base.push_back(v);
            base.push_back(-v);
        }
    };
    switch (r.kind) {
        case RK::A1Tensor: base = {0}; break;
        case RK::Sp4: pm({t[0], t[1]}); break;
        case RK::LamSp4:
            pm({t[0] + t[1], t[0] - t[1]});
            base.push_back(0);
            break;
        case RK::Sym2Sp4:
            pm({2 * t[0], 2 * t[1], t[0] + t[1], t[0] - t[1]});
            base.push_back(0);
            base.push_back(0);
            break;
        case RK::Sp6: pm({t[0], t[1], t[2]}); break;
        case RK::LamSp6:
            pm({t[0] + t[1], t[0] - t[1], t[0] + t[2], t[0] - t[2], t[1] + t[2], t[1] - t[2]});
            base.push_back(0);
            base.push_back(0);
            break;
        case RK::V14Sp6:
            pm({t[0], t[1], t[2], t[0] + t[1] + t[2], t[0] + t[1] - t[2], t[0] - t[1] + t[2],
                t[0] - t[1] - t[2]});
            break;
        case RK::Sym2Sp6:
            pm({2 * t[0], 2 * t[1], 2 * t[2], t[0] + t[1], t[0] - t[1], t[0] + t[2], t[0] - t[2],
                t[1] + t[2], t[1] - t[2]});
            base.insert(base.end(), {0, 0, 0});
            break;
        case RK::SO9:
            pm({t[0], t[1], t[2], t[3]});
            base.push_back(0);
            break;
        case RK::SpinSO9:
            for (int s = 0; s < 16; ++s) {
                int64_t v = 0;
                for (int i = 0; i < 4; ++i) v += (s >> i & 1) ? -t[(size_t)i] : t[(size_t)i];
                if (v % 2) throw std::logic_error("spin eigenvalue not integral");
                base.push_back(v / 2);
            }
            break;
        case RK::SO8: pm({t[0], t[1], t[2], t[3]}); break;
        case RK::SpinSO8p:
        case RK::SpinSO8m:
            for (int s = 0; s < 16; ++s) {
                bool odd = __builtin_popcount((unsigned)s) % 2;
                if (odd != (r.kind == RK::SpinSO8m)) continue;
                int64_t v = 0;
                for (int i = 0; i < 4; ++i) v += (s >> i & 1) ? -t[(size_t)i] : t[(size_t)i];
                if (v % 2) throw std::logic_error("spin eigenvalue not integral");
                base.push_back(v / 2);
            }
            break;
        case RK::G2:
            pm({t[0], t[1], t[2]});
            base.push_back(0);
            break;
    }
    for (auto [k, var] : r.a1) {
        int64_t wv = w.a1[(size_t)var];
        std::vector<int64_t> next;
        next.reserve(base.size() * (size_t)(k + 1));
        for (int64_t b : base)
            for (int i = 0; i <= k; ++i) next.push_back(b + (int64_t)(k - 2 * i) * wv);
        base = std::move(next);
    }
    return base;
}

inline std::vector<int64_t> summand_eigen2(const Summand& s, const Assignment& w) {
    std::vector<int64_t> rep = rep_eigen2(s.rep, w);
    std::vector<int64_t> out;
    out.reserve(rep.size() * (size_t)s.d);
    for (int64_t e : rep)
        for (int j = 0; j < s.d; ++j) out.push_back(e + (int64_t)(s.d - 1 - 2 * j));
    return out;
}

struct ArthurShape {
    std::string id;
    int family = 0;  // index of the Sato-Tate case, 1..13
    int crank = 0;   // rank of the component group
    std::string tuple_kind;  // "", "Sp4", "Sp6", "SO8", "SO9", "G2"
    int n_a1 = 0;
    bool tempered = true;
    std::vector<Summand> psi;
    std::vector<Summand> adj;                     // needed when !tempered and crank > 0
    std::vector<std::pair<int, int>> a1_desc;     // canonical order: w[first] > w[second]
    std::function<bool(const Assignment&)> predicate;  // the paper's closed-form condition
};

// Eigenvalue multiset of the full parameter, sorted descending.
inline std::vector<int64_t> psi_eigen2(const ArthurShape& shape, const Assignment& w) {
    std::vector<int64_t> all;
    for (const Summand& s : shape.psi) {
        auto e = summand_eigen2(s, w);
        all.insert(all.end(), e.begin(), e.end());
    }
    std::sort(all.begin(), all.end(), std::greater<>());
    return all;
}

// Membership in Psi_AJ: the eigenvalue multiset is the infinitesimal
// character of some dominant weight.
inline std::optional<Vec4> aj_lambda(const ArthurShape& shape, const Assignment& w) {
    std::vector<int64_t> all = psi_eigen2(shape, w);
    if (all.size() != 26) return std::nullopt;
    std::array<int64_t, 26> arr{};
    std::copy(all.begin(), all.end(), arr.begin());
    return solve_lambda(arr);
}

// rho^vee as a character bitmask: the product of the characters of the
// summands carrying the first and fourth eigenvalues.
inline uint8_t rho_check(const ArthurShape& shape, const Assignment& w) {
    std::vector<int64_t> all = psi_eigen2(shape, w);
    int64_t mu1 = all[0], mu4 = all[3];
    if (!(all[0] > all[1] && all[1] > all[2] && all[2] > all[3])) throw DegenerateTop();
    uint8_t mask = 0;
    for (int64_t target : {mu1, mu4}) {
        int owners = 0;
        uint8_t chi = 0;
        for (const Summand& s : shape.psi) {
            auto e = summand_eigen2(s, w);
            if (std::find(e.begin(), e.end(), target) != e.end()) {
                ++owners;
                chi = s.chi;
            }
        }
        if (owners != 1) throw DegenerateTop();
        mask ^= chi;
    }
    return mask;
}

// epsilon(pi) for a self-dual block: +1 when orthogonal (zero or even Hodge
// weights), otherwise the product of eps(I_h) over the Hodge weights.
inline int epsilon_of_block(const std::vector<int64_t>& eigen2) {
    WRRep l;
    for (int64_t e : eigen2) {
        if (e == 0) return 1;           // odd-dimensional, orthogonal
        if (e > 0) {
            if (e % 2 == 0) return 1;   // even Hodge weights: orthogonal
            l.add(WRRep::I(e));
        }
    }
    return epsilon_WR_sign(l);
}

// Arthur's character as a bitmask: product of chi_i over adjoint summands
// with even d_i and eps(pi_i) = -1.
inline uint8_t arthur_epsilon_mask(const ArthurShape& shape, const Assignment& w) {
    if (shape.tempered || shape.crank == 0) return 0;
    uint8_t mask = 0;
    for (const Summand& s : shape.adj) {
        if (s.d % 2) continue;
        if (epsilon_of_block(rep_eigen2(s.rep, w)) == -1) mask ^= s.chi;
    }
    return mask;
}

// Arthur's multiplicity: 1 iff rho^vee and eps_psi agree as characters.
inline int multiplicity(const ArthurShape& shape, const Assignment& w) {
    return rho_check(shape, w) == arthur_epsilon_mask(shape, w) ? 1 : 0;
}

const std::vector<ArthurShape>& arthur_catalog();

struct EnumeratedParam {
    const ArthurShape* shape;
    Assignment weights;
    int64_t count;
    std::string text;
};

std::string render_param(const ArthurShape& shape, const Assignment& w);

struct EnumerationResult {
    std::vector<EnumeratedParam> params;  // multiplicity-one, positive count
    std::vector<MissingCount> missing;    // table keys that were needed but absent
};

namespace detail {

// iterate weight assignments of a shape matching the given multiset
template <typename F>
void match_assignments(const ArthurShape& shape, const std::array<int64_t, 26>& target, F&& yield) {
    int64_t maxw = target[0];
    Assignment w;
    w.a1.assign((size_t)shape.n_a1, 0);

    auto try_assignment = [&]() {
        for (auto [hi, lo] : shape.a1_desc)
            if (w.a1[(size_t)hi] <= w.a1[(size_t)lo]) return;
        auto all = psi_eigen2(shape, w);
        if (all.size() != 26) return;
        std::array<int64_t, 26> arr{};
        std::copy(all.begin(), all.end(), arr.begin());
        if (arr != target) return;
        yield(w);
    };

    std::function<void(int)> loop_a1 = [&](int var) {
        if (var == shape.n_a1) {
            try_assignment();
            return;
        }
        for (int64_t wt = 1; wt <= maxw; wt += 2) {
            bool dup = false;
            for (int v = 0; v < var; ++v) dup = dup || w.a1[(size_t)v] == wt;
            if (dup) continue;  // coincident weights never match a regular character here
            w.a1[(size_t)var] = wt;
            loop_a1(var + 1);
        }
        w.a1[(size_t)var] = 0;
    };

    auto loop_tuple = [&](auto&& self, int remaining, int64_t upper, int64_t parity) -> void {
        if (remaining == 0) {
            loop_a1(0);
            return;
        }
        for (int64_t wt = upper; wt >= 1; --wt) {
            if ((wt % 2 + 2) % 2 != parity) continue;
            w.tuple.push_back(wt);
            self(self, remaining - 1, wt - 1, parity);
            w.tuple.pop_back();
        }
    };

    if (shape.tuple_kind.empty()) {
        loop_a1(0);
    } else if (shape.tuple_kind == "Sp4") {
        loop_tuple(loop_tuple, 2, maxw, 1);
    } else if (shape.tuple_kind == "Sp6") {
        loop_tuple(loop_tuple, 3, maxw, 1);
    } else if (shape.tuple_kind == "SO8" || shape.tuple_kind == "SO9") {
        loop_tuple(loop_tuple, 4, maxw, 0);
    } else if (shape.tuple_kind == "G2") {
        // Hodge weights (h2 + h3, h2, h3), all even
        for (int64_t h2 = 2; 2 * h2 <= 2 * maxw; h2 += 2)
            for (int64_t h3 = 2; h3 < h2 && h2 + h3 <= maxw; h3 += 2) {
                w.tuple = {h2 + h3, h2, h3};
                loop_a1(0);
                w.tuple.clear();
            }
    } else {
        throw std::logic_error("unknown tuple kind " + shape.tuple_kind);
    }
}

}  // namespace detail

// Parameter count: product of the PGL2 dimension-formula counts and the
// bundled table count of the tuple constituent.  Zero factors short-circuit
// before any table lookup so known-impossible shapes never raise.
inline int64_t param_count(const ArthurShape& shape, const Assignment& w, const CuspCountTable& table) {
    int64_t c = 1;
    for (int64_t wt : w.a1) c *= pgl2_count(wt);
    if (c == 0) return 0;
    if (!shape.tuple_kind.empty()) c *= table.count(shape.tuple_kind, w.tuple);
    return c;
}

inline EnumerationResult enumerate_params_lenient(const Vec4& lambda, const CuspCountTable& table) {
    EnumerationResult out;
    std::array<int64_t, 26> target = inf_char2(lambda);
    for (const ArthurShape& shape : arthur_catalog()) {
        std::vector<Assignment> seen;
        detail::match_assignments(shape, target, [&](const Assignment& w) {
            for (const Assignment& prev : seen)
                if (prev.a1 == w.a1 && prev.tuple == w.tuple) return;
            seen.push_back(w);
            if (multiplicity(shape, w) != 1) return;
            try {
                int64_t c = param_count(shape, w, table);
                if (c > 0) out.params.push_back({&shape, w, c, render_param(shape, w)});
            } catch (const MissingCount& m) {
                out.missing.push_back(m);
            }
        });
        if (seen.size() > 1) {
            // the weight-matching solution is expected to be unique per shape
            std::sort(seen.begin(), seen.end(), [](const Assignment& a, const Assignment& b) {
                return std::tie(a.tuple, a.a1) < std::tie(b.tuple, b.a1);
            });
        }
    }
    std::sort(out.params.begin(), out.params.end(), [](const EnumeratedParam& a, const EnumeratedParam& b) {
        return a.text < b.text;
    });
    return out;
}

inline std::vector<EnumeratedParam> enumerate_params(const Vec4& lambda, const CuspCountTable& table) {
    EnumerationResult r = enumerate_params_lenient(lambda, table);
    if (!r.missing.empty()) throw r.missing.front();
    return r.params;
}

// F4(lambda) = d(lambda) - (number of non-stable multiplicity-one parameters).
inline Int f4_count(const RootDatum& d, const Vec4& lambda, const CuspCountTable& cusps,
                    const std::vector<ClassCountRecord>& classtable) {
    auto params = enumerate_params(lambda, cusps);
    Int total = 0;
    for (const auto& p : params) total += p.count;
    Int dim = dims_invariants(d, d.weight(lambda[0], lambda[1], lambda[2], lambda[3]), classtable).d;
    if (total > dim) throw NegativeResidual();
    return dim - total;
}

}  // namespace f4aut

#include "families.hpp"
