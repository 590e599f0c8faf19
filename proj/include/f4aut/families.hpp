#pragma once

// Catalog of the discrete-parameter shapes for every non-stable Sato-Tate
// family, with the component-group characters and adjoint decompositions
// attached to each endoscopic case, plus each case's closed-form
// multiplicity condition.  This file is data, not search.

#include "arthur.hpp"

namespace f4aut {

namespace catalog_detail {

inline Summand S(RepExpr r, int d, uint8_t chi) { return Summand{std::move(r), d, chi}; }

inline void validate(const ArthurShape& s) {
    Assignment w;
    w.a1.assign((size_t)s.n_a1, 0);
    int64_t probe[4] = {1009, 601, 331, 127};
    for (int i = 0; i < s.n_a1; ++i) w.a1[(size_t)i] = probe[i];
    if (s.tuple_kind == "Sp4")
        w.tuple = {2003, 1001};
    else if (s.tuple_kind == "Sp6")
        w.tuple = {2003, 1001, 501};
    else if (s.tuple_kind == "SO8" || s.tuple_kind == "SO9")
        w.tuple = {2004, 1002, 502, 250};
    else if (s.tuple_kind == "G2")
        w.tuple = {3006, 2004, 1002};
    size_t dim = 0;
    for (const Summand& x : s.psi) dim += rep_eigen2(x.rep, w).size() * (size_t)x.d;
    if (dim != 26) throw std::logic_error(s.id + ": psi dimension " + std::to_string(dim));
    bool has_ladder = false;
    for (const Summand& x : s.psi) has_ladder = has_ladder || x.d > 1;
    if (s.tempered == has_ladder) throw std::logic_error(s.id + ": tempered flag wrong");
    if (!s.adj.empty()) {
        size_t adim = 0;
        for (const Summand& x : s.adj) adim += rep_eigen2(x.rep, w).size() * (size_t)x.d;
        if (adim != 52) throw std::logic_error(s.id + ": adjoint dimension " + std::to_string(adim));
    } else if (!s.tempered && s.crank > 0) {
        throw std::logic_error(s.id + ": missing adjoint data");
    }
}

}  // namespace catalog_detail

inline const std::vector<ArthurShape>& arthur_catalog() {
    using namespace catalog_detail;
    static const std::vector<ArthurShape> shapes = [] {
        std::vector<ArthurShape> v;
        auto triv = trivial_rep;
        auto add = [&v](ArthurShape s) {
            validate(s);
            v.push_back(std::move(s));
        };

        // ---- 1: principal A1, J0 = Sym16 + Sym8, trivial centralizer ----
        add({"pA1_i", 1, 0, "", 0, false,
             {S(triv(), 17, 0), S(triv(), 9, 0)},
             {},
             {},
             [](const Assignment&) { return true; }});
        add({"pA1_ii", 1, 0, "", 1, true,
             {S(sym_rep(16, 0), 1, 0), S(sym_rep(8, 0), 1, 0)},
             {},
             {},
             [](const Assignment&) { return true; }});

        // ---- 2: (A1^[9,6^2,5] x A1)/mu2 ----
        add({"sp3a1_i", 2, 1, "", 1, false,
             {S(sym_rep(1, 0), 6, 1), S(triv(), 5, 0), S(triv(), 9, 0)},
             {S(sym_rep(2, 0), 1, 0), S(sym_rep(1, 0), 10, 1), S(sym_rep(1, 0), 4, 1), S(triv(), 11, 0),
              S(triv(), 7, 0), S(triv(), 3, 0)},
             {},
             [](const Assignment&) { return true; }});
        add({"sp3a1_ii", 2, 1, "", 1, false,
             {S(sym_rep(8, 0), 1, 0), S(sym_rep(4, 0), 1, 0), S(sym_rep(5, 0), 2, 1)},
             {S(sym_rep(10, 0), 1, 0), S(sym_rep(9, 0), 2, 1), S(sym_rep(6, 0), 1, 0), S(sym_rep(3, 0), 2, 1),
              S(sym_rep(2, 0), 1, 0), S(triv(), 3, 0)},
             {},
             [](const Assignment& w) { return w.a1[0] % 4 == 3; }});
        add({"sp3a1_iii", 2, 1, "", 2, true,
             {S(sym_rep(8, 0), 1, 0), S(sym_rep(4, 0), 1, 0), S(tensor_rep({{5, 0}, {1, 1}}), 1, 1)},
             {},
             {},
             [](const Assignment& w) {
                 int64_t w1 = w.a1[0], w2 = w.a1[1];
                 return w2 > 9 * w1 || (5 * w1 < w2 && w2 < 7 * w1);
             }});

        // ---- 3: (A1^[5,4^2,3^3,2^2] x A1^[3^3,2^6,1^5])/mu2 ----
        add({"so3d_i", 3, 1, "", 1, false,
             {S(sym_rep(2, 0), 3, 0), S(sym_rep(1, 0), 4, 1), S(sym_rep(1, 0), 2, 1), S(triv(), 5, 0)},
             {S(sym_rep(3, 0), 2, 1), S(sym_rep(2, 0), 5, 0), S(sym_rep(2, 0), 1, 0), S(sym_rep(1, 0), 6, 1),
              S(sym_rep(1, 0), 4, 1), S(triv(), 3, 0), S(triv(), 3, 0)},
             {},
             [](const Assignment&) { return true; }});
        add({"so3d_ii", 3, 1, "", 1, false,
             {S(sym_rep(4, 0), 1, 0), S(sym_rep(3, 0), 2, 1), S(sym_rep(2, 0), 3, 0), S(sym_rep(1, 0), 2, 1)},
             {S(sym_rep(5, 0), 2, 1), S(sym_rep(4, 0), 3, 0), S(sym_rep(3, 0), 2, 1), S(sym_rep(2, 0), 1, 0),
              S(sym_rep(2, 0), 1, 0), S(sym_rep(1, 0), 4, 1), S(triv(), 3, 0)},
             {},
             [](const Assignment&) { return true; }});
        add({"so3d_iii", 3, 1, "", 2, true,
             {S(sym_rep(4, 0), 1, 0), S(tensor_rep({{3, 0}, {1, 1}}), 1, 1),
              S(tensor_rep({{2, 0}, {2, 1}}), 1, 0), S(tensor_rep({{1, 0}, {1, 1}}), 1, 1)},
             {},
             {},
             [](const Assignment& w) {
                 int64_t w1 = w.a1[0], w2 = w.a1[1];
                 return w1 > 3 * w2 || (w1 < w2 && w2 < 3 * w1) || (3 * w1 < w2 && w2 < 5 * w1);
             }});

        // ---- 4: Spin(3) x Spin(3) type ----
        add({"spin33_i", 4, 1, "", 1, false,
             {S(sym_rep(3, 0), 2, 1), S(sym_rep(2, 0), 3, 0), S(sym_rep(1, 0), 4, 1), S(triv(), 1, 0)},
             {S(sym_rep(4, 0), 3, 0), S(sym_rep(3, 0), 2, 1), S(sym_rep(2, 0), 5, 0), S(sym_rep(2, 0), 1, 0),
              S(sym_rep(1, 0), 4, 1), S(triv(), 3, 0)},
             {},
             [](const Assignment& w) { return w.a1[0] % 4 == 3; }});
        add({"spin33_ii", 4, 1, "", 2, true,
             {S(tensor_rep({{3, 0}, {1, 1}}), 1, 1), S(tensor_rep({{2, 0}, {2, 1}}), 1, 0),
              S(tensor_rep({{1, 0}, {3, 1}}), 1, 1), S(triv(), 1, 0)},
             {},
             {{0, 1}},
             [](const Assignment& w) {
                 int64_t w1 = w.a1[0], w2 = w.a1[1];
                 return w2 < w1 && w1 < 3 * w2;
             }});

        // ---- 5: A1^[7^3,1^5] x A1^[5,3^7], trivial centralizer ----
        add({"g2so3_i", 5, 0, "", 1, false,
             {S(sym_rep(6, 0), 3, 0), S(triv(), 5, 0)},
             {},
             {},
             [](const Assignment&) { return true; }});
        add({"g2so3_ii", 5, 0, "", 1, false,
             {S(sym_rep(4, 0), 1, 0), S(sym_rep(2, 0), 7, 0)},
             {},
             {},
             [](const Assignment&) { return true; }});
        add({"g2so3_iii", 5, 0, "", 2, true,
             {S(tensor_rep({{6, 0}, {2, 1}}), 1, 0), S(sym_rep(4, 1), 1, 0)},
             {},
             {},
             [](const Assignment&) { return true; }});

        // ---- 6: A1^[5,3^7] x (A1^[3^3,2^6,1^5] x A1^[2^6,1^14])/mu2 ----
        add({"tripleA1_i", 6, 1, "", 2, false,
             {S(sym_rep(4, 0), 1, 0), S(tensor_rep({{2, 0}, {1, 1}}), 2, 1), S(sym_rep(2, 0), 3, 0)},
             {S(tensor_rep({{4, 0}, {1, 1}}), 2, 1), S(sym_rep(4, 0), 3, 0), S(sym_rep(2, 0), 1, 0),
              S(sym_rep(2, 1), 1, 0), S(sym_rep(1, 1), 4, 1), S(triv(), 3, 0)},
             {},
             [](const Assignment& w) {
                 int64_t w1 = w.a1[0], w2 = w.a1[1];
                 return w2 < 2 * w1 - 1 || w2 > 4 * w1 + 1;
             }});
        add({"tripleA1_ii", 6, 1, "", 2, false,
             {S(sym_rep(4, 0), 1, 0), S(tensor_rep({{2, 0}, {1, 1}}), 2, 1),
              S(tensor_rep({{2, 0}, {2, 1}}), 1, 0)},
             {S(tensor_rep({{4, 0}, {2, 1}}), 1, 0), S(tensor_rep({{4, 0}, {1, 1}}), 2, 1),
              S(sym_rep(3, 1), 2, 1), S(sym_rep(2, 0), 1, 0), S(sym_rep(2, 1), 1, 0), S(triv(), 3, 0)},
             {},
             [](const Assignment& w) {
                 int64_t w1 = w.a1[0], w2 = w.a1[1];
                 if (2 * w1 + 1 < w2 && w2 < 4 * w1 - 1 && w2 % 4 == 1) return true;
                 return (w2 < 2 * w1 - 1 || w2 > 4 * w1 + 1) && w2 % 4 == 3 && w1 != w2;
             }});
        add({"tripleA1_iii", 6, 1, "", 2, false,
             {S(sym_rep(2, 0), 3, 0), S(tensor_rep({{1, 0}, {1, 1}}), 3, 1), S(triv(), 5, 0)},
             {S(tensor_rep({{1, 0}, {1, 1}}), 5, 1), S(sym_rep(2, 0), 5, 0), S(triv(), 3, 0),
              S(sym_rep(2, 0), 1, 0), S(sym_rep(2, 1), 1, 0), S(tensor_rep({{3, 0}, {1, 1}}), 1, 1)},
             {},
             [](const Assignment& w) { return w.a1[1] > 3 * w.a1[0]; }});
        add({"tripleA1_iv", 6, 1, "", 3, true,
             {S(sym_rep(4, 0), 1, 0), S(tensor_rep({{2, 0}, {1, 1}, {1, 2}}), 1, 1),
              S(tensor_rep({{2, 0}, {2, 2}}), 1, 0)},
             {},
             {},
             [](const Assignment& w) {
                 int64_t w1 = w.a1[0], w2 = w.a1[1], w3 = w.a1[2];
                 auto amax = [](int64_t a, int64_t b) { return a > b ? a : b; };
                 auto amin = [](int64_t a, int64_t b) { return a < b ? a : b; };
                 if (w2 > amax(3 * w3, 4 * w1 + w3)) return true;
                 if (2 * w1 + w3 < w2 && w2 < 4 * w1 - w3) return true;
                 if (3 * w3 < w2 && w2 < 2 * w1 - w3) return true;
                 if (2 * w1 + w3 < w2 && w2 < amin(4 * w1 + w3, 3 * w3)) return true;
                 if (std::abs(4 * w1 - w3) < w2 && w2 < w3 - 2 * w1) return true;
                 if (std::abs(2 * w1 - w3) < w2 && w2 < amin(4 * w1 - w3, 3 * w3) && w3 != w1 && w3 != w2)
                     return true;
                 return false;
             }});

        // ---- 7: (A1^[5,4^4,1^5] x A1 x A1)/mu2, component group (Z/2)^2 ----
        add({"spin54_i", 7, 2, "", 2, false,
             {S(sym_rep(4, 0), 1, 0), S(tensor_rep({{3, 0}, {1, 1}}), 1, 0b01), S(sym_rep(3, 0), 2, 0b11),
              S(sym_rep(1, 1), 2, 0b10), S(triv(), 1, 0)},
             {S(sym_rep(6, 0), 1, 0), S(tensor_rep({{4, 0}, {1, 1}}), 2, 0b10),
              S(tensor_rep({{3, 0}, {1, 1}}), 1, 0b01), S(sym_rep(3, 0), 2, 0b11), S(sym_rep(2, 0), 1, 0),
              S(sym_rep(2, 1), 1, 0), S(triv(), 3, 0)},
             {},
             [](const Assignment& w) {
                 int64_t w1 = w.a1[0], w2 = w.a1[1];
                 if ((w2 < w1 || w2 > 4 * w1 + 1) && w2 % 4 == 3) return true;
                 return 3 * w1 < w2 && w2 < 4 * w1 - 1 && w2 % 4 == 1;
             }});
        add({"spin54_ii", 7, 2, "", 2, false,
             {S(tensor_rep({{1, 0}, {1, 1}}), 1, 0b10), S(sym_rep(1, 0), 4, 0b01), S(sym_rep(1, 1), 4, 0b11),
              S(triv(), 5, 0), S(triv(), 1, 0)},
             {S(sym_rep(2, 0), 1, 0), S(sym_rep(2, 1), 1, 0), S(tensor_rep({{1, 0}, {1, 1}}), 5, 0b10),
              S(sym_rep(1, 0), 4, 0b01), S(sym_rep(1, 1), 4, 0b11), S(triv(), 7, 0), S(triv(), 3, 0)},
             {{0, 1}},
             [](const Assignment& w) {
                 int64_t w1 = w.a1[0], w2 = w.a1[1];
                 return w1 % 4 == 3 && w2 % 4 == 1 && w2 < w1 - 4;
             }});
        add({"spin54_iii", 7, 2, "", 3, true,
             {S(sym_rep(4, 0), 1, 0), S(tensor_rep({{3, 0}, {1, 1}}), 1, 0b01),
              S(tensor_rep({{3, 0}, {1, 2}}), 1, 0b11), S(tensor_rep({{1, 1}, {1, 2}}), 1, 0b10),
              S(triv(), 1, 0)},
             {},
             {{1, 2}},
             [](const Assignment& w) {
                 int64_t w1 = w.a1[0], w2 = w.a1[1], w3 = w.a1[2];
                 if (w1 > w3 && 2 * w1 - w3 < w2 && w2 < 2 * w1 + w3) return true;
                 if (w3 < 3 * w1 && 3 * w1 < w2 && w2 < 2 * w1 + w3) return true;
                 return w1 < w3 && w3 < 3 * w1 && w2 > 4 * w1 + w3;
             }});

        // ---- 8: product of four A1's, component group (Z/2)^3 ----
        add({"fourA1_i", 8, 3, "", 3, false,
             {S(tensor_rep({{1, 0}, {1, 1}}), 1, 0b011), S(tensor_rep({{1, 0}, {1, 2}}), 1, 0b101),
              S(tensor_rep({{1, 1}, {1, 2}}), 1, 0b110), S(sym_rep(1, 0), 2, 0b001),
              S(sym_rep(1, 1), 2, 0b010), S(sym_rep(1, 2), 2, 0b100), S(triv(), 1, 0), S(triv(), 1, 0)},
             {S(tensor_rep({{1, 0}, {1, 1}, {1, 2}}), 2, 0b111), S(tensor_rep({{1, 0}, {1, 1}}), 1, 0b011),
              S(tensor_rep({{1, 0}, {1, 2}}), 1, 0b101), S(tensor_rep({{1, 1}, {1, 2}}), 1, 0b110),
              S(sym_rep(2, 0), 1, 0), S(sym_rep(2, 1), 1, 0), S(sym_rep(2, 2), 1, 0),
              S(sym_rep(1, 0), 2, 0b001), S(sym_rep(1, 1), 2, 0b010), S(sym_rep(1, 2), 2, 0b100),
              S(triv(), 3, 0)},
             {{0, 1}, {1, 2}},
             [](const Assignment& w) {
                 int64_t w1 = w.a1[0], w2 = w.a1[1], w3 = w.a1[2];
                 if (w1 > w2 + w3 + 1 && w1 % 4 == 3 && w3 % 4 == 3 && w2 % 4 == 1) return true;
                 return w1 < w2 + w3 - 1 && w1 % 4 == 1 && w3 % 4 == 1 && w2 % 4 == 3;
             }});
        add({"fourA1_ii", 8, 3, "", 4, true,
             {S(tensor_rep({{1, 0}, {1, 1}}), 1, 0b011), S(tensor_rep({{1, 0}, {1, 2}}), 1, 0b101),
              S(tensor_rep({{1, 0}, {1, 3}}), 1, 0b001), S(tensor_rep({{1, 1}, {1, 2}}), 1, 0b110),
              S(tensor_rep({{1, 1}, {1, 3}}), 1, 0b010), S(tensor_rep({{1, 2}, {1, 3}}), 1, 0b100),
              S(triv(), 1, 0), S(triv(), 1, 0)},
             {},
             {{0, 1}, {1, 2}, {2, 3}},
             [](const Assignment&) { return false; }});

        // ---- 9: A1^[5,3^7] x G2, trivial centralizer ----
        add({"a1g2_i", 9, 0, "G2", 0, false,
             {S(base_rep(RK::G2), 3, 0), S(triv(), 5, 0)},
             {},
             {},
             [](const Assignment& w) { return w.tuple[2] > 4; }});
        add({"a1g2_ii", 9, 0, "G2", 1, true,
             {S(base_rep(RK::G2, {{2, 0}}), 1, 0), S(sym_rep(4, 0), 1, 0)},
             {},
             {},
             [](const Assignment& w) {
                 int64_t wt = w.a1[0];
                 return 2 * wt != w.tuple[0] && 2 * wt != w.tuple[1] && 2 * wt != w.tuple[2];
             }});

        // ---- 10: (A1 x A1 x Sp(2))/mu2, component group (Z/2)^2 ----
        add({"a1a1sp2_i", 10, 2, "Sp4", 1, false,
             {S(base_rep(RK::LamSp4), 1, 0), S(base_rep(RK::Sp4, {{1, 0}}), 1, 0b11),
              S(base_rep(RK::Sp4), 2, 0b01), S(sym_rep(1, 0), 2, 0b10), S(triv(), 1, 0)},
             {S(triv(), 3, 0), S(sym_rep(2, 0), 1, 0), S(base_rep(RK::Sp4), 2, 0b01),
              S(base_rep(RK::Sp4, {{1, 0}}), 1, 0b11), S(base_rep(RK::LamSp4, {{1, 0}}), 2, 0b10),
              S(base_rep(RK::Sym2Sp4), 1, 0)},
             {},
             [](const Assignment& w) {
                 int64_t w1 = w.tuple[0], w2 = w.tuple[1], v = w.a1[0];
                 auto amin = [](int64_t a, int64_t b) { return a < b ? a : b; };
                 auto amax = [](int64_t a, int64_t b) { return a > b ? a : b; };
                 int64_t s = (w1 + w2) % 4;
                 if (w1 < v && v < w1 + w2 - 1 && s == 0 && v % 4 == 1) return true;
                 if (w1 - w2 + 1 < v && v < w2 && s == 0 && v % 4 == 1) return true;
                 if (w2 < v && v < w1 - w2 - 1 && s == 2 && v % 4 == 1) return true;
                 if (v > w1 + w2 + 1 && s == 0 && v % 4 == 3) return true;
                 if (v < amin(w1 - w2 - 1, w2) && s == 0 && v % 4 == 3) return true;
                 return amax(w1 - w2 + 1, w2) < v && v < w1 && s == 2 && v % 4 == 3;
             }});
        add({"a1a1sp2_ii", 10, 2, "Sp4", 2, true,
             {S(base_rep(RK::LamSp4), 1, 0), S(base_rep(RK::Sp4, {{1, 0}}), 1, 0b11),
              S(base_rep(RK::Sp4, {{1, 1}}), 1, 0b01), S(tensor_rep({{1, 0}, {1, 1}}), 1, 0b10),
              S(triv(), 1, 0)},
             {},
             {{0, 1}},
             [](const Assignment& w) {
                 int64_t w1 = w.tuple[0], w2 = w.tuple[1], v1 = w.a1[0], v2 = w.a1[1];
                 if (v2 < w2 && w2 < v1 && w1 - w2 - v2 < v1 && v1 < w1 - w2 + v2) return true;
                 if (w2 < v2 && v2 < w1 && v1 > w1 + w2 + v2) return true;
                 return v2 < w1 && w1 < v1 && v1 < w1 - w2 + v2;
             }});

        // ---- 11: (A1 x Sp(3))/mu2 ----
        add({"a1sp3_i", 11, 1, "Sp6", 0, false,
             {S(base_rep(RK::LamSp6), 1, 0), S(base_rep(RK::Sp6), 2, 1)},
             {S(triv(), 3, 0), S(base_rep(RK::V14Sp6), 2, 1), S(base_rep(RK::Sym2Sp6), 1, 0)},
             {},
             [](const Assignment& w) {
                 int64_t w1 = w.tuple[0], w2 = w.tuple[1], w3 = w.tuple[2];
                 if (w1 > w2 + w3 + 1 && (w1 + w2 + w3) % 4 == 3) return true;
                 return w1 < w2 + w3 - 1 && (w1 + w2 + w3) % 4 == 1;
             }});
        add({"a1sp3_ii", 11, 1, "Sp6", 1, true,
             {S(base_rep(RK::LamSp6), 1, 0), S(base_rep(RK::Sp6, {{1, 0}}), 1, 1)},
             {},
             {},
             [](const Assignment& w) {
                 int64_t w1 = w.tuple[0], w2 = w.tuple[1], w3 = w.tuple[2], v = w.a1[0];
                 auto amin = [](int64_t a, int64_t b) { return a < b ? a : b; };
                 auto amax = [](int64_t a, int64_t b) { return a > b ? a : b; };
                 if (std::abs(w1 - w2 - w3) < v && v < w3) return true;
                 if (w1 - w2 + w3 < v && v < w2) return true;
                 if (w3 < v && v < amin(w2, w1 - w2 - w3)) return true;
                 if (amax(w2, w1 - w2 - w3) < v && v < w1 - w2 + w3) return true;
                 if (w1 < v && v < w1 + w2 - w3) return true;
                 return v > w1 + w2 + w3;
             }});

        // ---- 12: Spin(8): multiplicity always zero ----
        add({"spin8_i", 12, 2, "SO8", 0, true,
             {S(base_rep(RK::SO8), 1, 0b01), S(base_rep(RK::SpinSO8p), 1, 0b10),
              S(base_rep(RK::SpinSO8m), 1, 0b11), S(triv(), 1, 0), S(triv(), 1, 0)},
             {},
             {},
             [](const Assignment&) { return false; }});

        // ---- 13: Spin(9) ----
        add({"spin9_i", 13, 1, "SO9", 0, true,
             {S(base_rep(RK::SO9), 1, 0), S(base_rep(RK::SpinSO9), 1, 1), S(triv(), 1, 0)},
             {},
             {},
             [](const Assignment& w) {
                 int64_t w1 = w.tuple[0], w2 = w.tuple[1], w3 = w.tuple[2], w4 = w.tuple[3];
                 return w2 + w3 - w4 < w1 && w1 < w2 + w3 + w4;
             }});

        return v;
    }();
    return shapes;
}

inline std::string render_param(const ArthurShape& shape, const Assignment& w) {
    auto weights_str = [](const std::vector<int64_t>& t, bool trailing_zero) {
        std::string s = "{";
        for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
        if (trailing_zero) s += ",0";
        return s + "}";
    };
    auto rep_str = [&](const RepExpr& r) {
        std::vector<std::string> parts;
        switch (r.kind) {
            case RK::A1Tensor: break;
            case RK::Sp4: parts.push_back("D" + weights_str(w.tuple, false)); break;
            case RK::LamSp4: parts.push_back("L*D" + weights_str(w.tuple, false)); break;
            case RK::Sp6: parts.push_back("D" + weights_str(w.tuple, false)); break;
            case RK::LamSp6: parts.push_back("L*D" + weights_str(w.tuple, false)); break;
            case RK::V14Sp6: parts.push_back("V14'D" + weights_str(w.tuple, false)); break;
            case RK::Sym2Sp6: parts.push_back("Sym2 D" + weights_str(w.tuple, false)); break;
            case RK::SO9: parts.push_back("D" + weights_str(w.tuple, true)); break;
            case RK::SpinSO9: parts.push_back("Spin D" + weights_str(w.tuple, true)); break;
            case RK::SO8: parts.push_back("D" + weights_str(w.tuple, false)); break;
            case RK::SpinSO8p: parts.push_back("Spin+ D" + weights_str(w.tuple, false)); break;
            case RK::SpinSO8m: parts.push_back("Spin- D" + weights_str(w.tuple, false)); break;
            case RK::G2: parts.push_back("D" + weights_str(w.tuple, true)); break;
            case RK::Sym2Sp4: parts.push_back("Sym2 D" + weights_str(w.tuple, false)); break;
        }
        for (auto [k, var] : r.a1) {
            std::string d = "D{" + std::to_string(w.a1[(size_t)var]) + "}";
            parts.push_back(k == 1 ? d : "Sym" + std::to_string(k) + " " + d);
        }
        if (parts.empty()) return std::string();
        if (parts.size() == 1) return parts[0];
        std::string s = "(" + parts[0];
        for (size_t i = 1; i < parts.size(); ++i) s += "x" + parts[i];
        return s + ")";
    };
    std::string out;
    for (size_t i = 0; i < shape.psi.size(); ++i) {
        const Summand& s = shape.psi[i];
        std::string term = rep_str(s.rep);
        if (s.d > 1 || term.empty()) term += "[" + std::to_string(s.d) + "]";
        out += (i ? "+" : "") + term;
    }
    return out;
}

}  // namespace f4aut
