#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "f4aut/charform.hpp"
#include "f4aut/io.hpp"

using namespace f4aut;

namespace {

const std::vector<ClassCountRecord>& classtable() {
    static auto t = load_classtable(default_data_dir());
    return t;
}

}  // namespace

TEST_CASE("centralizer data") {
    const RootDatum& d = build_f4();

    CentralizerData id = centralizer_data(d, {{1, 0, 0, 0, 0}, 1});
    CHECK(id.phi_m_plus.size() == 24);
    CHECK(id.w_m.size() == 1);

    // a regular torsion element: no root pairing vanishes mod m
    KacCoordinates reg{{1, 1, 1, 1, 1}, 12};
    bool regular = true;
    for (const Vec4& a : d.positive_roots)
        if (pairing_mod_m(a, reg) == 0) regular = false;
    CHECK(regular);
    CentralizerData cr = centralizer_data(d, reg);
    CHECK(cr.phi_m_plus.empty());
    CHECK(cr.w_m.size() == 1152);

    for (const auto& row : classtable()) {
        CentralizerData cd = centralizer_data(d, row.kac);
        CHECK(1152 % cd.w_m.size() == 0);
    }
}

TEST_CASE("trace examples") {
    const RootDatum& d = build_f4();
    DominantWeight zero = d.weight(0, 0, 0, 0);
    DominantWeight w4 = d.weight(0, 0, 0, 1);
    DominantWeight w1 = d.weight(1, 0, 0, 0);

    for (const auto& c : rational_classes())
        CHECK(trace(d, zero, c.kac) == Rat(1));

    CHECK(trace(d, w4, {{0, 0, 0, 0, 1}, 2}) == Rat(-6));
    CHECK(trace(d, w4, {{1, 0, 0, 0, 0}, 1}) == Rat(26));
    CHECK(trace(d, w1, {{1, 0, 0, 0, 0}, 1}) == Rat(52));
}

TEST_CASE("dimension formula") {
    const RootDatum& d = build_f4();
    CHECK(dim_rep(d, d.weight(0, 0, 0, 0)) == 1);
    CHECK(dim_rep(d, d.weight(0, 0, 0, 1)) == 26);
    CHECK(dim_rep(d, d.weight(1, 0, 0, 0)) == 52);
    CHECK(dim_rep(d, d.weight(0, 0, 1, 0)) == 273);
    CHECK(dim_rep(d, d.weight(0, 0, 0, 2)) == 324);
}

TEST_CASE("oracle: trace equals direct weight sum on the named representations") {
    const RootDatum& d = build_f4();
    auto direct = [&](const WeightMultiset& wm, const KacCoordinates& s) {
        std::vector<Rat> coeff(s.m, Rat(0));
        for (const auto& [w, mult] : wm.entries) coeff[(size_t)pairing_mod_m(w, s)] += mult;
        return CycloNumber::from_exponent_coeffs(s.m, std::move(coeff));
    };
    WeightMultiset w26 = weights_rep26(d), wad = weights_adjoint(d);
    DominantWeight l26 = d.weight(0, 0, 0, 1), lad = d.weight(1, 0, 0, 0);
    for (const auto& c : rational_classes()) {
        CHECK(trace_cyclo(d, l26, c.kac) == direct(w26, c.kac));
        CHECK(trace_cyclo(d, lad, c.kac) == direct(wad, c.kac));
    }
}

TEST_CASE("trace is independent of a global rescaling of the form") {
    const RootDatum& d = build_f4();
    DominantWeight l = d.weight(1, 0, 2, 1);
    for (const auto& kac : {KacCoordinates{{0, 1, 0, 0, 0}, 2}, KacCoordinates{{1, 1, 0, 0, 1}, 5},
                            KacCoordinates{{2, 0, 2, 1, 0}, 12}})
        CHECK(trace_cyclo(d, l, kac, 1) == trace_cyclo(d, l, kac, 3));
}

TEST_CASE("group orders and mass identity") {
    GroupOrders g;
    CHECK(g.order1 == Int("4180377600"));
    CHECK(g.order2 == Int("634023936"));
    Rat denom = Rat(Int(1) << 15) * 729 * 25 * 49 * 13;
    CHECK(g.mass() == Rat(691) / denom);

    Int n1 = 0, n2 = 0;
    for (const auto& r : classtable()) {
        n1 += r.n1;
        n2 += r.n2;
    }
    CHECK(n1 == g.order1);
    CHECK(n2 == g.order2);
}

TEST_CASE("invariant dimensions at pinned weights") {
    const RootDatum& d = build_f4();
    auto dims0 = dims_invariants(d, d.weight(0, 0, 0, 0), classtable());
    CHECK(dims0.d1 == 1);
    CHECK(dims0.d2 == 1);
    CHECK(dims0.d == 2);

    CHECK(dims_invariants(d, d.weight(0, 0, 0, 2), classtable()).d == 1);

    auto dims6 = dims_invariants(d, d.weight(0, 0, 0, 6), classtable());
    CHECK(dims6.d1 == 2);
    CHECK(dims6.d2 == 1);
    CHECK(dims6.d == 3);
}

TEST_CASE("partial reproduction of the nonzero-dimension table") {
    const RootDatum& d = build_f4();
    auto table = load_json_file(default_data_dir() + "/nonzero_dims.json");
    std::map<std::array<int64_t, 4>, int64_t> expected;
    for (const auto& row : table)
        expected[{row["lambda"][0], row["lambda"][1], row["lambda"][2], row["lambda"][3]}] =
            row["d"].get<int64_t>();

    // sweep the low range here; the full range runs in the acceptance suite
    for (int64_t l1 = 0; 2 * l1 <= 8; ++l1)
        for (int64_t l2 = 0; 2 * l1 + 3 * l2 <= 8; ++l2)
            for (int64_t l3 = 0; 2 * l1 + 3 * l2 + 2 * l3 <= 8; ++l3)
                for (int64_t l4 = 0; 2 * l1 + 3 * l2 + 2 * l3 + l4 <= 8; ++l4) {
                    auto dd = dims_invariants(d, d.weight(l1, l2, l3, l4), classtable());
                    auto it = expected.find({l1, l2, l3, l4});
                    // the published table omits the trivial representation, which
                    // contributes d(0) = 1 + 1
                    Int want = (it == expected.end()) ? 0 : it->second;
                    if (l1 == 0 && l2 == 0 && l3 == 0 && l4 == 0) want = 2;
                    INFO(l1 << "," << l2 << "," << l3 << "," << l4);
                    CHECK(dd.d == want);
                }
}

TEST_CASE("theta tables, spot rows") {
    const RootDatum& d = build_f4();
    auto a6 = dims_invariants(d, d.weight(0, 0, 0, 6), classtable());
    CHECK(a6.d1 == 2);
    CHECK(a6.d2 == 1);
    auto a18 = dims_invariants(d, d.weight(0, 0, 0, 18), classtable());
    CHECK(a18.d1 == 37);
    CHECK(a18.d2 == 58);
    auto g8 = dims_invariants(d, d.weight(0, 0, 8, 0), classtable());
    CHECK(g8.d1 == 32);
    CHECK(g8.d2 == 136);
}

TEST_CASE("integrality sweep on random dominant weights") {
    const RootDatum& d = build_f4();
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int64_t> coord(0, 12);
    for (int trial = 0; trial < 40; ++trial) {
        DominantWeight l = d.weight(coord(rng), coord(rng), coord(rng), coord(rng));
        auto dd = dims_invariants(d, l, classtable());  // throws if non-integral
        CHECK(dd.d >= 0);
    }
}
