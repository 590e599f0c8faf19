#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <nlohmann/json.hpp>
#include <set>

#include "f4aut/torsion.hpp"

using namespace f4aut;
using nlohmann::json;

namespace {

json load_json(const std::string& name) {
    std::ifstream in(std::string(F4AUT_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    return json::parse(in);
}

}  // namespace

TEST_CASE("enumerate_kac") {
    auto one = enumerate_kac(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].s == std::array<int64_t, 5>{1, 0, 0, 0, 0});

    auto two = enumerate_kac(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].s == std::array<int64_t, 5>{0, 0, 0, 0, 1});
    CHECK(two[1].s == std::array<int64_t, 5>{0, 1, 0, 0, 0});

    for (unsigned m : {6u, 12u, 30u})
        for (const auto& k : enumerate_kac(m)) {
            uint64_t g = 0;
            for (int64_t v : k.s) g = gcd_u64(g, (uint64_t)v);
            CHECK(g == 1);
            CHECK(k.s[0] + 2 * k.s[1] + 3 * k.s[2] + 4 * k.s[3] + 2 * k.s[4] == (int64_t)m);
        }
}

TEST_CASE("charpoly at distinguished classes") {
    const RootDatum& d = build_f4();

    // identity: (X-1)^27
    auto poly_id = charpoly_26(d, KacCoordinates{{1, 0, 0, 0, 0}, 1});
    for (int i = 0; i <= 27; ++i) {
        Rat expect = Rat(binomial(27, (unsigned)i)) * ((27 - i) % 2 ? -1 : 1);
        CHECK(poly_id[(size_t)i].as_rational() == expect);
    }

    // the two order-12 classes share X^27 - X^24 - 2X^15 + 2X^12 + X^3 - 1
    std::map<int, int64_t> expect{{27, 1}, {24, -1}, {15, -2}, {12, 2}, {3, 1}, {0, -1}};
    for (auto kac : {KacCoordinates{{1, 1, 1, 1, 1}, 12}, KacCoordinates{{2, 1, 0, 1, 2}, 12}}) {
        auto poly = charpoly_26(d, kac);
        for (int i = 0; i <= 27; ++i) {
            Rat c = poly[(size_t)i].as_rational();
            auto it = expect.find(i);
            CHECK(c == Rat(it == expect.end() ? 0 : it->second));
        }
    }

    // ...but their adjoint traces differ: 0 and 3
    CHECK(adjoint_trace(d, {{1, 1, 1, 1, 1}, 12}).as_rational() == Rat(0));
    CHECK(adjoint_trace(d, {{2, 1, 0, 1, 2}, 12}).as_rational() == Rat(3));
    CHECK(adjoint_trace(d, {{1, 0, 0, 0, 0}, 1}).as_rational() == Rat(52));
}

TEST_CASE("the 102 rational classes match the bundled table row by row") {
    const auto& classes = rational_classes();
    REQUIRE(classes.size() == 102);

    json table = load_json("rationalclasses.json");
    REQUIRE(table.size() == 102);

    // bundled table is sorted the same way: by order then lexicographic kac
    for (size_t i = 0; i < classes.size(); ++i) {
        const auto& row = table[i];
        for (int j = 0; j < 5; ++j) CHECK(classes[i].kac.s[(size_t)j] == row["kac"][(size_t)j].get<int64_t>());
        CHECK(classes[i].order == row["order"].get<unsigned>());
        CHECK(classes[i].inv.a26 == row["i"][0].get<int64_t>());
        CHECK(classes[i].inv.a25 == row["i"][1].get<int64_t>());
        CHECK(classes[i].inv.a24 == row["i"][2].get<int64_t>());
        CHECK(classes[i].inv.ad_trace == row["i"][3].get<int64_t>());
    }
}

TEST_CASE("invariant quadruples are pairwise distinct") {
    const auto& classes = rational_classes();
    std::set<InvariantQuadruple> seen;
    for (const auto& c : classes) CHECK(seen.insert(c.inv).second);
}

TEST_CASE("identity-class combinatorial identities") {
    auto id = classify_by_invariant({27, 351, 2925, 52});
    REQUIRE(id.has_value());
    CHECK(id->kac.s == std::array<int64_t, 5>{1, 0, 0, 0, 0});
    CHECK(Int(id->inv.a25) == binomial(27, 2));
    CHECK(Int(id->inv.a24) == binomial(27, 3));

    auto inv2 = classify_by_invariant({-5, -1, 45, 20});
    REQUIRE(inv2.has_value());
    CHECK(inv2->kac.s == std::array<int64_t, 5>{0, 0, 0, 0, 1});
    CHECK(inv2->order == 2);

    auto gamma = classify_by_invariant({3, -9, -35, -4});
    REQUIRE(gamma.has_value());
    CHECK(gamma->kac.s == std::array<int64_t, 5>{0, 1, 0, 0, 0});

    CHECK(!classify_by_invariant({0, 0, 0, 0}).has_value());
}

TEST_CASE("a26 equals trace on V26 plus one") {
    const RootDatum& d = build_f4();
    for (size_t i = 0; i < rational_classes().size(); i += 7) {
        const auto& c = rational_classes()[i];
        std::vector<Rat> coeff(c.order, Rat(0));
        for (const auto& [w, mult] : weights_rep26(d).entries) coeff[(size_t)pairing_mod_m(w, c.kac)] += mult;
        Rat tr26 = CycloNumber::from_exponent_coeffs(c.order, coeff).as_rational();
        CHECK(Rat(c.inv.a26) == tr26 + 1);
    }
}

TEST_CASE("galois stability of rational class data") {
    const RootDatum& d = build_f4();
    for (size_t i = 0; i < rational_classes().size(); i += 11) {
        const auto& c = rational_classes()[i];
        unsigned m = c.order;
        for (unsigned k = 2; k < m; ++k) {
            if (gcd_u64(k, m) != 1) continue;
            // substituting zeta -> zeta^k rescales every exponent; the
            // invariants must not move
            KacCoordinates twisted{{c.kac.s[0], 0, 0, 0, 0}, m};
            for (int j = 1; j < 5; ++j) twisted.s[(size_t)j] = (c.kac.s[(size_t)j] * k) % m;
            CHECK(adjoint_trace(d, twisted).as_rational() == Rat(c.inv.ad_trace));
            break;  // one nontrivial twist per class keeps the test quick
        }
    }
}
