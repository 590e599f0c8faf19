#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "f4aut/io.hpp"
#include "f4aut/jordan.hpp"
#include "f4aut/lattice.hpp"
#include "f4aut/liealg.hpp"

using namespace f4aut;

namespace {

Mat27 mat27_from_json(const nlohmann::json& rows) {
    Mat27 m(27);
    for (int i = 0; i < 27; ++i)
        for (int j = 0; j < 27; ++j) m[(size_t)i][(size_t)j] = rows[(size_t)i][(size_t)j].get<int64_t>();
    return m;
}

Jor random_jordan(std::mt19937& rng, int span = 3) {
    std::uniform_int_distribution<int64_t> d(-span, span);
    Jor v{};
    for (auto& c : v) c = d(rng);
    return v;
}

Mat27 mat27_mul(const Mat27& a, const Mat27& b) {
    Mat27 r(27);
    for (int i = 0; i < 27; ++i)
        for (int k = 0; k < 27; ++k) {
            int64_t v = a[(size_t)i][(size_t)k];
            if (!v) continue;
            for (int j = 0; j < 27; ++j) r[(size_t)i][(size_t)j] += v * b[(size_t)k][(size_t)j];
        }
    return r;
}

}  // namespace

TEST_CASE("octonion multiplication") {
    const auto& alg = OctonionAlgebra::get();
    Oct one{1, 0, 0, 0, 0, 0, 0, 0}, e1{0, 1, 0, 0, 0, 0, 0, 0}, e2{0, 0, 1, 0, 0, 0, 0, 0};
    Oct h1{0, 0, 0, 0, 1, 0, 0, 0};

    // e1 e2 = e4 = 2h1 - 1 - e1 - e2
    Oct e4 = oct_mul(e1, e2);
    CHECK(e4 == Oct{-1, -1, -1, 0, 2, 0, 0, 0});
    CHECK(oct_mul(e1, e1) == Oct{-1, 0, 0, 0, 0, 0, 0, 0});
    // h1^2 = h1 - 1
    CHECK(oct_mul(h1, h1) == Oct{-1, 0, 0, 0, 1, 0, 0, 0});

    CHECK(oct_norm(one) == 1);
    CHECK(oct_norm(h1) == 1);
    CHECK(alg.roots().size() == 240);

    // conjugation is an anti-involution; N is multiplicative
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int64_t> d(-3, 3);
    for (int t = 0; t < 200; ++t) {
        Oct x{}, y{};
        for (int i = 0; i < 8; ++i) {
            x[i] = d(rng);
            y[i] = d(rng);
        }
        CHECK(oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y));
        CHECK(oct_conj(oct_mul(x, y)) == oct_mul(oct_conj(y), oct_conj(x)));
        CHECK(oct_conj(oct_conj(x)) == x);
    }
}

TEST_CASE("jordan product basics") {
    std::mt19937 rng(99);
    Jor I = jordan_identity();
    for (int t = 0; t < 30; ++t) {
        Jor a = random_jordan(rng);
        JorRat ia = jordan_mul(I, a);
        for (int i = 0; i < 27; ++i) CHECK(ia[(size_t)i] == Rat(a[(size_t)i]));
    }
    Jor e1 = jordan_E(0);
    JorRat sq = jordan_mul(e1, e1);
    for (int i = 0; i < 27; ++i) CHECK(sq[(size_t)i] == Rat(e1[(size_t)i]));

    // F1(x) o F1(x) = N(x) (E2 + E3)
    for (int t = 0; t < 20; ++t) {
        Oct x{};
        std::uniform_int_distribution<int64_t> d(-3, 3);
        for (int i = 0; i < 8; ++i) x[i] = d(rng);
        JorRat p = jordan_mul(jordan_F(0, x), jordan_F(0, x));
        Rat n = Rat(oct_norm(x));
        for (int i = 0; i < 27; ++i) {
            Rat want = (i == 1 || i == 2) ? n : Rat(0);
            CHECK(p[(size_t)i] == want);
        }
    }
    // commutativity
    for (int t = 0; t < 20; ++t) {
        Jor a = random_jordan(rng), b = random_jordan(rng);
        CHECK(jordan_mul(a, b) == jordan_mul(b, a));
    }
}

TEST_CASE("cubic form") {
    CHECK(det3(jordan_identity()) == 1);
    CHECK(det3(jordan_polarization_E()) == 1);
    CHECK(det3(jordan_E(0)) == 0);
}

TEST_CASE("bilinear forms against the bundled gram matrix") {
    auto gram_json = load_json_file(default_data_dir() + "/gram_E.json")["gram"];
    std::array<Jor, 27> basis{};
    for (int i = 0; i < 27; ++i) basis[(size_t)i][(size_t)i] = 1;
    for (int i = 0; i < 27; ++i)
        for (int j = 0; j < 27; ++j) {
            INFO(i << " " << j);
            CHECK(bilinear_E(basis[(size_t)i], basis[(size_t)j]) == gram_json[(size_t)i][(size_t)j].get<int64_t>());
        }
    CHECK(bilinear_E(basis[0], basis[0]) == 4);
    CHECK(bilinear_E(basis[0], basis[3]) == -3);
    CHECK(bilinear_Q(basis[0], basis[0]) == 1);
}

TEST_CASE("short vectors") {
    std::array<Jor, 27> basis{};
    for (int i = 0; i < 27; ++i) basis[(size_t)i][(size_t)i] = 1;
    GramMatrix gq(27, std::vector<int64_t>(27)), ge(27, std::vector<int64_t>(27));
    for (int i = 0; i < 27; ++i)
        for (int j = 0; j < 27; ++j) {
            gq[(size_t)i][(size_t)j] = bilinear_Q(basis[(size_t)i], basis[(size_t)j]);
            ge[(size_t)i][(size_t)j] = bilinear_E(basis[(size_t)i], basis[(size_t)j]);
        }
    auto v738 = short_vectors(gq, 2);
    CHECK(v738.size() == 738);
    // decomposition 720 + 6 + 12 along J = D0 + D
    int diag1 = 0, diag2 = 0, off = 0;
    for (auto& v : v738) {
        bool has_diag = v[0] || v[1] || v[2];
        bool has_off = false;
        for (int i = 3; i < 27; ++i) has_off = has_off || v[(size_t)i];
        if (has_diag && !has_off) {
            int64_t q = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
            (q == 1 ? diag1 : diag2)++;
        } else if (!has_diag && has_off)
            ++off;
        else
            FAIL("vector mixes the diagonal and off-diagonal sublattices");
    }
    CHECK(off == 720);
    CHECK(diag1 == 6);
    CHECK(diag2 == 12);

    CHECK(vectors_of_norm(ge, 3).size() == 1640);
    CHECK(short_vectors(gq, 0).empty());
}

TEST_CASE("model I generators preserve det and I") {
    auto gens = generators_model_I();
    CHECK(gens.size() == 243);
    Jor I = jordan_identity();
    std::mt19937 rng(5);
    for (size_t i = 0; i < gens.size(); i += 17) verify_group_element(gens[i], I);
    // g_(12) has order 2
    const Mat27& g12 = gens[240];
    Mat27 sq = mat27_mul(g12, g12);
    for (int i = 0; i < 27; ++i)
        for (int j = 0; j < 27; ++j) CHECK(sq[(size_t)i][(size_t)j] == (i == j ? 1 : 0));
    // -identity does not fix I
    Mat27 neg(27);
    for (int i = 0; i < 27; ++i) neg[(size_t)i][(size_t)i] = -1;
    CHECK(check_group_element(neg, I).has_value());

    // det3(g A) = det3(A) on random points
    std::uniform_int_distribution<int64_t> d(-4, 4);
    for (int t = 0; t < 100; ++t) {
        Jor a = random_jordan(rng, 4);
        const Mat27& g = gens[(size_t)(rng() % gens.size())];
        Jor ga{};
        for (int i = 0; i < 27; ++i) {
            int64_t s = 0;
            for (int j = 0; j < 27; ++j) s += g[(size_t)i][(size_t)j] * a[(size_t)j];
            ga[(size_t)i] = s;
        }
        CHECK(det3(ga) == det3(a));
    }
}

TEST_CASE("isotopy triple identity on basis pairs") {
    const auto& alg = OctonionAlgebra::get();
    // conj(alpha(x) beta(y)) = gamma(conj(xy)) for the triple of alpha = e1
    Oct alpha{0, 1, 0, 0, 0, 0, 0, 0};
    Oct abar = alg.conj(alpha);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Oct x{}, y{};
            x[i] = 1;
            y[j] = 1;
            Oct lhs = alg.conj(alg.mul(alg.mul(abar, x), alg.mul(y, abar)));
            Oct rhs = alg.mul(alpha, alg.mul(alg.conj(alg.mul(x, y)), alpha));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("bundled model E generators verify against det and E") {
    auto gen_json = load_json_file(default_data_dir() + "/generators.json");
    Mat27 s1 = mat27_from_json(gen_json["sigma1"]);
    Mat27 s2 = mat27_from_json(gen_json["sigma2"]);
    const Jor& E = jordan_polarization_E();
    verify_group_element(s1, E);
    verify_group_element(s2, E);
}

TEST_CASE("fingerprints of explicit elements") {
    Fingerprinter fpI(Model::I);

    Mat27 id(27);
    for (int i = 0; i < 27; ++i) id[(size_t)i][(size_t)i] = 1;
    CHECK(fpI.fingerprint(id) == InvariantQuadruple{27, 351, 2925, 52});
    CHECK(fpI.ad_trace_checked(id) == 52);

    // sigma: [a,b,c;x,-y,-z] -> table row (0,0,0,0,1)
    Mat27 sig(27);
    for (int i = 0; i < 11; ++i) sig[(size_t)i][(size_t)i] = 1;
    for (int i = 11; i < 27; ++i) sig[(size_t)i][(size_t)i] = -1;
    verify_group_element(sig, jordan_identity());
    CHECK(fpI.fingerprint(sig) == InvariantQuadruple{-5, -1, 45, 20});
    CHECK(fpI.ad_trace_checked(sig) == 20);

    // gamma of order 2 with trace (3,-9,-35,-4): table row (0,1,0,0,0)
    // realised inside model I by the isotopy triple of alpha = e1 squared?
    // use instead the central triple composed with sigma twists: simplest is
    // the element [a,b,c; -x, -y, z] (the central triple), matching which row
    // the classifier decides.
    auto gens = generators_model_I();
    const Mat27& central = gens.back();
    auto q = fpI.fingerprint(central);
    auto cls = classify_by_invariant(q);
    REQUIRE(cls.has_value());
    CHECK(cls->order == 2);

    Fingerprinter fpE(Model::E);
    CHECK(fpE.fingerprint(id) == InvariantQuadruple{27, 351, 2925, 52});
    auto gen_json = load_json_file(default_data_dir() + "/generators.json");
    auto qs1 = fpE.fingerprint(mat27_from_json(gen_json["sigma1"]));
    CHECK(classify_by_invariant(qs1).has_value());
    auto qs2 = fpE.fingerprint(mat27_from_json(gen_json["sigma2"]));
    CHECK(classify_by_invariant(qs2).has_value());
}

TEST_CASE("fingerprints of generator products stay in the rational-class table") {
    Fingerprinter fp(Model::I);
    auto gens = generators_model_I();
    std::mt19937 rng(31337);
    Mat27 cur(27);
    for (int i = 0; i < 27; ++i) cur[(size_t)i][(size_t)i] = 1;
    for (int t = 0; t < 60; ++t) {
        cur = mat27_mul(cur, gens[(size_t)(rng() % gens.size())]);
        auto q = fp.fingerprint(cur);
        INFO(t);
        CHECK(classify_by_invariant(q).has_value());
    }
}
