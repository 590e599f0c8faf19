#include <catch2/catch_amalgamated.hpp>

#include "f4aut/models.hpp"

using namespace f4aut;

TEST_CASE("induce_action basics") {
    std::vector<Jor> vecs;
    for (int i = 0; i < 4; ++i) {
        Jor v{};
        v[(size_t)i] = 1;
        vecs.push_back(v);
        Jor w{};
        w[(size_t)i] = -1;
        vecs.push_back(w);
    }
    Mat27 id(27);
    for (int i = 0; i < 27; ++i) id[(size_t)i][(size_t)i] = 1;
    PermAction act = induce_action({id}, vecs);
    CHECK(perm_is_identity(act.gens[0]));

    Mat27 twice(27);
    for (int i = 0; i < 27; ++i) twice[(size_t)i][(size_t)i] = 2;
    CHECK_THROWS_AS(induce_action({twice}, vecs), NotStable);
}

TEST_CASE("schreier-sims on an S3 fixture") {
    // permutation matrices acting on the three diagonal coordinates
    Mat27 swap01(27), cyc(27);
    for (int i = 0; i < 27; ++i) {
        swap01[(size_t)i][(size_t)i] = (i < 2) ? 0 : 1;
        cyc[(size_t)i][(size_t)i] = (i < 3) ? 0 : 1;
    }
    swap01[0][1] = swap01[1][0] = 1;
    cyc[0][2] = cyc[1][0] = cyc[2][1] = 1;
    std::vector<Jor> pts = {jordan_E(0), jordan_E(1), jordan_E(2)};
    PermAction act = induce_action({swap01, cyc}, pts);
    StabilizerChain chain(act);
    CHECK(chain.order() == 6);

    // membership: all products sift to the identity
    Perm a = act.gens[0], b = act.gens[1];
    for (const Perm& g : {a, b, perm_compose(a, b), perm_compose(b, a), perm_compose(b, b)})
        CHECK(chain.contains(g));

    // the sampler hits every element; counts deterministic for a fixed seed
    std::mt19937_64 rng(7);
    std::map<Perm, int> hits;
    for (int i = 0; i < 600; ++i) ++hits[chain.random_element(rng)];
    CHECK(hits.size() == 6);
    for (auto& [g, c] : hits) CHECK((c > 60 && c < 140));

    // empty generator set: trivial group
    PermAction none{pts, {}};
    CHECK(StabilizerChain(none).order() == 1);
}

TEST_CASE("model E: order and membership") {
    ModelContext ctx(Model::E, default_data_dir());
    CHECK(ctx.action().domain.size() == 1640);
    StabilizerChain chain(ctx.action());
    CHECK(chain.order() == Int("634023936"));  // 2^12 3^5 7^2 13

    std::mt19937_64 rng(11);
    for (int t = 0; t < 5; ++t) {
        Perm g = chain.random_element(rng);
        for (int k = 0; k < 8; ++k) g = perm_compose(g, ctx.action().gens[rng() % ctx.action().gens.size()]);
        CHECK(chain.contains(g));
    }
}

TEST_CASE("model I: order") {
    ModelContext ctx(Model::I, default_data_dir());
    CHECK(ctx.action().domain.size() == 738);
    StabilizerChain chain(ctx.action());
    CHECK(chain.order() == Int("4180377600"));  // 2^15 3^6 5^2 7
}

TEST_CASE("sampled fingerprints stay inside the class table") {
    auto table = load_classtable(default_data_dir());
    ModelContext ctx(Model::E, default_data_dir());
    StabilizerChain chain(ctx.action());
    ClassHistogram h = class_histogram(ctx, chain, table, 3000, 20240601);
    CHECK(h.unknown == 0);
    // every observed class must actually meet model E
    for (size_t i = 0; i < table.size(); ++i)
        if (h.counts[i] > 0) CHECK(table[i].n2 > 0);
    // identity class: expected frequency 1/|Gamma|, so 0 hits here
    for (size_t i = 0; i < table.size(); ++i)
        if (table[i].kac.s == std::array<int64_t, 5>{1, 0, 0, 0, 0}) CHECK(h.counts[i] == 0);
}

TEST_CASE("fingerprint via permutation agrees with the matrix fingerprint") {
    ModelContext ctx(Model::E, default_data_dir());
    StabilizerChain chain(ctx.action());
    // generators have known matrices: compare both fingerprint routes
    for (size_t gi = 0; gi < ctx.generators().size(); ++gi) {
        InvariantQuadruple from_matrix = ctx.fingerprinter().fingerprint(ctx.generators()[gi]);
        InvariantQuadruple from_perm = ctx.fingerprint_perm(ctx.action().gens[gi]);
        CHECK(from_matrix == from_perm);
    }
}
