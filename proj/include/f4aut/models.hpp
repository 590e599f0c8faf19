#pragma once

#include <random>

#include "charform.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "liealg.hpp"
#include "permgrp.hpp"

namespace f4aut {

// Everything needed to work with one of the two integral models: matrix
// generators, the faithful short-vector permutation action, and the modular
// machinery that recovers fingerprints from permutations.
class ModelContext {
public:
    ModelContext(Model model, const std::string& data_dir)
        : model_(model), fp_(model) {
        std::array<Jor, 27> basis{};
        for (int i = 0; i < 27; ++i) basis[(size_t)i][(size_t)i] = 1;
        GramMatrix gram(27, std::vector<int64_t>(27));
        if (model == Model::I) {
            generators_ = generators_model_I();
            for (int i = 0; i < 27; ++i)
                for (int j = 0; j < 27; ++j)
                    gram[(size_t)i][(size_t)j] = bilinear_Q(basis[(size_t)i], basis[(size_t)j]);
            domain_ = to_jor(short_vectors(gram, 2));
        } else {
            auto gen_json = load_json_file(data_dir + "/generators.json");
            generators_.push_back(mat27_from_json(gen_json["sigma1"]));
            generators_.push_back(mat27_from_json(gen_json["sigma2"]));
            for (int i = 0; i < 27; ++i)
                for (int j = 0; j < 27; ++j)
                    gram[(size_t)i][(size_t)j] = bilinear_E(basis[(size_t)i], basis[(size_t)j]);
            domain_ = to_jor(vectors_of_norm(gram, 3));
        }
        action_ = induce_action(generators_, domain_);
        pick_probe();
    }

    Model model() const { return model_; }
    const std::vector<Mat27>& generators() const { return generators_; }
    const PermAction& action() const { return action_; }
    const Fingerprinter& fingerprinter() const { return fp_; }

    Int expected_order() const {
        GroupOrders g;
        return model_ == Model::I ? g.order1 : g.order2;
    }

    // reconstruct the matrix of a permutation mod p from 27 probe vectors
    std::vector<int64_t> matrix_mod(const Perm& perm, int64_t p, const std::vector<int64_t>& vinv) const {
        std::vector<int64_t> vim(27 * 27);
        for (int c = 0; c < 27; ++c) {
            const Jor& img = action_.domain[(size_t)perm[(size_t)probe_[(size_t)c]]];
            for (int r = 0; r < 27; ++r) vim[(size_t)(27 * r + c)] = ((img[(size_t)r] % p) + p) % p;
        }
        std::vector<int64_t> m(27 * 27, 0);
        for (int i = 0; i < 27; ++i)
            for (int k = 0; k < 27; ++k) {
                int64_t v = vim[(size_t)(27 * i + k)];
                if (!v) continue;
                for (int j = 0; j < 27; ++j)
                    m[(size_t)(27 * i + j)] =
                        (int64_t)((m[(size_t)(27 * i + j)] + (__int128)v * vinv[(size_t)(27 * k + j)]) % p);
            }
        return m;
    }

    const std::vector<int64_t>& vinv_p1() const { return vinv_p1_; }

    // (a26, a25, a24) recovered exactly from power traces mod p
    static std::array<int64_t, 3> charpoly_triple_mod(const std::vector<int64_t>& m, int64_t p) {
        auto mulm = [p](const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
            std::vector<int64_t> r(27 * 27, 0);
            for (int i = 0; i < 27; ++i)
                for (int k = 0; k < 27; ++k) {
                    int64_t v = a[(size_t)(27 * i + k)];
                    if (!v) continue;
                    for (int j = 0; j < 27; ++j)
                        r[(size_t)(27 * i + j)] =
                            (int64_t)((r[(size_t)(27 * i + j)] + (__int128)v * b[(size_t)(27 * k + j)]) % p);
                }
            return r;
        };
        std::vector<int64_t> m2 = mulm(m, m), m3 = mulm(m2, m);
        int64_t p1 = 0, p2 = 0, p3 = 0;
        for (int i = 0; i < 27; ++i) {
            p1 = (p1 + m[(size_t)(28 * i)]) % p;
            p2 = (p2 + m2[(size_t)(28 * i)]) % p;
            p3 = (p3 + m3[(size_t)(28 * i)]) % p;
        }
        int64_t inv2 = modp::inv_mod(2, p), inv6 = modp::inv_mod(6, p);
        int64_t e1 = p1;
        int64_t e2 = (int64_t)((__int128)(((p1 * (__int128)p1 - p2) % p + p) % p) * inv2 % p);
        __int128 cube = (__int128)p1 * p1 % p * p1 % p;
        __int128 t = ((cube - 3 * (__int128)p1 * p2 % p + 2 * (__int128)p3) % p + p) % p;
        int64_t e3 = (int64_t)(t % p * inv6 % p);
        // |a26| <= 27, |a25| <= 351, |a24| <= 2925: recover in symmetric range
        return {modp::recover_symmetric(e1, p), modp::recover_symmetric(e2, p), modp::recover_symmetric(e3, p)};
    }

    // full fingerprint of a permutation (adjoint trace only when the
    // charpoly triple is ambiguous and `table_triples` offers candidates)
    InvariantQuadruple fingerprint_perm(const Perm& perm) const {
        int64_t p = fp_.kernel().p();
        std::vector<int64_t> m = matrix_mod(perm, p, vinv_p1_);
        auto triple = charpoly_triple_mod(m, p);
        std::vector<int64_t> minv = matrix_mod(perm_inverse(perm), p, vinv_p1_);
        int64_t adt = fp_.ad_trace(m, minv);
        return InvariantQuadruple{triple[0], triple[1], triple[2], adt};
    }

    static Mat27 mat27_from_json(const nlohmann::json& rows) {
        Mat27 m(27);
        for (int i = 0; i < 27; ++i)
            for (int j = 0; j < 27; ++j) m[(size_t)i][(size_t)j] = rows[(size_t)i][(size_t)j].get<int64_t>();
        return m;
    }

private:
    Model model_;
    std::vector<Mat27> generators_;
    std::vector<Jor> domain_;
    PermAction action_;
    Fingerprinter fp_;
    std::array<int32_t, 27> probe_{};
    std::vector<int64_t> vinv_p1_;

    static std::vector<Jor> to_jor(const std::vector<std::vector<int64_t>>& vs) {
        std::vector<Jor> out;
        out.reserve(vs.size());
        for (const auto& v : vs) {
            Jor j{};
            for (int i = 0; i < 27; ++i) j[(size_t)i] = v[(size_t)i];
            out.push_back(j);
        }
        return out;
    }

    void pick_probe() {
        const int64_t p = fp_.kernel().p();
        // greedy mod-p column selection until rank 27
        std::vector<std::vector<int64_t>> rows;
        std::vector<int> lead;
        int found = 0;
        for (size_t idx = 0; idx < action_.domain.size() && found < 27; ++idx) {
            std::vector<int64_t> v(27);
            for (int i = 0; i < 27; ++i) v[(size_t)i] = ((action_.domain[idx][(size_t)i] % p) + p) % p;
            std::vector<int64_t> w = v;
            for (size_t r = 0; r < rows.size(); ++r) {
                int64_t f = w[(size_t)lead[r]];
                if (!f) continue;
                for (int i = 0; i < 27; ++i)
                    w[(size_t)i] = (int64_t)(((w[(size_t)i] - (__int128)f * rows[r][(size_t)i]) % p + p) % p);
            }
            int l = -1;
            for (int i = 0; i < 27; ++i)
                if (w[(size_t)i]) {
                    l = i;
                    break;
                }
            if (l < 0) continue;
            int64_t inv = modp::inv_mod(w[(size_t)l], p);
            for (int i = 0; i < 27; ++i) w[(size_t)i] = (int64_t)((__int128)w[(size_t)i] * inv % p);
            rows.push_back(std::move(w));
            lead.push_back(l);
            probe_[(size_t)found++] = (int32_t)idx;
        }
        if (found != 27) throw std::logic_error("short vectors do not span");
        // invert V (columns = probe vectors) mod p
        std::vector<int64_t> v(27 * 27);
        for (int c = 0; c < 27; ++c)
            for (int r = 0; r < 27; ++r)
                v[(size_t)(27 * r + c)] = ((action_.domain[(size_t)probe_[(size_t)c]][(size_t)r] % p) + p) % p;
        vinv_p1_ = Fingerprinter::invert_mod_matrix(v, p);
    }
};

struct HistogramRow {
    size_t class_index;  // into the class-count table
    int64_t observed;
    // exact z-score bound check: (obs*D - N*n)^2 <= z^2 * N * n * (D - n)
    bool within(const Int& samples, const Int& n, const Int& order, int z) const {
        Int lhs = (Int(observed) * order - samples * n);
        return lhs * lhs <= Int(z) * z * samples * n * (order - n);
    }
};

struct ClassHistogram {
    std::vector<int64_t> counts;  // aligned with the class-count table rows
    int64_t samples = 0;
    int64_t unknown = 0;
};

// Monte-Carlo class-distribution sample: uniform elements via the chain,
// fingerprint classification against the bundled table.
inline ClassHistogram class_histogram(const ModelContext& ctx, const StabilizerChain& chain,
                                      const std::vector<ClassCountRecord>& table, int64_t samples,
                                      uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::map<InvariantQuadruple, size_t> lookup;
    for (size_t i = 0; i < table.size(); ++i) lookup[table[i].inv] = i;
    // triples that identify a class without the adjoint trace
    std::map<std::array<int64_t, 3>, int> triple_count;
    for (const auto& row : table) ++triple_count[{row.inv.a26, row.inv.a25, row.inv.a24}];
    // classes outside the table can still carry a unique triple among the 102
    for (const auto& c : rational_classes()) {
        std::array<int64_t, 3> t{c.inv.a26, c.inv.a25, c.inv.a24};
        if (!lookup.count(c.inv)) ++triple_count[t];
    }
    std::map<std::array<int64_t, 3>, size_t> unique_class;
    for (size_t i = 0; i < table.size(); ++i) {
        std::array<int64_t, 3> t{table[i].inv.a26, table[i].inv.a25, table[i].inv.a24};
        if (triple_count[t] == 1) unique_class[t] = i;
    }

    ClassHistogram h;
    h.counts.assign(table.size(), 0);
    h.samples = samples;
    int64_t p = ctx.fingerprinter().kernel().p();
    for (int64_t s = 0; s < samples; ++s) {
        Perm g = chain.random_element(rng);
        std::vector<int64_t> m = ctx.matrix_mod(g, p, ctx.vinv_p1());
        auto triple = ModelContext::charpoly_triple_mod(m, p);
        auto uit = unique_class.find(triple);
        if (uit != unique_class.end()) {
            ++h.counts[uit->second];
            continue;
        }
        std::vector<int64_t> minv = ctx.matrix_mod(perm_inverse(g), p, ctx.vinv_p1());
        int64_t adt = ctx.fingerprinter().ad_trace(m, minv);
        auto it = lookup.find(InvariantQuadruple{triple[0], triple[1], triple[2], adt});
        if (it == lookup.end()) {
            ++h.unknown;
            continue;
        }
        ++h.counts[it->second];
    }
    return h;
}

}  // namespace f4aut
