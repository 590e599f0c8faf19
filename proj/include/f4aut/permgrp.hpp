#pragma once

#include <deque>
#include <map>
#include <random>
#include <vector>

#include "jordan.hpp"
#include "liealg.hpp"

namespace f4aut {

struct NotStable : std::runtime_error {
    NotStable() : std::runtime_error("generator does not preserve the vector set") {}
};
struct UnknownClass : std::runtime_error {
    explicit UnknownClass(const std::string& s) : std::runtime_error("fingerprint outside the class table: " + s) {}
};

using Perm = std::vector<int32_t>;

inline Perm perm_compose(const Perm& f, const Perm& g) {  // (f o g)(x) = f(g(x))
    Perm r(f.size());
    for (size_t i = 0; i < g.size(); ++i) r[i] = f[(size_t)g[i]];
    return r;
}
inline Perm perm_inverse(const Perm& f) {
    Perm r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[(size_t)f[i]] = (int32_t)i;
    return r;
}
inline bool perm_is_identity(const Perm& f) {
    for (size_t i = 0; i < f.size(); ++i)
        if (f[i] != (int32_t)i) return false;
    return true;
}

struct PermAction {
    std::vector<Jor> domain;
    std::vector<Perm> gens;
};

// Permutations induced by integral linear maps on an ordered vector set.
inline PermAction induce_action(const std::vector<Mat27>& gens, std::vector<Jor> vectors) {
    std::sort(vectors.begin(), vectors.end());
    std::map<Jor, int32_t> index;
    for (size_t i = 0; i < vectors.size(); ++i) index[vectors[i]] = (int32_t)i;
    PermAction act;
    act.domain = std::move(vectors);
    for (const Mat27& g : gens) {
        Perm p(act.domain.size());
        std::vector<bool> hit(act.domain.size(), false);
        for (size_t v = 0; v < act.domain.size(); ++v) {
            Jor im{};
            for (int i = 0; i < 27; ++i) {
                int64_t s = 0;
                for (int j = 0; j < 27; ++j) s += g[(size_t)i][(size_t)j] * act.domain[v][(size_t)j];
                im[(size_t)i] = s;
            }
            auto it = index.find(im);
            if (it == index.end()) throw NotStable();
            p[v] = it->second;
            if (hit[(size_t)it->second]) throw NotStable();
            hit[(size_t)it->second] = true;
        }
        act.gens.push_back(std::move(p));
    }
    return act;
}

// Stabilizer chain with explicit transversals and nested strong generator
// sets: a generator of depth d takes part in every level <= d.  Generators
// are inserted one at a time (redundant ones sift away), and the Schreier
// pairs of every level are drained, so the final order is proven, not
// sampled.
class StabilizerChain {
public:
    explicit StabilizerChain(const PermAction& action) : n_((int32_t)action.domain.size()) {
        for (const Perm& g : action.gens) {
            if (perm_is_identity(g)) continue;
            auto [res, stop] = sift_stop(0, g);
            if (perm_is_identity(res)) continue;
            add_strong_generator(std::move(res), stop);
            process_queues();
        }
        verify();
    }

    Int order() const {
        Int o = 1;
        for (const Level& l : levels_) o *= (int64_t)l.orbit.size();
        return o;
    }

    std::vector<int32_t> base() const {
        std::vector<int32_t> b;
        for (const Level& l : levels_) b.push_back(l.base);
        return b;
    }
    size_t depth() const { return levels_.size(); }
    size_t orbit_size(size_t level) const { return levels_[level].orbit.size(); }
    size_t strong_generator_count() const { return sgens_.size(); }

    Perm sift(Perm g) const { return sift_stop(0, std::move(g)).first; }
    bool contains(const Perm& g) const { return perm_is_identity(sift(g)); }

    // exactly uniform over the group: independent uniform transversal picks
    Perm random_element(std::mt19937_64& rng) const {
        Perm g(n_);
        for (int32_t i = 0; i < n_; ++i) g[(size_t)i] = i;
        for (const Level& l : levels_) {
            size_t pos = (size_t)(rng() % l.orbit.size());
            g = perm_compose(g, l.trans[pos]);
        }
        return g;
    }

    // deterministic verification: every Schreier generator of every level
    // sifts to the identity
    void verify() const {
        for (size_t li = 0; li < levels_.size(); ++li) {
            const Level& l = levels_[li];
            for (size_t pos = 0; pos < l.orbit.size(); ++pos)
                for (size_t gi = 0; gi < sgens_.size(); ++gi) {
                    if (depth_[gi] < li) continue;
                    Perm sg = schreier_gen(l, pos, sgens_[gi]);
                    if (!perm_is_identity(sift_stop(li + 1, std::move(sg)).first))
                        throw std::logic_error("stabilizer chain verification failed");
                }
        }
    }

private:
    struct Level {
        int32_t base = -1;
        std::vector<int32_t> orbit;
        std::vector<int32_t> where;  // domain point -> orbit position (-1 outside)
        std::vector<Perm> trans;     // trans[pos](base) = orbit[pos]
        std::vector<Perm> trans_inv;
        std::deque<std::pair<size_t, size_t>> todo;  // unsifted (orbit pos, strong gen index)
    };
    int32_t n_;
    std::vector<Perm> sgens_;
    std::vector<size_t> depth_;  // sgens_[i] fixes the first depth_[i] base points
    std::vector<Level> levels_;

    Perm schreier_gen(const Level& l, size_t pos, const Perm& s) const {
        int32_t image = s[(size_t)l.orbit[pos]];
        int32_t ipos = l.where[(size_t)image];
        return perm_compose(l.trans_inv[(size_t)ipos], perm_compose(s, l.trans[pos]));
    }

    std::pair<Perm, size_t> sift_stop(size_t level, Perm g) const {
        for (size_t li = level; li < levels_.size(); ++li) {
            const Level& l = levels_[li];
            int32_t p = g[(size_t)l.base];
            if (p == l.base) continue;
            int32_t pos = l.where[(size_t)p];
            if (pos < 0) return {g, li};
            g = perm_compose(l.trans_inv[(size_t)pos], g);
        }
        return {g, levels_.size()};
    }

    void add_strong_generator(Perm g, size_t depth) {
        if (depth == levels_.size()) {
            Level l;
            for (int32_t i = 0; i < n_; ++i)
                if (g[(size_t)i] != i) {
                    l.base = i;
                    break;
                }
            l.where.assign((size_t)n_, -1);
            l.orbit.push_back(l.base);
            l.where[(size_t)l.base] = 0;
            Perm id((size_t)n_);
            for (int32_t i = 0; i < n_; ++i) id[(size_t)i] = i;
            l.trans.push_back(id);
            l.trans_inv.push_back(std::move(id));
            levels_.push_back(std::move(l));
        }
        sgens_.push_back(std::move(g));
        depth_.push_back(depth);
        size_t gi = sgens_.size() - 1;
        for (size_t j = 0; j <= depth; ++j) {
            for (size_t pos = 0; pos < levels_[j].orbit.size(); ++pos) levels_[j].todo.emplace_back(pos, gi);
            extend_orbit(j);
        }
    }

    void extend_orbit(size_t level) {
        Level& l = levels_[level];
        for (size_t head = 0; head < l.orbit.size(); ++head)
            for (size_t gi = 0; gi < sgens_.size(); ++gi) {
                if (depth_[gi] < level) continue;
                int32_t img = sgens_[gi][(size_t)l.orbit[head]];
                if (l.where[(size_t)img] >= 0) continue;
                size_t pos = l.orbit.size();
                l.where[(size_t)img] = (int32_t)pos;
                l.orbit.push_back(img);
                Perm t = perm_compose(sgens_[gi], l.trans[head]);
                l.trans_inv.push_back(perm_inverse(t));
                l.trans.push_back(std::move(t));
                for (size_t g2 = 0; g2 < sgens_.size(); ++g2)
                    if (depth_[g2] >= level) l.todo.emplace_back(pos, g2);
            }
    }

    void process_queues() {
        bool progressed = true;
        while (progressed) {
            progressed = false;
            for (size_t level = 0; level < levels_.size(); ++level) {
                while (!levels_[level].todo.empty()) {
                    auto [pos, gi] = levels_[level].todo.front();
                    levels_[level].todo.pop_front();
                    progressed = true;
                    Perm sg = schreier_gen(levels_[level], pos, sgens_[gi]);
                    auto [residue, stop] = sift_stop(level + 1, std::move(sg));
                    if (!perm_is_identity(residue)) add_strong_generator(std::move(residue), stop);
                }
            }
        }
    }
};

}  // namespace f4aut
