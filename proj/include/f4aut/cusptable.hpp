#pragma once

#include <map>
#include <string>
#include <vector>

#include "bignum.hpp"

namespace f4aut {

struct MissingCount : std::runtime_error {
    std::string family;
    std::vector<int64_t> weights;
    MissingCount(std::string fam, std::vector<int64_t> w)
        : std::runtime_error(format(fam, w)), family(std::move(fam)), weights(std::move(w)) {}
    static std::string format(const std::string& fam, const std::vector<int64_t>& w) {
        std::string s = "no bundled cusp count for " + fam + "(";
        for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
        return s + ")";
    }
};

// Number of level-one cuspidal representations of PGL2 with Hodge weight w,
// i.e. dim S_{w+1}(SL_2(Z)) by the classical dimension formula.
inline int64_t pgl2_count(int64_t w) {
    if (w < 1 || w % 2 == 0) return 0;
    int64_t k = w + 1;
    if (k < 12) return 0;
    int64_t dim_m = (k % 12 == 2) ? k / 12 : k / 12 + 1;
    return dim_m - 1;
}

// Counts of level-one cuspidal representations with prescribed Hodge weights
// for the families the enumeration consumes from external tables.  Entries
// carry a provenance string; absent keys raise MissingCount.
class CuspCountTable {
public:
    struct Entry {
        int64_t count;
        std::string provenance;
    };

    void set(const std::string& family, std::vector<int64_t> weights, int64_t count, std::string provenance) {
        table_[key(family, weights)] = Entry{count, std::move(provenance)};
    }

    int64_t count(const std::string& family, const std::vector<int64_t>& weights) const {
        if (family == "PGL2") return pgl2_count(weights.at(0));
        auto it = table_.find(key(family, weights));
        if (it == table_.end()) throw MissingCount(family, weights);
        return it->second.count;
    }

    bool has(const std::string& family, const std::vector<int64_t>& weights) const {
        if (family == "PGL2") return true;
        return table_.count(key(family, weights)) > 0;
    }

    const std::map<std::string, Entry>& entries() const { return table_; }

private:
    std::map<std::string, Entry> table_;
    static std::string key(const std::string& family, const std::vector<int64_t>& w) {
        std::string s = family;
        for (int64_t x : w) s += ":" + std::to_string(x);
        return s;
    }
};

}  // namespace f4aut
