#pragma once

#include "cusptable.hpp"
#include "io.hpp"

namespace f4aut {

inline CuspCountTable load_cusptable(const std::string& dir) {
    CuspCountTable t;
    for (const auto& row : load_json_file(dir + "/cuspcounts.json")) {
        std::vector<int64_t> w;
        for (const auto& x : row["weights"]) w.push_back(x.get<int64_t>());
        t.set(row["family"].get<std::string>(), w, row["count"].get<int64_t>(),
              row["provenance"].get<std::string>());
    }
    return t;
}

}  // namespace f4aut
