#pragma once

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "charform.hpp"
#include "torsion.hpp"

namespace f4aut {

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open " + path);
    return nlohmann::json::parse(in);
}

inline std::string default_data_dir() {
#ifdef F4AUT_DATA_DIR
    return F4AUT_DATA_DIR;
#else
    return "data";
#endif
}

inline KacCoordinates kac_from_json(const nlohmann::json& j) {
    KacCoordinates k{};
    for (int i = 0; i < 5; ++i) k.s[(size_t)i] = j[(size_t)i].get<int64_t>();
    k.m = (unsigned)(k.s[0] + 2 * k.s[1] + 3 * k.s[2] + 4 * k.s[3] + 2 * k.s[4]);
    return k;
}

inline std::vector<ClassCountRecord> load_classtable(const std::string& dir) {
    std::vector<ClassCountRecord> out;
    for (const auto& row : load_json_file(dir + "/classtable.json")) {
        ClassCountRecord r;
        r.kac = kac_from_json(row["kac"]);
        r.inv = InvariantQuadruple{row["i"][0].get<int64_t>(), row["i"][1].get<int64_t>(),
                                   row["i"][2].get<int64_t>(), row["i"][3].get<int64_t>()};
        r.n1 = row["n1"].get<int64_t>();
        r.n2 = row["n2"].get<int64_t>();
        out.push_back(r);
    }
    return out;
}

inline nlohmann::json kac_to_json(const KacCoordinates& k) {
    return nlohmann::json{k.s[0], k.s[1], k.s[2], k.s[3], k.s[4]};
}

// FNV-1a over a canonical serialization; used when re-emitting tables.
inline uint64_t table_checksum(const nlohmann::json& j) {
    std::string s = j.dump();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline Int int_from_string(const std::string& s) { return Int(s); }

}  // namespace f4aut
