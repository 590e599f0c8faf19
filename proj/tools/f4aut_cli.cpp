// Command-line surface for the F4 level-one computation library.

#include <CLI11.hpp>
#include <iostream>

#include "f4aut/arthur.hpp"
#include "f4aut/cusptable_io.hpp"
#include "f4aut/models.hpp"

using namespace f4aut;
using nlohmann::json;

namespace {

std::string factorization(Int n) {
    std::string out;
    for (Int p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out += (out.empty() ? "" : "*") + p.str() + (e > 1 ? "^" + std::to_string(e) : "");
    }
    if (n > 1) out += (out.empty() ? "" : "*") + n.str();
    return out;
}

Vec4 parse_weight(const std::string& s) {
    Vec4 v{};
    std::stringstream ss(s);
    std::string tok;
    for (int i = 0; i < 4; ++i) {
        if (!std::getline(ss, tok, ',')) throw CLI::ValidationError("--weight needs a,b,c,d");
        v[(size_t)i] = std::stoll(tok);
    }
    return v;
}

KacCoordinates parse_kac(const std::string& s) {
    std::array<int64_t, 5> a{};
    std::stringstream ss(s);
    std::string tok;
    for (int i = 0; i < 5; ++i) {
        if (!std::getline(ss, tok, ',')) throw CLI::ValidationError("--kac needs s0,s1,s2,s3,s4");
        a[(size_t)i] = std::stoll(tok);
    }
    KacCoordinates k{a, (unsigned)(a[0] + 2 * a[1] + 3 * a[2] + 4 * a[3] + 2 * a[4])};
    return k;
}

// display-only decimal approximation of (num / sqrt(den2)) to 2 digits
std::string z_string(const Int& num, const Int& den2) {
    if (den2 == 0) return num == 0 ? "0.00" : "inf";
    Int scaled = 100 * boost::multiprecision::abs(num);
    Int root = int_floor_sqrt(den2);
    if (root == 0) return "inf";
    Int q = scaled / root;
    std::string digits = q.str();
    while (digits.size() < 3) digits.insert(digits.begin(), '0');
    std::string sign = num < 0 ? "-" : "";
    return sign + digits.substr(0, digits.size() - 2) + "." + digits.substr(digits.size() - 2);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact level-one automorphic counts for the anisotropic F4"};
    app.require_subcommand(1);
    std::string data_dir = default_data_dir();
    std::string format = "pretty";
    app.add_option("--data", data_dir, "data directory override");
    app.add_option("--format", format, "output format: pretty|json|csv");

    auto* c_classes = app.add_subcommand("classes", "list the rational torsion classes");
    bool emit_classes = false;
    c_classes->add_flag("--emit", emit_classes, "emit rationalclasses.json with a checksum");

    std::string weight_str, kac_str, model_str = "I";
    uint64_t seed = 1;
    int64_t samples = 100000, bound = 2, max_w = -1;
    bool dump = false;

    auto* c_dim = app.add_subcommand("dim", "invariant dimensions (d1, d2, d)");
    c_dim->add_option("-l,--weight", weight_str, "dominant weight a,b,c,d")->required();

    auto* c_trace = app.add_subcommand("trace", "exact trace on V_lambda at a torsion class");
    c_trace->add_option("-l,--weight", weight_str, "dominant weight a,b,c,d")->required();
    c_trace->add_option("--kac", kac_str, "Kac coordinates s0,s1,s2,s3,s4")->required();

    auto* c_shortvec = app.add_subcommand("shortvec", "short-vector counts for a model");
    c_shortvec->add_option("--model", model_str, "I or E");
    c_shortvec->add_option("--bound", bound, "norm bound (model I) / exact norm (model E)");
    c_shortvec->add_flag("--dump", dump, "print the vectors");

    auto* c_verify = app.add_subcommand("verify", "generators, group order, class histogram");
    c_verify->add_option("--model", model_str, "I or E");
    c_verify->add_option("--seed", seed, "random seed");
    c_verify->add_option("--samples", samples, "Monte-Carlo sample count");

    auto* c_params = app.add_subcommand("params", "Arthur parameters with multiplicity one");
    c_params->add_option("-l,--weight", weight_str, "dominant weight a,b,c,d")->required();

    auto* c_f4 = app.add_subcommand("f4count", "number of stable tempered parameters");
    c_f4->add_option("-l,--weight", weight_str, "dominant weight a,b,c,d");
    c_f4->add_option("--max-w", max_w, "sweep all weights with motivic weight <= N");

    auto* c_emit = app.add_subcommand("emit", "emit generated tables");
    std::string what = "oct-structconsts";
    c_emit->add_option("--what", what, "oct-structconsts | classtable | rationalclasses");

    CLI11_PARSE(app, argc, argv);

    try {
        const RootDatum& rd = build_f4();

        if (*c_classes) {
            const auto& classes = rational_classes();
            if (format == "json" || emit_classes) {
                json arr = json::array();
                for (const auto& c : classes)
                    arr.push_back({{"kac", kac_to_json(c.kac)},
                                   {"order", c.order},
                                   {"i", {c.inv.a26, c.inv.a25, c.inv.a24, c.inv.ad_trace}}});
                if (emit_classes) {
                    json out = {{"table", arr}, {"checksum", table_checksum(arr)}};
                    std::cout << out.dump(1) << "\n";
                } else
                    std::cout << arr.dump(1) << "\n";
            } else if (format == "csv") {
                std::cout << "s0,s1,s2,s3,s4,order,a26,a25,a24,adtrace\n";
                for (const auto& c : classes) {
                    for (int i = 0; i < 5; ++i) std::cout << c.kac.s[(size_t)i] << ",";
                    std::cout << c.order << "," << c.inv.a26 << "," << c.inv.a25 << "," << c.inv.a24
                              << "," << c.inv.ad_trace << "\n";
                }
            } else {
                std::cout << classes.size() << " rational torsion conjugacy classes\n";
                for (const auto& c : classes) {
                    std::cout << "(";
                    for (int i = 0; i < 5; ++i) std::cout << (i ? "," : "") << c.kac.s[(size_t)i];
                    std::cout << ") order " << c.order << "  i = (" << c.inv.a26 << "," << c.inv.a25
                              << "," << c.inv.a24 << "," << c.inv.ad_trace << ")\n";
                }
            }
        }

        if (*c_dim) {
            Vec4 l = parse_weight(weight_str);
            auto table = load_classtable(data_dir);
            auto dd = dims_invariants(rd, rd.weight(l[0], l[1], l[2], l[3]), table);
            if (format == "json")
                std::cout << json{{"d1", dd.d1.str()}, {"d2", dd.d2.str()}, {"d", dd.d.str()}}.dump()
                          << "\n";
            else
                std::cout << "d1 = " << dd.d1 << ", d2 = " << dd.d2 << ", d = " << dd.d << "\n";
        }

        if (*c_trace) {
            Vec4 l = parse_weight(weight_str);
            Rat t = trace(rd, rd.weight(l[0], l[1], l[2], l[3]), parse_kac(kac_str));
            std::cout << t << "\n";
        }

        if (*c_shortvec) {
            Model m = model_str == "E" ? Model::E : Model::I;
            std::array<Jor, 27> basis{};
            for (int i = 0; i < 27; ++i) basis[(size_t)i][(size_t)i] = 1;
            GramMatrix g(27, std::vector<int64_t>(27));
            for (int i = 0; i < 27; ++i)
                for (int j = 0; j < 27; ++j)
                    g[(size_t)i][(size_t)j] = m == Model::I ? bilinear_Q(basis[(size_t)i], basis[(size_t)j])
                                                            : bilinear_E(basis[(size_t)i], basis[(size_t)j]);
            auto vecs = m == Model::I ? short_vectors(g, bound) : vectors_of_norm(g, bound == 2 ? 3 : bound);
            std::cout << vecs.size() << " vectors\n";
            if (dump)
                for (auto& v : vecs) {
                    for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << v[i];
                    std::cout << "\n";
                }
        }

        if (*c_verify) {
            Model m = model_str == "E" ? Model::E : Model::I;
            ModelContext ctx(m, data_dir);
            for (const Mat27& g : ctx.generators()) verify_group_element(g, ctx.fingerprinter().polarization());
            std::cout << "generators verified: " << ctx.generators().size()
                      << " elements preserve det and the polarization\n";
            StabilizerChain chain(ctx.action());
            std::cout << "order = " << chain.order() << " = " << factorization(chain.order()) << "\n";
            if (chain.order() != ctx.expected_order()) {
                std::cerr << "ORDER MISMATCH\n";
                return 2;
            }
            auto table = load_classtable(data_dir);
            auto hist = class_histogram(ctx, chain, table, samples, seed);
            std::cout << "samples = " << hist.samples << ", outside the class table: " << hist.unknown
                      << "\n";
            Int order = ctx.expected_order();
            bool all_ok = hist.unknown == 0;
            for (size_t i = 0; i < table.size(); ++i) {
                Int n = m == Model::I ? table[i].n1 : table[i].n2;
                Int num = Int(hist.counts[i]) * order - Int(samples) * n;
                Int den2 = Int(samples) * n * (order - n);
                bool ok = num * num <= 25 * den2 && !(n == 0 && hist.counts[i] > 0);
                all_ok = all_ok && ok;
                if (hist.counts[i] || n != 0) {
                    std::cout << "  class (";
                    for (int j = 0; j < 5; ++j) std::cout << (j ? "," : "") << table[i].kac.s[(size_t)j];
                    std::cout << "): observed " << hist.counts[i] << ", z = " << z_string(num, den2)
                              << (ok ? "" : "  [OUT OF RANGE]") << "\n";
                }
            }
            std::cout << (all_ok ? "histogram consistent with the class counts\n"
                                 : "HISTOGRAM INCONSISTENT\n");
            if (!all_ok) return 2;
        }

        if (*c_params) {
            Vec4 l = parse_weight(weight_str);
            auto cusps = load_cusptable(data_dir);
            auto res = enumerate_params_lenient(l, cusps);
            for (const auto& p : res.params)
                std::cout << p.text << (p.count > 1 ? "  ^(" + std::to_string(p.count) + ")" : "") << "\n";
            for (const auto& miss : res.missing) std::cerr << "MissingCount: " << miss.what() << "\n";
            if (!res.missing.empty()) return 3;
        }

        if (*c_f4) {
            auto cusps = load_cusptable(data_dir);
            auto table = load_classtable(data_dir);
            int exit_code = 0;
            auto emit_row = [&](const Vec4& l) {
                std::cout << "(" << l[0] << "," << l[1] << "," << l[2] << "," << l[3] << ") & ";
                try {
                    std::cout << f4_count(rd, l, cusps, table) << "\n";
                } catch (const MissingCount& m) {
                    std::cout << "MissingCount(" << m.family << ")\n";
                    exit_code = 3;
                }
            };
            if (!weight_str.empty())
                emit_row(parse_weight(weight_str));
            else if (max_w > 0) {
                for (int64_t a = 0; 2 * (2 * a + 8) <= max_w; ++a)
                    for (int64_t b = 0; 2 * (2 * a + 3 * b + 8) <= max_w; ++b)
                        for (int64_t c = 0; 2 * (2 * a + 3 * b + 2 * c + 8) <= max_w; ++c)
                            for (int64_t dd = 0; 2 * (2 * a + 3 * b + 2 * c + dd + 8) <= max_w; ++dd)
                                emit_row({a, b, c, dd});
            } else
                throw CLI::ValidationError("f4count needs -l or --max-w");
            return exit_code;
        }

        if (*c_emit) {
            if (what == "oct-structconsts") {
                const auto& alg = OctonionAlgebra::get();
                json out = json::array();
                for (int i = 0; i < 8; ++i) {
                    json row = json::array();
                    for (int j = 0; j < 8; ++j) row.push_back(alg.table[(size_t)i][(size_t)j]);
                    out.push_back(row);
                }
                std::cout << json{{"basis", {"1", "e1", "e2", "e3", "h1", "h2", "h3", "h4"}},
                                  {"table", out},
                                  {"checksum", table_checksum(out)}}
                                 .dump(1)
                          << "\n";
            } else if (what == "classtable") {
                json arr = load_json_file(data_dir + "/classtable.json");
                std::cout << json{{"table", arr}, {"checksum", table_checksum(arr)}}.dump(1) << "\n";
            } else if (what == "rationalclasses") {
                json arr = json::array();
                for (const auto& c : rational_classes())
                    arr.push_back({{"kac", kac_to_json(c.kac)},
                                   {"order", c.order},
                                   {"i", {c.inv.a26, c.inv.a25, c.inv.a24, c.inv.ad_trace}}});
                std::cout << json{{"table", arr}, {"checksum", table_checksum(arr)}}.dump(1) << "\n";
            } else {
                throw CLI::ValidationError("unknown --what " + what);
            }
        }
    } catch (const MissingCount& e) {
        std::cerr << "MissingCount: " << e.what() << "\n";
        return 3;
    } catch (const Violation& e) {
        std::cerr << "Violation: " << e.what() << "\n";
        return 2;
    } catch (const NonIntegralDimension& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
