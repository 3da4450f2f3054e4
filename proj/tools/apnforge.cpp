// apnforge: construct APN family instances, verify APN-ness, compute
// Walsh/N_F invariant profiles, and reproduce the published n = 12 table.

#include "apn/analysis.hpp"
#include "apn/catalog.hpp"
#include "apn/families.hpp"
#include "apn/field.hpp"
#include "apn/poly.hpp"
#include "apn/table3.hpp"
#include "apn/vbf.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <iostream>
#include <sstream>

using json = nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::string hash_hex(const apn::TruthTable& tt) {
    std::ostringstream os;
    os << "0x" << std::hex << apn::fnv1a_hash(tt);
    return os.str();
}

struct ConstructResult {
    apn::TruthTable table;
    json params;
    std::string field_desc;
};

ConstructResult construct(const std::string& family, unsigned m, unsigned k,
                          const std::string& alpha_str, unsigned n, unsigned i) {
    ConstructResult res;
    if (family == "gold") {
        apn::Field fn = apn::Field::with_default_poly(n ? n : 12);
        unsigned gi = i ? i : 1;
        res.table = apn::univariate_evaluate(fn, apn::families::gold_terms(fn, gi));
        res.params = {{"family", "gold"}, {"n", fn.degree()}, {"i", gi}};
        res.field_desc = fn.describe();
        return res;
    }
    if (family.rfind("known-", 0) == 0) {
        int id = std::stoi(family.substr(6));
        apn::families::KnownInstance inst = apn::families::known_family(id);
        res.table = std::move(inst.table);
        res.params = std::move(inst.params);
        res.field_desc = apn::Field::with_default_poly(12).describe();
        return res;
    }
    if (m == 0) throw CLI::ValidationError("--m is required for bivariate families");
    apn::Field base = apn::Field::with_default_poly(m);
    apn::Elt alpha = 0;
    if (alpha_str == "auto") {
        alpha = apn::poly::find_good_alphas(base, family == "f2" ? 1 : (k ? k : 1)).front();
    } else {
        alpha = apn::Elt(std::stoul(alpha_str, nullptr, 0));
    }
    std::optional<apn::BivariatePair> pair;
    if (family == "f1") {
        pair = apn::families::f1(base, k ? k : 1, alpha);
    } else if (family == "f2") {
        pair = apn::families::f2(base, alpha);
    } else if (family == "gologlu-f1") {
        pair = apn::families::gologlu_f1(base, k ? k : 1);
    } else if (family == "gologlu-f2") {
        pair = apn::families::gologlu_f2(base, k ? k : 1);
    } else if (family == "lzlq") {
        pair = apn::families::lzlq(base);
    } else {
        throw CLI::ValidationError("unknown family: " + family);
    }
    res.table = apn::evaluate(*pair);
    res.params = {{"family", family}, {"m", m}, {"k", k ? k : 1}, {"alpha", alpha}};
    res.field_desc = pair->field.describe();
    return res;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"APN family construction and invariant analysis"};
    app.require_subcommand(1);
    unsigned threads = 0;

    // construct
    auto* c_cmd = app.add_subcommand("construct", "construct a family instance");
    std::string c_family, c_alpha = "auto", c_out, c_catalog;
    unsigned c_m = 0, c_k = 0, c_n = 0, c_i = 0;
    c_cmd->add_option("family", c_family,
                      "f1|f2|gologlu-f1|gologlu-f2|lzlq|gold|known-2..known-12")
        ->required();
    c_cmd->add_option("--m", c_m, "base field degree (bivariate families)");
    c_cmd->add_option("--k", c_k, "Frobenius parameter k (q = 2^k)");
    c_cmd->add_option("--alpha", c_alpha, "alpha as integer, or 'auto'");
    c_cmd->add_option("--n", c_n, "field degree n (univariate families)");
    c_cmd->add_option("--i", c_i, "Gold exponent parameter");
    c_cmd->add_option("--out", c_out, "truth table output file");
    c_cmd->add_option("--catalog", c_catalog, "catalog path");
    c_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

    // verify
    auto* v_cmd = app.add_subcommand("verify", "check a truth table file for APN-ness");
    std::string v_file;
    v_cmd->add_option("file", v_file, "truth table file")->required();
    v_cmd->add_option("--threads", threads, "worker threads");

    // invariants
    auto* i_cmd = app.add_subcommand("invariants", "invariant profile of a truth table file");
    std::string i_file;
    unsigned i_maxdim = 4;
    i_cmd->add_option("file", i_file, "truth table file")->required();
    i_cmd->add_option("--max-dim", i_maxdim, "N_F depth");
    i_cmd->add_option("--threads", threads, "worker threads");

    // table3
    auto* t_cmd = app.add_subcommand("table3", "reproduce the published n=12 N_F table");
    std::string t_families, t_format = "md", t_expected;
    t_cmd->add_option("--families", t_families, "comma-separated family filter");
    t_cmd->add_option("--format", t_format, "json|csv|md");
    t_cmd->add_option("--expected", t_expected, "override expected-values fixture (JSON)");
    t_cmd->add_option("--threads", threads, "worker threads");

    // catalog
    auto* cat_cmd = app.add_subcommand("catalog", "list | dedup | export the catalog");
    std::string cat_action, cat_path;
    cat_cmd->add_option("action", cat_action, "list|dedup|export")->required();
    cat_cmd->add_option("--catalog", cat_path, "catalog path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_cmd) {
            ConstructResult res = construct(c_family, c_m, c_k, c_alpha, c_n, c_i);
            apn::InvariantProfile prof = apn::invariant_profile(res.table, 4, true, threads);
            std::string out = c_out.empty() ? c_family + "_n" + std::to_string(res.table.n) + ".tbl"
                                            : c_out;
            apn::save_table(res.table, out, c_family);
            json record = {{"id", hash_hex(res.table)},
                           {"family", c_family},
                           {"n", res.table.n},
                           {"params", res.params},
                           {"field", json::parse(res.field_desc)},
                           {"profile", json::parse(apn::profile_to_json(prof))},
                           {"table_file", out},
                           {"timestamp", iso_timestamp()},
                           {"version", kVersion}};
            apn::catalog::append_record(apn::catalog::resolve_path(c_catalog), record);
            std::cout << record.dump(2) << std::endl;
            return 0;
        }
        if (*v_cmd) {
            apn::TruthTable tt;
            try {
                tt = apn::load_table(v_file);
            } catch (const std::exception& e) {
                std::cerr << "parse error: " << e.what() << std::endl;
                return 2;
            }
            apn::DdtSummary ddt = apn::differential_uniformity(tt, threads);
            json out = {{"n", tt.n}, {"delta", ddt.delta}, {"apn", ddt.delta == 2}};
            json pairs = json::array();
            for (auto& [a, b] : ddt.worst_pairs) pairs.push_back({a, b});
            out["worst_pairs"] = pairs;
            std::cout << out.dump(2) << std::endl;
            return ddt.delta == 2 ? 0 : 1;
        }
        if (*i_cmd) {
            apn::TruthTable tt = apn::load_table(i_file);
            apn::InvariantProfile prof = apn::invariant_profile(tt, i_maxdim, false, threads);
            std::cout << apn::profile_to_json(prof) << std::endl;
            return 0;
        }
        if (*t_cmd) {
            std::vector<std::string> keys;
            if (t_families.empty()) {
                keys = apn::table3::family_keys();
            } else {
                std::stringstream ss(t_families);
                std::string item;
                while (std::getline(ss, item, ',')) keys.push_back(item);
            }
            std::map<std::string, std::vector<apn::table3::NfRow>> override_rows;
            const std::map<std::string, std::vector<apn::table3::NfRow>>* expected = nullptr;
            if (!t_expected.empty()) {
                std::ifstream is(t_expected);
                if (!is) throw std::runtime_error("cannot open fixture " + t_expected);
                json fixture = json::parse(is);
                for (auto& [key, rows] : fixture.items())
                    override_rows[key] = rows.get<std::vector<apn::table3::NfRow>>();
                expected = &override_rows;
            }
            auto results = apn::table3::run(keys, threads, expected);
            if (t_format == "json") {
                std::cout << apn::table3::to_json(results).dump(2) << std::endl;
            } else if (t_format == "csv") {
                std::cout << apn::table3::render_csv(results);
            } else {
                std::cout << apn::table3::render_markdown(results);
            }
            for (const auto& r : results)
                if (!r.match) return 1;
            return 0;
        }
        if (*cat_cmd) {
            std::string path = apn::catalog::resolve_path(cat_path);
            if (cat_action == "list") {
                apn::catalog::Catalog cat = apn::catalog::load(path);
                for (const auto& r : cat.records) std::cout << r.dump() << '\n';
                if (cat.corrupt_lines) {
                    std::cerr << "warning: skipped " << cat.corrupt_lines << " corrupt lines\n";
                    return 3;
                }
                return 0;
            }
            if (cat_action == "dedup") {
                std::size_t dropped = apn::catalog::dedup(path);
                std::cout << "dropped " << dropped << " duplicate records" << std::endl;
                return 0;
            }
            if (cat_action == "export") {
                std::cout << apn::catalog::to_csv(apn::catalog::load(path));
                return 0;
            }
            std::cerr << "unknown catalog action: " << cat_action << std::endl;
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    }
    return 0;
}
