#ifndef APN_TABLE3_HPP
#define APN_TABLE3_HPP

#include "apn/analysis.hpp"
#include "apn/vbf.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace apn::table3 {

using NfRow = std::vector<long long>;

/// Published N_F rows at n = 12, keyed by family ("gold", "2" .. "12", "f1",
/// "f2"). Families sharing a table cell share the candidate list.
const std::map<std::string, std::vector<NfRow>>& expected_rows();

/// All family keys in report order.
const std::vector<std::string>& family_keys();

/// Builds the representative function for one family key at n = 12.
struct Representative {
    std::string key;
    TruthTable table;
    nlohmann::json params;
};
Representative representative(const std::string& key);

struct Result {
    std::string key;
    nlohmann::json params;
    InvariantProfile profile;
    bool constructed = false;
    bool match = false;
    std::string error;
};

/// Constructs each requested family, computes its profile, and diffs against
/// `expected` (defaults to the embedded fixture).
std::vector<Result> run(const std::vector<std::string>& keys, unsigned threads,
                        const std::map<std::string, std::vector<NfRow>>* expected = nullptr);

std::string render_csv(const std::vector<Result>& results);
std::string render_markdown(const std::vector<Result>& results);
nlohmann::json to_json(const std::vector<Result>& results);

} // namespace apn::table3

#endif
