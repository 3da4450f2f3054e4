#include "apn/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace apn::catalog {

void append_record(const std::string& path, const nlohmann::json& record) {
    std::ofstream os(path, std::ios::app);
    if (!os) throw std::runtime_error("cannot open catalog " + path);
    os << record.dump() << '\n';
}

Catalog load(const std::string& path) {
    Catalog cat;
    std::ifstream is(path);
    if (!is) return cat; // absent catalog reads as empty
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        try {
            cat.records.push_back(nlohmann::json::parse(line));
        } catch (const nlohmann::json::parse_error&) {
            ++cat.corrupt_lines;
        }
    }
    return cat;
}

std::size_t dedup(const std::string& path) {
    Catalog cat = load(path);
    std::set<std::string> seen;
    std::vector<nlohmann::json> kept;
    for (auto& r : cat.records) {
        std::string id = r.value("id", "");
        if (!id.empty() && !seen.insert(id).second) continue;
        kept.push_back(r);
    }
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot rewrite catalog " + path);
    for (auto& r : kept) os << r.dump() << '\n';
    return cat.records.size() - kept.size();
}

std::string to_csv(const Catalog& cat) {
    std::ostringstream os;
    os << "id,family,n,delta,nf,spectrum,timestamp\n";
    for (const auto& r : cat.records) {
        auto profile = r.value("profile", nlohmann::json::object());
        std::ostringstream nf;
        for (std::size_t i = 0; i < profile.value("nf", nlohmann::json::array()).size(); ++i)
            nf << (i ? " " : "") << profile["nf"][i].get<long long>();
        os << r.value("id", "") << ',' << r.value("family", "") << ','
           << r.value("n", 0) << ',' << profile.value("delta", 0) << ',' << nf.str() << ','
           << profile.value("spectrum", "") << ',' << r.value("timestamp", "") << '\n';
    }
    return os.str();
}

std::string resolve_path(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("APNFORGE_CATALOG")) return env;
    return "apnforge_catalog.jsonl";
}

} // namespace apn::catalog
