#ifndef APN_CATALOG_HPP
#define APN_CATALOG_HPP

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace apn::catalog {

/// Line-delimited JSON catalog of computed functions. Writes are append-only
/// with whole-line atomicity; corrupt lines are skipped and counted.
struct Catalog {
    std::vector<nlohmann::json> records;
    std::size_t corrupt_lines = 0;
};

void append_record(const std::string& path, const nlohmann::json& record);
Catalog load(const std::string& path);

/// Keeps the first record per table hash, rewrites the file, returns the
/// number of dropped duplicates.
std::size_t dedup(const std::string& path);

std::string to_csv(const Catalog& cat);

/// Catalog path resolution: explicit flag > APNFORGE_CATALOG env > default.
std::string resolve_path(const std::string& flag_value);

} // namespace apn::catalog

#endif
