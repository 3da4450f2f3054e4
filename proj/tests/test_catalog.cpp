#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apn/catalog.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

using namespace apn::catalog;
using nlohmann::json;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) { std::remove(path.c_str()); }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("append and load round trip") {
    TempFile tmp("catalog_roundtrip.jsonl");
    append_record(tmp.path, {{"id", "a1"}, {"family", "f1"}, {"n", 8}});
    append_record(tmp.path, {{"id", "a2"}, {"family", "gold"}, {"n", 12}});
    Catalog cat = load(tmp.path);
    REQUIRE(cat.records.size() == 2);
    CHECK(cat.corrupt_lines == 0);
    CHECK(cat.records[0]["id"] == "a1");
    CHECK(cat.records[1]["n"] == 12);
}

TEST_CASE("missing catalog reads as empty") {
    Catalog cat = load("no_such_catalog.jsonl");
    CHECK(cat.records.empty());
    CHECK(cat.corrupt_lines == 0);
}

TEST_CASE("corrupt lines are skipped and counted") {
    TempFile tmp("catalog_corrupt.jsonl");
    {
        std::ofstream os(tmp.path);
        os << R"({"id":"ok1"})" << '\n';
        os << "{\"id\": \"trunc" << '\n'; // interrupted write
        os << R"({"id":"ok2"})" << '\n';
        os << "not json at all\n";
    }
    Catalog cat = load(tmp.path);
    CHECK(cat.records.size() == 2);
    CHECK(cat.corrupt_lines == 2);
    CHECK(cat.records[1]["id"] == "ok2");
}

TEST_CASE("dedup keeps the first record per id") {
    TempFile tmp("catalog_dedup.jsonl");
    append_record(tmp.path, {{"id", "x"}, {"family", "first"}});
    append_record(tmp.path, {{"id", "y"}, {"family", "other"}});
    append_record(tmp.path, {{"id", "x"}, {"family", "second"}});
    CHECK(dedup(tmp.path) == 1);
    Catalog cat = load(tmp.path);
    REQUIRE(cat.records.size() == 2);
    CHECK(cat.records[0]["family"] == "first");
    CHECK(cat.records[1]["id"] == "y");
    CHECK(dedup(tmp.path) == 0); // idempotent
}

TEST_CASE("csv export") {
    Catalog cat;
    cat.records.push_back({{"id", "a"},
                           {"family", "f1"},
                           {"n", 12},
                           {"timestamp", "2026-01-01T00:00:00Z"},
                           {"profile",
                            {{"delta", 2},
                             {"nf", {1365, 100100, 140664}},
                             {"spectrum", "gold-like"}}}});
    std::string csv = to_csv(cat);
    CHECK(csv.find("id,family,n,delta,nf,spectrum,timestamp") == 0);
    CHECK(csv.find("a,f1,12,2,1365 100100 140664,gold-like,2026-01-01T00:00:00Z") !=
          std::string::npos);
}

TEST_CASE("path resolution precedence") {
    unsetenv("APNFORGE_CATALOG");
    CHECK(resolve_path("explicit.jsonl") == "explicit.jsonl");
    CHECK(resolve_path("") == "apnforge_catalog.jsonl");
    setenv("APNFORGE_CATALOG", "/tmp/from_env.jsonl", 1);
    CHECK(resolve_path("") == "/tmp/from_env.jsonl");
    CHECK(resolve_path("explicit.jsonl") == "explicit.jsonl");
    unsetenv("APNFORGE_CATALOG");
}
