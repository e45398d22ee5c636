#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aklt/tables.hpp"

namespace aklt {

// Published values with a location string for each.
struct GoldenEntry {
    TableIndex index;
    std::int64_t value = 0;
    std::string cite;
};

struct Golden {
    std::string version;
    std::map<TableId, std::vector<GoldenEntry>> tables;
    std::vector<std::string> total_columns;
    std::vector<double> totals;
    double totals_tolerance = 5e-4;
    std::string totals_cite;
    double square_total = 0;
    double square_bound = 0;
    std::string square_cite;
    double C_hex = 0;
    double C_square = 0;
    std::string constants_cite;
};

Golden golden_from_json(const nlohmann::json& j);
// Copy embedded at build time.
const Golden& golden();

struct Mismatch {
    TableIndex index;
    std::optional<std::int64_t> computed;
    std::int64_t expected = 0;
    std::string cite;
};

// Entries of the golden table whose index lies within the computed range
// and whose value differs.
std::vector<Mismatch> compare_with_golden(const TableResult& t, const Golden& g = golden());

nlohmann::json to_json(const Mismatch& m);

}  // namespace aklt
