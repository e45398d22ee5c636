#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aklt/polymer_hex.hpp"

namespace aklt {

enum class TableId { LoopsThroughEdge, WalksToBoundaryN, SupTableS, RightEndpointR, OddCornerQ, SquareCn };

const char* to_string(TableId id);
// Short CLI names: loops, n, s, r, q, cn.
const char* short_name(TableId id);
std::optional<TableId> parse_table_id(const std::string& s);

// Row index. One-dimensional tables use only `l`; the S table also names the
// column ("w3", "w4", "w5", "w6", "l6") and the quantity ("S" for the
// walk rows, "M" for the two loop rows).
struct TableIndex {
    int l = 0;
    std::string column;
    std::string quantity;
    friend auto operator<=>(const TableIndex&, const TableIndex&) = default;
};

struct TableRow {
    TableIndex index;
    std::int64_t value = 0;
};

struct TableResult {
    TableId id = TableId::LoopsThroughEdge;
    nlohmann::json params = nlohmann::json::object();
    std::vector<TableRow> rows;
    std::string generator_version;

    std::optional<std::int64_t> at(int l, const std::string& column = {},
                                   const std::string& quantity = {}) const;
    // 1-D tables as a map l -> value
    std::map<int, std::int64_t> as_map() const;
};

extern const char* const kGeneratorVersion;

struct TableOptions {
    unsigned threads = 1;
    // outer-corner windows only (no inner boundary)
    bool outer_only = false;
};

// Loops of length l through a fixed bond, l = 6, 8, ..., l_max.
TableResult loops_through_edge_table(int l_max, TableOptions opt = {});
// N(l) for l = 1..l_max, maximised over corner type.
TableResult walks_to_boundary_table(int l_max, TableOptions opt = {});
// Columns of the S table with l' = 3..l_max plus the loop rows.
TableResult s_table(int l_max = 20, TableOptions opt = {});
// One S column: entries l' = 3..l_max.
std::vector<std::int64_t> s_column(const std::string& column, int l_max, TableOptions opt = {});
// Loop rows (lengths 6 and 10) of an S column.
std::pair<std::int64_t, std::int64_t> s_loop_rows(const std::string& column, int window, TableOptions opt = {});
TableResult r_table(int l_max = 20, TableOptions opt = {});
TableResult q_table(int l_max = 19, TableOptions opt = {});
// C_n for n = 3..n_max (C_2 is the analytic 1/2 handled by the criterion).
TableResult square_cn_table(int n_max = 7, TableOptions opt = {});

// Validates the range for a table; returns an error message if invalid.
std::optional<std::string> check_range(TableId id, int max);
// Largest index of each table as printed.
int published_max(TableId id);
TableResult compute_table(TableId id, int max, TableOptions opt = {});

nlohmann::json to_json(const TableResult& t);
TableResult table_from_json(const nlohmann::json& j);
std::string to_csv(const TableResult& t);
std::string to_text(const TableResult& t);

// On-disk cache keyed by (table, range, generator version).
class TableCache {
public:
    explicit TableCache(std::filesystem::path dir);
    // AKLT_CACHE_DIR, else ./.aklt-cache
    static std::filesystem::path default_dir();

    std::filesystem::path path_for(TableId id, int max, bool outer_only) const;
    std::optional<TableResult> load(TableId id, int max, bool outer_only) const;
    void store(const TableResult& t, int max, bool outer_only) const;
    TableResult get_or_compute(TableId id, int max, TableOptions opt = {});

private:
    std::filesystem::path dir_;
};

}  // namespace aklt
