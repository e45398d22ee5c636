#include "aklt/tables.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "aklt/polymer_square.hpp"

namespace aklt {

const char* const kGeneratorVersion = "aklt-enum/1.0";

const char* to_string(TableId id) {
    switch (id) {
        case TableId::LoopsThroughEdge: return "LoopsThroughEdge";
        case TableId::WalksToBoundaryN: return "WalksToBoundaryN";
        case TableId::SupTableS: return "SupTableS";
        case TableId::RightEndpointR: return "RightEndpointR";
        case TableId::OddCornerQ: return "OddCornerQ";
        case TableId::SquareCn: return "SquareCn";
    }
    return "?";
}

const char* short_name(TableId id) {
    switch (id) {
        case TableId::LoopsThroughEdge: return "loops";
        case TableId::WalksToBoundaryN: return "n";
        case TableId::SupTableS: return "s";
        case TableId::RightEndpointR: return "r";
        case TableId::OddCornerQ: return "q";
        case TableId::SquareCn: return "cn";
    }
    return "?";
}

std::optional<TableId> parse_table_id(const std::string& s) {
    for (auto id : {TableId::LoopsThroughEdge, TableId::WalksToBoundaryN, TableId::SupTableS,
                    TableId::RightEndpointR, TableId::OddCornerQ, TableId::SquareCn})
        if (s == short_name(id) || s == to_string(id)) return id;
    return std::nullopt;
}

std::optional<std::int64_t> TableResult::at(int l, const std::string& column,
                                            const std::string& quantity) const {
    for (const auto& r : rows)
        if (r.index.l == l && r.index.column == column && r.index.quantity == quantity) return r.value;
    return std::nullopt;
}

std::map<int, std::int64_t> TableResult::as_map() const {
    std::map<int, std::int64_t> out;
    for (const auto& r : rows) out[r.index.l] = r.value;
    return out;
}

namespace {

EnumOptions eopt(const TableOptions& o) { return EnumOptions{o.threads}; }

std::vector<int> corner_types(const TableOptions& opt) {
    if (opt.outer_only) return {0};
    return {1, 0};
}

TableResult make_result(TableId id, int max, const TableOptions& opt) {
    TableResult t;
    t.id = id;
    t.params = {{"max", max}, {"outer_only", opt.outer_only}};
    t.generator_version = kGeneratorVersion;
    return t;
}

std::vector<std::vector<Vertex>> walk_gammas(int lg, int window, int o) {
    auto all = corner_window(o == 1, window);
    EnumerationConstraints c;
    c.length = lg;
    c.start_edges = all;
    c.end_edges = all;
    c.must_intersect = lasts(corner_window(o != 1, window));
    std::vector<std::vector<Vertex>> out;
    for (auto& w : generate_walks(c)) out.push_back(std::move(w.vertices));
    return out;
}

std::vector<std::vector<Vertex>> gammas_for(const std::string& column, int window, int o) {
    if (column == "l6") return corner_hexagons(window);
    if (column.size() == 2 && column[0] == 'w') return walk_gammas(column[1] - '0', window, o);
    throw std::invalid_argument("unknown S column: " + column);
}

const std::vector<std::string> kColumns = {"w3", "w4", "w5", "w6", "l6"};

}  // namespace

TableResult loops_through_edge_table(int l_max, TableOptions opt) {
    if (auto err = check_range(TableId::LoopsThroughEdge, l_max)) throw std::invalid_argument(*err);
    if (l_max > 28) std::cerr << "warning: loop table beyond l=28 grows exponentially\n";
    auto t = make_result(TableId::LoopsThroughEdge, l_max, opt);
    auto edge = straight_window(0);
    for (int l = 6; l <= l_max; l += 2) {
        EnumerationConstraints c;
        c.length = l;
        c.start_edges = edge;
        c.end_edges = edge;
        c.must_intersect = {edge[0].from, edge[0].to};
        t.rows.push_back({{l, "", ""}, static_cast<std::int64_t>(count_loops(c, eopt(opt)))});
    }
    return t;
}

TableResult walks_to_boundary_table(int l_max, TableOptions opt) {
    if (auto err = check_range(TableId::WalksToBoundaryN, l_max)) throw std::invalid_argument(*err);
    auto t = make_result(TableId::WalksToBoundaryN, l_max, opt);
    std::vector<std::int64_t> best(static_cast<std::size_t>(l_max) + 1, 0);
    auto hexes = layered_corner_hexagons(l_max, l_max);
    for (int o : corner_types(opt)) {
        for (int l = 1; l <= l_max; ++l) {
            std::map<Vertex, std::int64_t> per_point;
            for (const auto& h : hexes)
                for (std::size_t i = 0; i < h.size(); ++i) {
                    DirectedEdge e{h[i], h[(i + 1) % h.size()]};
                    per_point[e.from] += static_cast<std::int64_t>(
                        walk_concatenation_count(e, l, o == 1, l_max, eopt(opt)));
                }
            for (const auto& [v, n] : per_point) best[l] = std::max(best[l], n);
        }
    }
    for (int l = 1; l <= l_max; ++l) t.rows.push_back({{l, "", ""}, best[l]});
    return t;
}

std::vector<std::int64_t> s_column(const std::string& column, int l_max, TableOptions opt) {
    // rows[g][l'-3]: walks of length l' meeting gamma g
    std::vector<std::vector<std::int64_t>> rows;
    for (int o : corner_types(opt)) {
        auto gs = gammas_for(column, l_max, o);
        if (gs.empty()) continue;
        auto window = corner_window(o == 1, l_max + 2);
        std::vector<std::vector<std::int64_t>> block(gs.size(), std::vector<std::int64_t>(l_max - 2, 0));
        for (int lp = 3; lp <= l_max; ++lp) {
            EnumerationConstraints c;
            c.length = lp;
            c.start_edges = window;
            c.end_edges = window;
            auto counts = count_walks_hitting(c, gs, eopt(opt));
            for (std::size_t g = 0; g < gs.size(); ++g) block[g][lp - 3] = static_cast<std::int64_t>(counts[g]);
        }
        for (auto& r : block) rows.push_back(std::move(r));
    }
    std::vector<std::int64_t> out;
    if (rows.empty()) return out;
    std::int64_t prev = 0;
    std::vector<std::int64_t> cum(rows.size(), 0);
    for (int k = 0; k < l_max - 2; ++k) {
        std::int64_t m = 0;
        for (std::size_t g = 0; g < rows.size(); ++g) {
            cum[g] += rows[g][k];
            m = std::max(m, cum[g]);
        }
        out.push_back(m - prev);
        prev = m;
    }
    return out;
}

std::pair<std::int64_t, std::int64_t> s_loop_rows(const std::string& column, int window, TableOptions opt) {
    std::int64_t m6 = 0, m10 = 0;
    for (int o : corner_types(opt)) {
        auto bdry = firsts(corner_window(o == 1, window + 2));
        VertexSet forbidden(bdry.begin(), bdry.end());
        // loop columns take the supremum over loops of the whole volume
        auto gs = column == "l6" ? layered_corner_hexagons(window, 4) : gammas_for(column, window, o);
        for (const auto& g : gs) {
            if (column == "l6" && std::any_of(g.begin(), g.end(), [&](const Vertex& v) { return forbidden.count(v) != 0; }))
                continue;  // not a loop of the volume
            m6 = std::max<std::int64_t>(m6, cycles_through(g, 6, forbidden, LatticeKind::Hexagonal).size());
            m10 = std::max<std::int64_t>(m10, cycles_through(g, 10, forbidden, LatticeKind::Hexagonal).size());
        }
    }
    return {m6, m10};
}

TableResult s_table(int l_max, TableOptions opt) {
    if (auto err = check_range(TableId::SupTableS, l_max)) throw std::invalid_argument(*err);
    auto t = make_result(TableId::SupTableS, l_max, opt);
    for (const auto& col : kColumns) {
        auto vals = s_column(col, l_max, opt);
        for (std::size_t k = 0; k < vals.size(); ++k)
            t.rows.push_back({{static_cast<int>(k) + 3, col, "S"}, vals[k]});
        auto [m6, m10] = s_loop_rows(col, l_max, opt);
        t.rows.push_back({{6, col, "M"}, m6});
        t.rows.push_back({{10, col, "M"}, m10});
    }
    return t;
}

TableResult r_table(int l_max, TableOptions opt) {
    if (auto err = check_range(TableId::RightEndpointR, l_max)) throw std::invalid_argument(*err);
    auto t = make_result(TableId::RightEndpointR, l_max, opt);
    auto line = straight_window(l_max);
    const std::size_t z = line.size() / 2;
    std::vector<DirectedEdge> left(line.begin(), line.begin() + static_cast<std::ptrdiff_t>(z));
    std::vector<DirectedEdge> right(line.begin() + static_cast<std::ptrdiff_t>(z), line.end());
    for (int l = 4; l <= l_max; l += 2) {
        EnumerationConstraints c;
        c.length = l;
        c.start_edges = {line[z]};
        c.end_edges = left;
        c.must_intersect = firsts(line);
        c.avoid = firsts(right);
        t.rows.push_back({{l, "", ""}, static_cast<std::int64_t>(count_walks(c, eopt(opt)))});
    }
    return t;
}

TableResult q_table(int l_max, TableOptions opt) {
    if (auto err = check_range(TableId::OddCornerQ, l_max)) throw std::invalid_argument(*err);
    auto t = make_result(TableId::OddCornerQ, l_max, opt);
    for (int l = 3; l <= l_max; l += 2) {
        std::int64_t best = 0;
        for (int o : corner_types(opt)) {
            EnumerationConstraints c;
            c.length = l;
            c.start_edges = straight_window(l_max);
            c.end_edges = corner_arm(o == 1, l_max);
            c.must_intersect = firsts(c.end_edges);
            best = std::max<std::int64_t>(best, count_walks(c, eopt(opt)));
        }
        t.rows.push_back({{l, "", ""}, best});
    }
    return t;
}

TableResult square_cn_table(int n_max, TableOptions opt) {
    if (auto err = check_range(TableId::SquareCn, n_max)) throw std::invalid_argument(*err);
    auto t = make_result(TableId::SquareCn, n_max, opt);
    for (int n = 3; n <= n_max; ++n) {
        auto c = max_trails_through_vertex(n, eopt(opt));
        t.rows.push_back({{n, "", ""}, static_cast<std::int64_t>(c.total())});
    }
    return t;
}

std::optional<std::string> check_range(TableId id, int max) {
    switch (id) {
        case TableId::LoopsThroughEdge:
            if (max < 6 || max % 2 != 0) return "loops table: --max must be even and >= 6";
            break;
        case TableId::WalksToBoundaryN:
            if (max < 1) return "N table: --max must be >= 1";
            break;
        case TableId::SupTableS:
            if (max < 6 || max > 20) return "S table: --max must lie in [6, 20]";
            break;
        case TableId::RightEndpointR:
            if (max < 4 || max % 2 != 0) return "R table: --max must be even and >= 4";
            break;
        case TableId::OddCornerQ:
            if (max < 3 || max % 2 == 0) return "Q table: --max must be odd and >= 3";
            break;
        case TableId::SquareCn:
            if (max < 3 || max > 9) return "C table: --max must lie in [3, 9]";
            break;
    }
    return std::nullopt;
}

int published_max(TableId id) {
    switch (id) {
        case TableId::LoopsThroughEdge: return 28;
        case TableId::WalksToBoundaryN: return 10;
        case TableId::SupTableS: return 20;
        case TableId::RightEndpointR: return 20;
        case TableId::OddCornerQ: return 19;
        case TableId::SquareCn: return 7;
    }
    return 0;
}

TableResult compute_table(TableId id, int max, TableOptions opt) {
    switch (id) {
        case TableId::LoopsThroughEdge: return loops_through_edge_table(max, opt);
        case TableId::WalksToBoundaryN: return walks_to_boundary_table(max, opt);
        case TableId::SupTableS: return s_table(max, opt);
        case TableId::RightEndpointR: return r_table(max, opt);
        case TableId::OddCornerQ: return q_table(max, opt);
        case TableId::SquareCn: return square_cn_table(max, opt);
    }
    throw std::invalid_argument("unknown table");
}

nlohmann::json to_json(const TableResult& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
        nlohmann::json idx;
        if (r.index.column.empty())
            idx = r.index.l;
        else
            idx = {{"column", r.index.column}, {"quantity", r.index.quantity}, {"l", r.index.l}};
        rows.push_back({{"index", idx}, {"value", r.value}});
    }
    return {{"table_id", to_string(t.id)},
            {"params", t.params},
            {"rows", rows},
            {"generator_version", t.generator_version}};
}

TableResult table_from_json(const nlohmann::json& j) {
    TableResult t;
    auto id = parse_table_id(j.at("table_id").get<std::string>());
    if (!id) throw std::invalid_argument("unknown table_id");
    t.id = *id;
    t.params = j.at("params");
    t.generator_version = j.at("generator_version").get<std::string>();
    for (const auto& r : j.at("rows")) {
        TableRow row;
        const auto& idx = r.at("index");
        if (idx.is_number_integer()) {
            row.index.l = idx.get<int>();
        } else {
            row.index.l = idx.at("l").get<int>();
            row.index.column = idx.at("column").get<std::string>();
            row.index.quantity = idx.at("quantity").get<std::string>();
        }
        row.value = r.at("value").get<std::int64_t>();
        t.rows.push_back(row);
    }
    return t;
}

std::string to_csv(const TableResult& t) {
    std::ostringstream os;
    bool two_d = t.id == TableId::SupTableS;
    os << (two_d ? "column,quantity,l,value\n" : "l,value\n");
    for (const auto& r : t.rows) {
        if (two_d) os << r.index.column << ',' << r.index.quantity << ',';
        os << r.index.l << ',' << r.value << '\n';
    }
    return os.str();
}

std::string to_text(const TableResult& t) {
    std::ostringstream os;
    os << to_string(t.id) << " (" << t.generator_version << ")\n";
    for (const auto& r : t.rows) {
        if (!r.index.column.empty()) os << "  " << r.index.column << ' ' << r.index.quantity;
        os << "  l=" << r.index.l << "  " << r.value << '\n';
    }
    return os.str();
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path TableCache::default_dir() {
    if (const char* env = std::getenv("AKLT_CACHE_DIR"); env && *env) return env;
    return ".aklt-cache";
}

std::filesystem::path TableCache::path_for(TableId id, int max, bool outer_only) const {
    std::string version = kGeneratorVersion;
    std::replace(version.begin(), version.end(), '/', '-');
    std::string name = std::string(short_name(id)) + "_max" + std::to_string(max) +
                       (outer_only ? "_outer" : "") + "_" + version + ".json";
    return dir_ / name;
}

std::optional<TableResult> TableCache::load(TableId id, int max, bool outer_only) const {
    auto p = path_for(id, max, outer_only);
    std::ifstream in(p);
    if (!in) return std::nullopt;
    try {
        auto t = table_from_json(nlohmann::json::parse(in));
        if (t.id != id || t.generator_version != kGeneratorVersion) return std::nullopt;
        return t;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void TableCache::store(const TableResult& t, int max, bool outer_only) const {
    std::filesystem::create_directories(dir_);
    auto final_path = path_for(t.id, max, outer_only);
    auto tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << to_json(t).dump(2) << '\n';
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, final_path);
}

TableResult TableCache::get_or_compute(TableId id, int max, TableOptions opt) {
    if (auto t = load(id, max, opt.outer_only)) return *t;
    auto t = compute_table(id, max, opt);
    store(t, max, opt.outer_only);
    return t;
}

}  // namespace aklt
