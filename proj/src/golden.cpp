#include "aklt/golden.hpp"

namespace aklt {

namespace detail {
extern const char* const kGoldenJson;
}

Golden golden_from_json(const nlohmann::json& j) {
    Golden g;
    g.version = j.at("version").get<std::string>();
    for (const auto& [name, rows] : j.at("tables").items()) {
        auto id = parse_table_id(name);
        if (!id) throw std::invalid_argument("golden data: unknown table " + name);
        auto& out = g.tables[*id];
        for (const auto& r : rows) {
            GoldenEntry e;
            e.index.l = r.at("l").get<int>();
            e.index.column = r.value("column", "");
            e.index.quantity = r.value("quantity", "");
            e.value = r.at("value").get<std::int64_t>();
            e.cite = r.at("cite").get<std::string>();
            out.push_back(std::move(e));
        }
    }
    const auto& t = j.at("kpu_hex_totals");
    g.total_columns = t.at("columns").get<std::vector<std::string>>();
    g.totals = t.at("values").get<std::vector<double>>();
    g.totals_tolerance = t.at("tolerance").get<double>();
    g.totals_cite = t.at("cite").get<std::string>();
    const auto& s = j.at("kpu_square_total");
    g.square_total = s.at("value").get<double>();
    g.square_bound = s.at("bound").get<double>();
    g.square_cite = s.at("cite").get<std::string>();
    const auto& c = j.at("constants");
    g.C_hex = c.at("hex").at("C").get<double>();
    g.C_square = c.at("square").at("C").get<double>();
    g.constants_cite = c.at("cite").get<std::string>();
    return g;
}

const Golden& golden() {
    static const Golden g = golden_from_json(nlohmann::json::parse(detail::kGoldenJson));
    return g;
}

std::vector<Mismatch> compare_with_golden(const TableResult& t, const Golden& g) {
    std::vector<Mismatch> out;
    auto it = g.tables.find(t.id);
    if (it == g.tables.end()) return out;
    int lo = 0, hi = -1;
    for (const auto& r : t.rows) {
        if (hi < lo) lo = hi = r.index.l;
        lo = std::min(lo, r.index.l);
        hi = std::max(hi, r.index.l);
    }
    for (const auto& e : it->second) {
        if (e.index.quantity != "M" && (e.index.l < lo || e.index.l > hi)) continue;
        auto v = t.at(e.index.l, e.index.column, e.index.quantity);
        if (e.index.quantity == "M" && !v) continue;
        if (!v || *v != e.value) out.push_back({e.index, v, e.value, e.cite});
    }
    return out;
}

nlohmann::json to_json(const Mismatch& m) {
    nlohmann::json j{{"l", m.index.l}, {"expected", m.expected}, {"cite", m.cite}};
    if (!m.index.column.empty()) {
        j["column"] = m.index.column;
        j["quantity"] = m.index.quantity;
    }
    j["computed"] = m.computed ? nlohmann::json(*m.computed) : nlohmann::json(nullptr);
    return j;
}

}  // namespace aklt
