// aklt: tables, criterion checks, bound evaluation and validation runs.
//
// Exit codes: 0 ok, 1 check failed, 2 usage error, 3 outside the proven regime.

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "aklt/bounds.hpp"
#include "aklt/criterion.hpp"
#include "aklt/golden.hpp"
#include "aklt/oracle.hpp"
#include "aklt/tables.hpp"

using nlohmann::json;
using namespace aklt;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kOutOfRegime = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string format = "json";
    std::string cache_dir;
    bool no_cache = false;
    unsigned threads = 0;

    // tables
    std::string table;
    int max = 0;
    bool check = false;

    // kpu / bounds
    std::string lattice = "hex";
    int m = -1;
    int K = -1;
    int N = -1;
    double normA = 1;
    double normB = 1;
    int M = 50;
    int d = 50;
    bool ltqo = false, corr = false, indist = false, fbound = false, constants = false, quoted = false;

    // validate
    std::uint64_t seed = 42;
    std::uint64_t samples = 1'000'000;
    std::uint64_t partition_samples = 0;
    int configs = 20;
    bool skip_parity = false;
};

unsigned threads_of(const RunConfig& c) {
    if (c.threads) return c.threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

LatticeKind lattice_of(const RunConfig& c) {
    if (c.lattice == "hex" || c.lattice == "hexagonal") return LatticeKind::Hexagonal;
    if (c.lattice == "square") return LatticeKind::Square;
    throw UsageError("unknown lattice '" + c.lattice + "'");
}

TableResult get_table(const RunConfig& c, TableId id, int max, bool outer_only = false) {
    TableOptions opt{threads_of(c), outer_only};
    if (c.no_cache) return compute_table(id, max, opt);
    TableCache cache(c.cache_dir.empty() ? TableCache::default_dir() : std::filesystem::path(c.cache_dir));
    return cache.get_or_compute(id, max, opt);
}

void emit(const RunConfig& c, const json& j, const std::string& text, const std::string& csv = {}) {
    if (c.format == "json")
        std::cout << j.dump(2) << "\n";
    else if (c.format == "csv" && !csv.empty())
        std::cout << csv;
    else
        std::cout << text;
}

std::string fmt(double v, int prec = 6) {
    std::ostringstream os;
    os << std::setprecision(prec) << v;
    return os.str();
}

int cmd_tables(const RunConfig& c) {
    auto id = parse_table_id(c.table);
    if (!id) throw UsageError("unknown table id '" + c.table + "' (loops, n, s, r, q, cn)");
    const int max = c.max > 0 ? c.max : published_max(*id);
    if (auto err = check_range(*id, max)) throw UsageError(*err);
    auto t = get_table(c, *id, max);
    std::vector<Mismatch> bad;
    if (c.check) bad = compare_with_golden(t);

    json j = to_json(t);
    if (c.check) {
        json mm = json::array();
        for (const auto& m : bad) mm.push_back(to_json(m));
        j["check"] = {{"mismatches", mm}, {"ok", bad.empty()}};
    }
    emit(c, j, to_text(t), to_csv(t));
    for (const auto& m : bad) {
        std::cerr << "mismatch " << short_name(*id) << " l=" << m.index.l;
        if (!m.index.column.empty()) std::cerr << " column=" << m.index.column << " " << m.index.quantity;
        std::cerr << ": computed " << (m.computed ? std::to_string(*m.computed) : std::string("-")) << ", printed "
                  << m.expected << " [" << m.cite << "]\n";
    }
    return bad.empty() ? kOk : kCheckFailed;
}

int cmd_kpu(const RunConfig& c) {
    const auto lat = lattice_of(c);
    KpuReport r;
    json extra;
    std::ostringstream text;
    const auto& g = golden();
    if (lat == LatticeKind::Hexagonal) {
        const int m = c.m < 0 ? 0 : c.m;
        const int K = c.K < 0 ? 25 : c.K;
        const int N = c.N < 0 ? 78 : c.N;
        const bool outer = K == 0;
        auto tables = kpu_tables_from(get_table(c, TableId::LoopsThroughEdge, 28, outer),
                                      get_table(c, TableId::SupTableS, 20, outer),
                                      get_table(c, TableId::RightEndpointR, 20, outer),
                                      get_table(c, TableId::OddCornerQ, 19, outer));
        r = verify_kpu_hex(m, K, N, tables);
        text << "hexagonal lattice, m=" << m << " K=" << K << " N=" << N << "\n";
        for (const auto& col : r.columns) text << "  " << std::setw(4) << to_string(col.fixed) << "  " << fmt(col.total) << "\n";
        if (m == 0 && K != 0) {
            json cmp = json::array();
            bool all = true;
            for (std::size_t i = 0; i < r.columns.size() && i < g.totals.size(); ++i) {
                const double diff = std::abs(r.columns[i].total - g.totals[i]);
                const bool ok = diff <= g.totals_tolerance;
                all = all && ok;
                cmp.push_back({{"column", g.total_columns[i]},
                               {"computed", r.columns[i].total},
                               {"printed", g.totals[i]},
                               {"ok", ok}});
            }
            extra = {{"columns", cmp}, {"ok", all}, {"cite", g.totals_cite}};
            text << "  printed totals " << (all ? "reproduced" : "NOT reproduced") << " within " << g.totals_tolerance << "\n";
            if (!all) r.pass = false;
        }
    } else {
        const int m = c.m < 0 ? 1 : c.m;
        const int K = c.K < 0 ? 2 : c.K;
        const int N = c.N < 0 ? 10 : c.N;
        auto cn = get_table(c, TableId::SquareCn, 7).as_map();
        r = verify_kpu_square(m, K, N, cn);
        text << "square lattice, m=" << m << " K=" << K << " N=" << N << "\n  total " << fmt(r.square_total)
             << " (bound " << r.square_bound << ")\n";
        if (m == 1) {
            const bool ok = r.square_total <= g.square_total + 5e-4;
            extra = {{"printed", g.square_total}, {"computed", r.square_total}, {"ok", ok}, {"cite", g.square_cite}};
            if (!ok) r.pass = false;
        }
    }
    text << "  worst margin " << fmt(r.worst_margin) << (r.extended_precision ? " (extended precision)" : "") << "\n";
    for (const auto& n : r.notes) text << "  note: " << n << "\n";
    text << (r.pass ? "PASS\n" : "FAIL\n");
    json j = to_json(r);
    if (!extra.is_null()) j["golden"] = extra;
    emit(c, j, text.str());
    return r.pass ? kOk : kCheckFailed;
}

int cmd_bounds(const RunConfig& c) {
    const auto lat = lattice_of(c);
    const bool hex = lat == LatticeKind::Hexagonal;
    const int m = c.m < 0 ? (hex ? 0 : 1) : c.m;
    const int K = c.K < 0 ? (hex ? 25 : 2) : c.K;
    const int N = c.N < 0 ? (hex ? 200 : 10) : c.N;
    json j = json::object();
    std::ostringstream text;
    bool regime = true;
    auto add = [&](const std::string& name, const BoundResult& r) {
        j[name] = to_json(r);
        regime = regime && r.regime_ok;
        text << name << ": " << fmt(r.value, 8) << (r.regime_ok ? "" : "  (outside regime)") << "\n";
        for (const auto& n : r.regime_notes) text << "  " << n << "\n";
    };
    const bool none = !(c.ltqo || c.corr || c.indist || c.fbound || c.constants);
    if (c.fbound) add("f", f_bound(lat, m, N, K));
    if (c.indist) add("indistinguishability", indistinguishability_bound(lat, m, N, K, c.normA));
    if (c.ltqo || none) add("ltqo", ltqo_bound(lat, m, N, K, c.normA, c.quoted));
    if (c.corr) add("correlation", correlation_bound(lat, c.M, c.d, c.normA, c.normB));
    if (c.constants || none || c.ltqo) {
        auto ch = check_ltqo_constant(lat);
        j["constant"] = to_json(ch);
        text << "C (" << to_string(lat) << "): printed " << fmt(ch.quoted) << ", recomputed " << fmt(ch.recomputed)
             << (ch.agrees ? "" : "  (discrepancy)") << "\n";
    }
    emit(c, j, text.str());
    return regime ? kOk : kOutOfRegime;
}

int cmd_validate(const RunConfig& c) {
    McConfig mc{c.seed, c.samples, threads_of(c)};
    json j;
    std::ostringstream text;
    bool ok = true;
    auto line = [&](bool pass, const std::string& what) {
        ok = ok && pass;
        text << (pass ? "ok   " : "FAIL ") << what << "\n";
    };

    json ident = json::array();
    const SpherePoint north{0, 0, 1}, east{1, 0, 0};
    auto e1 = mc_edge_identity(north, north, mc);
    auto e2 = mc_edge_identity(north, east, mc);
    auto d1 = mc_degree4_identity({north, north, north, north}, mc);
    auto d2 = mc_degree4_identity({north, north, east, east}, mc);
    for (const auto* e : {&e1, &e2, &d1, &d2}) ident.push_back(to_json(*e));
    line(e1.within() && e2.within() && d1.within() && d2.within(), "analytic identities (1/3, 0, 1/5, 1/15)");

    const Philox4x32 gen(c.seed ^ 0x5bd1e995u);
    int passed = 0;
    for (int i = 0; i < c.configs; ++i) {
        auto p = [&](std::uint32_t k) { return sample_sphere(gen, static_cast<std::uint64_t>(i), k, 7); };
        McConfig sub = mc;
        sub.seed = c.seed + 1 + static_cast<std::uint64_t>(i);
        auto a = mc_edge_identity(p(0), p(1), sub);
        auto b = mc_degree4_identity({p(2), p(3), p(4), p(5)}, sub);
        ident.push_back(to_json(a));
        ident.push_back(to_json(b));
        passed += a.within() && b.within();
    }
    line(passed == c.configs, "random configurations: " + std::to_string(passed) + "/" + std::to_string(c.configs));
    j["identities"] = ident;

    McConfig pc = mc;
    if (c.partition_samples) pc.samples = c.partition_samples;
    auto hexp = brute_force_partition(single_hexagon_volume(), LatticeKind::Hexagonal, pc);
    auto sqp = brute_force_partition(unit_square_volume(), LatticeKind::Square, pc);
    const double hex_exact = 244.0 / (64 * 243), sq_exact = (1 + 1.0 / 27) / 16;
    j["partition"] = {{"hexagon", to_json(hexp)}, {"square", to_json(sqp)}};
    line(hexp.agrees && std::abs(hexp.polymer_value - hex_exact) < 1e-15,
         "single hexagon: mc " + fmt(hexp.mc_estimate) + " vs " + fmt(hexp.polymer_value));
    line(sqp.agrees && std::abs(sqp.polymer_value - sq_exact) < 1e-15,
         "unit square: mc " + fmt(sqp.mc_estimate) + " vs " + fmt(sqp.polymer_value));

    if (!c.skip_parity) {
        json par = json::array();
        const std::pair<TableId, int> ranges[] = {{TableId::LoopsThroughEdge, 14},
                                                  {TableId::WalksToBoundaryN, 8},
                                                  {TableId::RightEndpointR, 12},
                                                  {TableId::OddCornerQ, 11},
                                                  {TableId::SquareCn, 5}};
        for (const auto& [id, max] : ranges) {
            auto rep = reference_port_compare(id, max, threads_of(c));
            par.push_back(to_json(rep));
            line(rep.ok(), std::string("reference port parity: ") + short_name(id) + " up to " + std::to_string(max));
        }
        j["parity"] = par;
    }

    json consts = json::array();
    for (auto lat : {LatticeKind::Hexagonal, LatticeKind::Square}) {
        auto ch = check_ltqo_constant(lat);
        consts.push_back(to_json(ch));
        text << "info C (" << to_string(lat) << "): printed " << fmt(ch.quoted) << ", recomputed "
             << fmt(ch.recomputed) << "\n";
    }
    j["constants"] = consts;
    j["ok"] = ok;
    emit(c, j, text.str());
    return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"AKLT polymer tables, criterion checks and bounds"};
    app.require_subcommand(1);
    RunConfig c;

    auto common = [&](CLI::App* s) {
        s->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        s->add_option("--threads", c.threads, "worker threads (default: all cores)");
        s->add_option("--cache-dir", c.cache_dir, "table cache directory (default: $AKLT_CACHE_DIR or .aklt-cache)");
        s->add_flag("--no-cache", c.no_cache, "always recompute tables");
    };

    auto* tables = app.add_subcommand("tables", "compute a combinatorial table");
    common(tables);
    tables->add_option("--id", c.table, "loops, n, s, r, q or cn")->required();
    tables->add_option("--max", c.max, "largest index (default: printed range)");
    tables->add_flag("--check-against-paper", c.check, "compare with the published values");

    auto* kpu = app.add_subcommand("kpu", "verify the convergence criterion");
    common(kpu);
    kpu->add_option("--lattice", c.lattice, "hex or square");
    kpu->add_option("--m", c.m, "decoration (default 0 hex, 1 square)");
    kpu->add_option("--K", c.K, "inner radius (default 25 hex, 2 square)");
    kpu->add_option("--N", c.N, "outer radius (default 78 hex, 10 square)");

    auto* bounds = app.add_subcommand("bounds", "evaluate the closed-form bounds");
    common(bounds);
    bounds->add_flag("--ltqo", c.ltqo, "LTQO bound");
    bounds->add_flag("--corr", c.corr, "correlation bound");
    bounds->add_flag("--indist", c.indist, "indistinguishability bound");
    bounds->add_flag("--f", c.fbound, "f(N, K) bound");
    bounds->add_flag("--constants", c.constants, "printed vs recomputed LTQO constant");
    bounds->add_flag("--quoted-constant", c.quoted, "use the printed constant in the LTQO bound");
    bounds->add_option("--lattice", c.lattice, "hex or square");
    bounds->add_option("--m", c.m, "decoration");
    bounds->add_option("--K", c.K, "inner radius");
    bounds->add_option("--N", c.N, "outer radius");
    bounds->add_option("--normA", c.normA, "operator norm of A")->check(CLI::NonNegativeNumber);
    bounds->add_option("--normB", c.normB, "operator norm of B")->check(CLI::NonNegativeNumber);
    bounds->add_option("--M", c.M, "correlation: support size");
    bounds->add_option("--d", c.d, "correlation: distance");

    auto* validate = app.add_subcommand("validate", "run the oracle suite");
    common(validate);
    validate->add_option("--seed", c.seed, "PRNG seed");
    validate->add_option("--samples", c.samples, "Monte-Carlo samples per identity")->check(CLI::Range(10000ull, 1ull << 40));
    validate->add_option("--partition-samples", c.partition_samples, "samples for the partition checks (default --samples)");
    validate->add_option("--configs", c.configs, "random identity configurations")->check(CLI::PositiveNumber);
    validate->add_flag("--skip-parity", c.skip_parity, "skip the reference-port comparison");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (app.got_subcommand(tables)) return cmd_tables(c);
        if (app.got_subcommand(kpu)) return cmd_kpu(c);
        if (app.got_subcommand(bounds)) return cmd_bounds(c);
        if (app.got_subcommand(validate)) return cmd_validate(c);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const OutOfRegime& e) {
        std::cerr << "out of regime: " << e.what() << "\n";
        if (c.format == "json") std::cout << json{{"error", "out_of_regime"}, {"message", e.what()}}.dump(2) << "\n";
        return kOutOfRegime;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}
