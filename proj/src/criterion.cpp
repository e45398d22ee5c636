#include "aklt/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace aklt {

double WeightParams::a(int l) const {
    auto it = a_small.find(l);
    if (it != a_small.end()) return it->second;
    return slope * l;
}

WeightParams hex_params(int m) {
    if (m < 0) throw std::invalid_argument("decoration m must be >= 0");
    WeightParams p;
    p.lattice = LatticeKind::Hexagonal;
    p.m = m;
    p.epsilon = 0.0086;
    p.slope = 0.15;
    p.a_small = {{3, 0.52}, {4, 0.56}, {5, 0.66}, {6, 0.70}};
    return p;
}

WeightParams square_params(int m) {
    if (m < 0) throw std::invalid_argument("decoration m must be >= 0");
    WeightParams p;
    p.lattice = LatticeKind::Square;
    p.m = m;
    p.epsilon = 0.046;
    p.slope = 0.085;
    return p;
}

double weight_magnitude(int length, int degree4, const WeightParams& p) {
    double w = std::pow(1.0 / 3.0, (p.m + 1) * length - 1);
    if (p.lattice == LatticeKind::Square) w *= std::pow(3.0 / 5.0, degree4);
    return w;
}

double weight_magnitude(const Walk& w, const WeightParams& p) { return weight_magnitude(w.length(), 0, p); }
double weight_magnitude(const Loop& l, const WeightParams& p) { return weight_magnitude(l.length(), 0, p); }
double weight_magnitude(const Trail& t, const WeightParams& p) {
    return weight_magnitude(t.length(), static_cast<int>(degree4_vertices(t).size()), p);
}

namespace {

template <class T>
T little_w_t(int l, const WeightParams& p) {
    const T m1 = p.m + 1;
    if (p.lattice == LatticeKind::Square) {
        T c = (T(p.slope) + T(p.epsilon)) * m1 * l;
        return std::exp(c) / (m1 * std::pow(T(3), m1 * l - 1));
    }
    T base = std::exp(T(p.a(l)) + T(p.epsilon) * l) / std::pow(T(3), l);
    return 3 * std::pow(base, m1);
}

// w_m(l) = 3 q^l once a(l) is linear
template <class T>
T q_ratio(const WeightParams& p) {
    return std::pow(std::exp(T(p.slope) + T(p.epsilon)) / 3, p.m + 1);
}

template <class T>
T geom(T x, int L) {
    return std::pow(x, L) / (1 - x);
}

template <class T>
T arith_geom(T x, int L) {
    return std::pow(x, L) * (L - (L - 1) * x) / ((1 - x) * (1 - x));
}

void require_linear(int l_start, const WeightParams& p) {
    for (const auto& [l, a] : p.a_small)
        if (l >= l_start) throw std::invalid_argument("tail sums need a(l) linear from l_start on");
}

template <class T>
T tail_walks_t(int l_start, const WeightParams& p, bool boundary_variant) {
    require_linear(l_start, p);
    T x = 2 * q_ratio<T>(p);
    if (x >= 1) throw Divergent("walk tail diverges: 2 e^{a+eps}/3 >= 1");
    if (boundary_variant) return T(3) / 16 * geom(x, l_start);
    return T(3) / 1024 * (2 * arith_geom(x, l_start) + 95 * geom(x, l_start));
}

template <class T>
T tail_loops_t(int k_start, const WeightParams& p) {
    require_linear(2 * k_start, p);
    T q = q_ratio<T>(p);
    T y = 4 * q * q;
    if (y >= 1) throw Divergent("loop tail diverges: 4 e^{2(a+eps)}/9 >= 1");
    return T(3) / 8 * geom(y, k_start);
}

int fixed_length(FixedClass c) {
    switch (c) {
        case FixedClass::W3: return 3;
        case FixedClass::W4: return 4;
        case FixedClass::W5: return 5;
        case FixedClass::W6: return 6;
        case FixedClass::L6: return 6;
        case FixedClass::Wgt6: return 7;
        case FixedClass::Lgt6: return 10;
    }
    return 0;
}

const char* s_column_name(FixedClass c) {
    switch (c) {
        case FixedClass::W3: return "w3";
        case FixedClass::W4: return "w4";
        case FixedClass::W5: return "w5";
        case FixedClass::W6: return "w6";
        case FixedClass::L6: return "l6";
        default: return "";
    }
}

SummedClass walk_cell(int lp) {
    if (lp > 20) return SummedClass::Wgt20;
    if (lp >= 11) return SummedClass::W11to20;
    return static_cast<SummedClass>(lp - 3);
}

std::int64_t need(const std::map<int, std::int64_t>& m, int k, const char* what) {
    auto it = m.find(k);
    if (it == m.end()) throw std::invalid_argument(std::string("missing table entry ") + what + "(" + std::to_string(k) + ")");
    return it->second;
}

template <class T>
std::map<SummedClass, T> column_t(FixedClass fixed, const WeightParams& p, const KpuTables& t, ColumnOptions opt) {
    const int l = fixed_length(fixed);
    const T am = T(p.m + 1) * T(p.a(l));
    auto w = [&](int lp) { return little_w_t<T>(lp, p); };
    std::map<SummedClass, T> cells;
    for (auto c : kSummedClasses) cells[c] = 0;

    T loops_small = 0;
    for (int k = 6; k <= 14; ++k) loops_small += w(2 * k) * T(need(t.loops, 2 * k, "N_loop"));
    const T loops_tail = tail_loops_t<T>(15, p);

    if (fixed == FixedClass::Wgt6 || fixed == FixedClass::Lgt6) {
        const T kappa_l = 1;  // kappa cap (1/7 resp. 1/10) times l
        for (int lp = 3; lp <= 20; ++lp) {
            T v;
            if (lp % 2 == 1)
                v = kappa_l * T(need(t.Q, lp, "Q")) * w(lp);
            else if (lp == 4)
                v = (T(l) / 2 + 1) * w(4);
            else if (lp == 6)
                v = (T(l) / 2 + 2) * w(6);
            else {
                T mult = opt.long_walk_multiplier == CorridorMultiplier::Lemma
                             ? T(l) / 2 + T(11) * lp / 4 - 12
                             : T(17) / 10 * l;
                v = mult * T(need(t.R, lp, "R")) * w(lp);
            }
            cells[walk_cell(lp)] += v / am;
        }
        cells[SummedClass::Wgt20] = T(l) * tail_walks_t<T>(21, p, false) / am;
        cells[SummedClass::L6] = T(l) * T(need(t.loops, 6, "N_loop")) * w(6) / am;
        cells[SummedClass::L10] = T(l) * T(need(t.loops, 10, "N_loop")) * w(10) / am;
        cells[SummedClass::Lgt10] = T(l) * (loops_small + loops_tail) / am;
        return cells;
    }

    const std::string col = s_column_name(fixed);
    auto sit = t.S.find(col);
    auto mit = t.M.find(col);
    if (sit == t.S.end() || mit == t.M.end()) throw std::invalid_argument("missing S column " + col);
    const auto& S = sit->second;
    if (S.size() < 18) throw std::invalid_argument("S column " + col + " must cover l' = 3..20");
    const bool is_loop = fixed == FixedClass::L6;
    const T f = is_loop ? T(l) : T(l - 2);
    const T nb = is_loop ? 0 : 1;
    for (int lp = 3; lp <= 20; ++lp) cells[walk_cell(lp)] += w(lp) * T(S[lp - 3]) / am;
    cells[SummedClass::Wgt20] = (nb * tail_walks_t<T>(21, p, true) + f * tail_walks_t<T>(21, p, false)) / am;
    cells[SummedClass::L6] = w(6) * T(mit->second.first) / am;
    cells[SummedClass::L10] = w(10) * T(mit->second.second) / am;
    cells[SummedClass::Lgt10] = f * (loops_small + loops_tail) / am;
    return cells;
}

template <class T>
ColumnResult to_result(FixedClass fixed, const std::map<SummedClass, T>& cells) {
    ColumnResult r;
    r.fixed = fixed;
    T total = 0;
    for (const auto& [c, v] : cells) {
        r.cells[c] = static_cast<double>(v);
        total += v;
    }
    r.total = static_cast<double>(total);
    return r;
}

}  // namespace

double little_w(int l, const WeightParams& p) { return little_w_t<double>(l, p); }

double tail_sum_loops(int k_start, const WeightParams& p) { return tail_loops_t<double>(k_start, p); }

double tail_sum_walks(int l_start, const WeightParams& p, bool boundary_variant) {
    return tail_walks_t<double>(l_start, p, boundary_variant);
}

double tail_sum_loops_truncated(int k_start, const WeightParams& p, double rel_tol) {
    long double s = 0;
    for (int k = k_start; k < k_start + 100000; ++k) {
        long double term = little_w_t<long double>(2 * k, p) * std::pow(2.0L, 2 * k - 3);
        s += term;
        if (term < rel_tol * s) break;
    }
    return static_cast<double>(s);
}

double tail_sum_walks_truncated(int l_start, const WeightParams& p, bool boundary_variant, double rel_tol) {
    long double s = 0;
    for (int l = l_start; l < l_start + 100000; ++l) {
        long double c = boundary_variant ? std::pow(2.0L, l - 4) : (2.0L * l + 95) * std::pow(2.0L, l - 10);
        long double term = c * little_w_t<long double>(l, p);
        s += term;
        if (term < rel_tol * s) break;
    }
    return static_cast<double>(s);
}

const char* to_string(FixedClass c) {
    switch (c) {
        case FixedClass::W3: return "W3";
        case FixedClass::W4: return "W4";
        case FixedClass::W5: return "W5";
        case FixedClass::W6: return "W6";
        case FixedClass::L6: return "L6";
        case FixedClass::Wgt6: return "W>6";
        case FixedClass::Lgt6: return "L>6";
    }
    return "?";
}

const char* to_string(SummedClass c) {
    switch (c) {
        case SummedClass::W3: return "W3";
        case SummedClass::W4: return "W4";
        case SummedClass::W5: return "W5";
        case SummedClass::W6: return "W6";
        case SummedClass::W7: return "W7";
        case SummedClass::W8: return "W8";
        case SummedClass::W9: return "W9";
        case SummedClass::W10: return "W10";
        case SummedClass::W11to20: return "W11-20";
        case SummedClass::Wgt20: return "W>20";
        case SummedClass::L6: return "L6";
        case SummedClass::L10: return "L10";
        case SummedClass::Lgt10: return "L>10";
    }
    return "?";
}

KpuTables kpu_tables_from(const TableResult& loops, const TableResult& s, const TableResult& r,
                          const TableResult& q) {
    KpuTables t;
    t.loops = loops.as_map();
    t.R = r.as_map();
    t.Q = q.as_map();
    for (const auto& row : s.rows) {
        if (row.index.quantity == "S") {
            auto& col = t.S[row.index.column];
            if (static_cast<int>(col.size()) < row.index.l - 2) col.resize(row.index.l - 2, 0);
            col[row.index.l - 3] = row.value;
        } else if (row.index.quantity == "M") {
            auto& m = t.M[row.index.column];
            (row.index.l == 6 ? m.first : m.second) = row.value;
        }
    }
    return t;
}

KpuTables compute_kpu_tables(bool outer_only, unsigned threads) {
    TableOptions opt{threads, outer_only};
    return kpu_tables_from(loops_through_edge_table(28, opt), s_table(20, opt), r_table(20, opt),
                           q_table(19, opt));
}

ColumnResult column_total(FixedClass fixed, const WeightParams& p, const KpuTables& t, ColumnOptions opt) {
    if (p.lattice != LatticeKind::Hexagonal) throw std::invalid_argument("column totals are hexagonal");
    return to_result(fixed, column_t<double>(fixed, p, t, opt));
}

ColumnOptions default_column_options(FixedClass c) {
    ColumnOptions o;
    if (c == FixedClass::Lgt6) o.long_walk_multiplier = CorridorMultiplier::Flat;
    return o;
}

int d_min(int K, int N, int lp) { return std::min(2 * K - 2 * (lp - 4), 2 * (N - K) - lp + 1); }

KpuReport verify_kpu_hex(int m, int K, int N, const KpuTables& tables) {
    if (m < 0) throw OutOfRegime("outside proven regime: decoration m must be >= 0");
    if (!((K == 0 || K >= 25) && N - K >= 53)) {
        std::ostringstream os;
        os << "outside proven regime: need K = 0 or K >= 25, and N - K >= 53 (got K=" << K << ", N=" << N << ")";
        throw OutOfRegime(os.str());
    }
    KpuReport r;
    r.lattice = LatticeKind::Hexagonal;
    r.m = m;
    r.K = K;
    r.N = N;
    if (K > 0)
        for (int lp = 3; lp <= 19; ++lp)
            if (d_min(K, N, lp) < 20) throw OutOfRegime("outside proven regime: d_min < 20");
    const auto p = hex_params(m);
    for (auto c : kFixedClasses) r.columns.push_back(column_total(c, p, tables, default_column_options(c)));
    auto finish = [&] {
        r.margins.clear();
        for (const auto& c : r.columns) r.margins.push_back(1.0 - c.total);
        r.worst_margin = *std::min_element(r.margins.begin(), r.margins.end());
    };
    finish();
    if (r.worst_margin < 1e-4) {
        r.columns.clear();
        for (auto c : kFixedClasses)
            r.columns.push_back(to_result(c, column_t<long double>(c, p, tables, default_column_options(c))));
        r.extended_precision = true;
        finish();
    }
    r.pass = r.worst_margin > 0;
    r.notes.push_back("L>6 column uses the flat corridor multiplier 1.7 l for even 8 <= l' <= 20");
    if (K == 0) r.notes.push_back("K = 0: inner-corner windows removed from the tables");
    return r;
}

KpuReport verify_kpu_square(int m, int K, int N, const std::map<int, std::int64_t>& cn) {
    if (m == 0) throw OutOfRegime("criterion not satisfied for undecorated square lattice (m = 0)");
    if (m < 0) throw OutOfRegime("outside proven regime: decoration m must be >= 1");
    if (!(N > std::max(K + 4, 8))) {
        std::ostringstream os;
        os << "outside proven regime: need N > max(K + 4, 8) (got K=" << K << ", N=" << N << ")";
        throw OutOfRegime(os.str());
    }
    const auto p = square_params(m);
    KpuReport r;
    r.lattice = LatticeKind::Square;
    r.m = m;
    r.K = K;
    r.N = N;
    long double total = 0.5L * little_w_t<long double>(2, p);
    for (int n = 3; n <= 7; ++n) {
        auto it = cn.find(n);
        if (it == cn.end()) throw std::invalid_argument("missing C_" + std::to_string(n));
        total += static_cast<long double>(it->second) * little_w_t<long double>(n, p);
    }
    const long double m1 = m + 1;
    const long double y = std::exp((0.085L + 0.046L) * m1) / std::pow(3.0L, m);
    if (y >= 1) throw Divergent("square tail diverges");
    // sum_{n>=8} 4(n+1) 3^{n-1} w_m(n) = 4/(m+1) sum (n+1) y^n
    total += 4 / m1 * (arith_geom(y, 8) + geom(y, 8));
    r.square_total = static_cast<double>(total);
    r.square_bound = p.slope;
    r.margins = {r.square_bound - r.square_total};
    r.worst_margin = r.margins[0];
    r.pass = r.square_total <= r.square_bound;
    return r;
}

RegimeResult corr_regime_check(LatticeKind lattice, int M, int d) {
    RegimeResult r;
    auto add = [&](std::string name, double threshold, double value) {
        r.checks.push_back({std::move(name), threshold, value, value >= threshold});
    };
    if (lattice == LatticeKind::Hexagonal) {
        add("M/2 >= 25", 25, M / 2.0);
        add("d > 6 (short fixed walks unchanged)", 7, d);
        add("d >= 7 (crossing walks longer than 6)", 7, d);
        add("d >= 22 (M_ww bound)", 22, d);
        add("d >= 50 (corridor lemma, odd-length bound)", 50, d);
    } else {
        add("d >= 8", 8, d);
    }
    r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const RegimeCheck& c) { return c.ok; });
    return r;
}

nlohmann::json to_json(const KpuReport& r) {
    nlohmann::json j;
    j["lattice"] = to_string(r.lattice);
    j["m"] = r.m;
    j["K"] = r.K;
    j["N"] = r.N;
    if (r.lattice == LatticeKind::Hexagonal) {
        nlohmann::json cols = nlohmann::json::array();
        for (const auto& c : r.columns) {
            nlohmann::json cells = nlohmann::json::object();
            for (const auto& [k, v] : c.cells) cells[to_string(k)] = v;
            cols.push_back({{"fixed", to_string(c.fixed)}, {"cells", cells}, {"total", c.total}});
        }
        j["columns"] = cols;
    } else {
        j["total"] = r.square_total;
        j["bound"] = r.square_bound;
    }
    j["margins"] = r.margins;
    j["worst_margin"] = r.worst_margin;
    j["extended_precision"] = r.extended_precision;
    j["pass"] = r.pass;
    j["notes"] = r.notes;
    return j;
}

nlohmann::json to_json(const RegimeResult& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"threshold", c.threshold}, {"value", c.value}, {"ok", c.ok}});
    return {{"pass", r.pass}, {"checks", checks}};
}

}  // namespace aklt
