#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "aklt/lattice.hpp"
#include "aklt/polymer_hex.hpp"
#include "aklt/polymer_square.hpp"
#include "aklt/tables.hpp"

namespace aklt {

// Raised when parameters fall outside the range where a criterion is proven.
class OutOfRegime : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a geometric series used by a tail bound does not converge.
class Divergent : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct WeightParams {
    LatticeKind lattice = LatticeKind::Hexagonal;
    int m = 0;
    double epsilon = 0.0086;
    // a(l) = slope * l except for the entries of `a_small`
    double slope = 0.15;
    std::map<int, double> a_small;

    double a(int l) const;
    double a_m(int l) const { return (m + 1) * a(l); }
};

WeightParams hex_params(int m = 0);
WeightParams square_params(int m = 1);

// Uniform bound on |W_m(gamma)|.
double weight_magnitude(int length, int degree4, const WeightParams& p);
double weight_magnitude(const Walk& w, const WeightParams& p);
double weight_magnitude(const Loop& l, const WeightParams& p);
double weight_magnitude(const Trail& t, const WeightParams& p);

// w_m(l) = 3 (e^{a(l)+eps l} / 3^l)^{m+1} on the hexagonal lattice, and
// e^{(a+eps)(m+1)n} / ((m+1) 3^{(m+1)n-1}) for square-lattice trails.
double little_w(int l, const WeightParams& p);

// sum_{k >= k_start} w_m(2k) 2^{2k-3}
double tail_sum_loops(int k_start, const WeightParams& p);
// sum_{l >= l_start} c(l) w_m(l) with c(l) = (2l+95) 2^{l-10}, or 2^{l-4}
// when `boundary_variant` is set.
double tail_sum_walks(int l_start, const WeightParams& p, bool boundary_variant = false);
// Same series by direct summation until terms fall below rel_tol.
double tail_sum_loops_truncated(int k_start, const WeightParams& p, double rel_tol = 1e-16);
double tail_sum_walks_truncated(int l_start, const WeightParams& p, bool boundary_variant = false,
                                double rel_tol = 1e-16);

enum class FixedClass { W3, W4, W5, W6, L6, Wgt6, Lgt6 };
enum class SummedClass { W3, W4, W5, W6, W7, W8, W9, W10, W11to20, Wgt20, L6, L10, Lgt10 };

constexpr std::array<FixedClass, 7> kFixedClasses = {FixedClass::W3, FixedClass::W4, FixedClass::W5, FixedClass::W6,
                                                     FixedClass::L6, FixedClass::Wgt6, FixedClass::Lgt6};
constexpr std::array<SummedClass, 13> kSummedClasses = {
    SummedClass::W3,  SummedClass::W4,      SummedClass::W5,    SummedClass::W6, SummedClass::W7,
    SummedClass::W8,  SummedClass::W9,      SummedClass::W10,   SummedClass::W11to20,
    SummedClass::Wgt20, SummedClass::L6,    SummedClass::L10,   SummedClass::Lgt10};

const char* to_string(FixedClass c);
const char* to_string(SummedClass c);

// Multiplier of R(l') for even 8 <= l' <= 20 in the long-polymer columns.
enum class CorridorMultiplier {
    Lemma,       // l/2 + 11 l'/4 - 12
    Flat         // 1.7 l, independent of l'
};

// Combinatorial inputs of the criterion.
struct KpuTables {
    std::map<int, std::int64_t> loops;                       // N_loop(l), even l <= 28
    std::map<int, std::int64_t> R;                           // even 4..20
    std::map<int, std::int64_t> Q;                           // odd 3..19
    std::map<std::string, std::vector<std::int64_t>> S;      // column -> l' = 3..20
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> M;  // column -> (M(l,6), M(l,10))
};

// Computes every table the criterion needs. `outer_only` drops the inner
// corner windows (the K = 0 volume).
KpuTables compute_kpu_tables(bool outer_only = false, unsigned threads = 1);
KpuTables kpu_tables_from(const TableResult& loops, const TableResult& s, const TableResult& r,
                          const TableResult& q);

struct ColumnOptions {
    CorridorMultiplier long_walk_multiplier = CorridorMultiplier::Lemma;
};

struct ColumnResult {
    FixedClass fixed;
    std::map<SummedClass, double> cells;
    double total = 0;
};

ColumnResult column_total(FixedClass fixed, const WeightParams& p, const KpuTables& t,
                          ColumnOptions opt = {});

struct KpuReport {
    LatticeKind lattice = LatticeKind::Hexagonal;
    int m = 0;
    int K = 0;
    int N = 0;
    std::vector<ColumnResult> columns;
    // square lattice: single sum compared against a = 0.085
    double square_total = 0;
    double square_bound = 0;
    std::vector<double> margins;
    double worst_margin = 0;
    bool extended_precision = false;
    bool pass = false;
    std::vector<std::string> notes;
};

// Default column options reproducing the printed totals: the lemma
// multiplier in the W>6 column and the flat one in the L>6 column.
ColumnOptions default_column_options(FixedClass c);

KpuReport verify_kpu_hex(int m, int K, int N, const KpuTables& tables);
KpuReport verify_kpu_square(int m, int K, int N, const std::map<int, std::int64_t>& cn);

// d_min(l') = min{2K - 2(l'-4), 2(N-K) - l' + 1}
int d_min(int K, int N, int lp);

struct RegimeCheck {
    std::string name;
    double threshold = 0;
    double value = 0;
    bool ok = false;
};

struct RegimeResult {
    bool pass = false;
    std::vector<RegimeCheck> checks;
};

RegimeResult corr_regime_check(LatticeKind lattice, int M, int d);

nlohmann::json to_json(const KpuReport& r);
nlohmann::json to_json(const RegimeResult& r);

}  // namespace aklt
