#include "aklt/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "aklt/criterion.hpp"

namespace aklt {

double ModelConstants::L(double x) const {
    return lattice == LatticeKind::Hexagonal ? 1.8 * (2 * x + 1) : 1.36 * x;
}

int ModelConstants::inner_loop_length(int K) const {
    return lattice == LatticeKind::Hexagonal ? 6 * (2 * K - 1) : 8 * (K - 1);
}

double ModelConstants::C_recomputed() const {
    const double LK = L(K_gamma);
    return 2 * LK / inner_loop_length(K_gamma) * std::exp((m_gamma + 1) * LK / std::pow(K_gamma, m_gamma + 1));
}

const ModelConstants& model_constants(LatticeKind lattice) {
    static const ModelConstants hex{LatticeKind::Hexagonal, 25, 52, 2 * 0.0086, 0.0086, 0, 24.5615};
    static const ModelConstants sq{LatticeKind::Square, 2, 4, 0.046, 0.046, 1, 2.4951};
    return lattice == LatticeKind::Hexagonal ? hex : sq;
}

namespace {

nlohmann::json echo(LatticeKind lattice, int m, int N, int K) {
    return {{"lattice", to_string(lattice)}, {"m", m}, {"N", N}, {"K", K}};
}

void check_theorem_regime(const ModelConstants& c, int m, int N, int K, BoundResult& r) {
    r.regime_ok = true;
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) {
            r.regime_ok = false;
            r.regime_notes.push_back("violated: " + what);
        }
    };
    need(m >= c.m_gamma, "m >= " + std::to_string(c.m_gamma));
    need(K > c.K_gamma, "K > " + std::to_string(c.K_gamma));
    need(N > K + c.N_gamma, "N > K + " + std::to_string(c.N_gamma));
}

}  // namespace

BoundResult f_bound(LatticeKind lattice, int m, int N, int K) {
    const auto& c = model_constants(lattice);
    BoundResult r;
    r.inputs = echo(lattice, m, N, K);
    check_theorem_regime(c, m, N, K, r);
    r.value = (m + 1) * c.L(K) * std::exp(-c.eta * (m + 1) * (N - K));
    return r;
}

BoundResult indistinguishability_bound(LatticeKind lattice, int m, int N, int K, double norm_A) {
    BoundResult r = f_bound(lattice, m, N, K);
    const double F = r.value;
    r.value = 2 * norm_A * F * std::exp(F);
    r.inputs["normA"] = norm_A;
    return r;
}

BoundResult ltqo_bound(LatticeKind lattice, int m, int N, int K, double norm_A, bool use_quoted) {
    const auto& c = model_constants(lattice);
    BoundResult r;
    r.inputs = echo(lattice, m, N, K);
    r.inputs["normA"] = norm_A;
    r.regime_ok = true;
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) {
            r.regime_ok = false;
            r.regime_notes.push_back("violated: " + what);
        }
    };
    need(m >= c.m_gamma, "m >= m_Gamma");
    need(K >= c.K_gamma, "K >= K_Gamma");
    const double need_N = K + std::max<double>(c.N_gamma, K > 0 ? std::log(K) / c.eta : 0.0);
    need(N >= need_N, "N >= K + max(N_Gamma, ln(K)/eta)");
    const double C = use_quoted ? c.C_quoted : c.C_recomputed();
    const double gamma_len = (m + 1) * c.inner_loop_length(K);
    r.value = 2 * C * gamma_len * norm_A * std::exp(-c.eta * (m + 1) * (N - K));
    r.inputs["C"] = C;
    return r;
}

BoundResult correlation_bound(LatticeKind lattice, int M, int d, double norm_A, double norm_B) {
    const auto& c = model_constants(lattice);
    BoundResult r;
    r.inputs = {{"lattice", to_string(lattice)}, {"M", M}, {"d", d}, {"normA", norm_A}, {"normB", norm_B}};
    auto regime = corr_regime_check(lattice, M, d);
    r.regime_ok = regime.pass;
    for (const auto& ch : regime.checks)
        if (!ch.ok) r.regime_notes.push_back("violated: " + ch.name);
    r.value = norm_A * norm_B * std::pow(static_cast<double>(M), 2.9) * std::exp(-c.epsilon * d);
    return r;
}

int smallest_N_for(LatticeKind lattice, int m, int K, double norm_A, double target) {
    auto val = [&](int N) { return indistinguishability_bound(lattice, m, N, K, norm_A).value; };
    int lo = K + 1, hi = K + 2;
    while (val(hi) >= target) {
        lo = hi;
        hi = K + 2 * (hi - K);
        if (hi - K > (1 << 28)) throw std::runtime_error("target not reachable");
    }
    if (val(lo) < target) return lo;
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        (val(mid) < target ? hi : lo) = mid;
    }
    return hi;
}

ConstantCheck check_ltqo_constant(LatticeKind lattice) {
    const auto& c = model_constants(lattice);
    ConstantCheck out;
    out.lattice = lattice;
    out.quoted = c.C_quoted;
    out.recomputed = c.C_recomputed();
    out.agrees = std::abs(out.quoted - out.recomputed) <= 5e-4;
    return out;
}

nlohmann::json to_json(const BoundResult& r) {
    return {{"value", r.value}, {"regime_ok", r.regime_ok}, {"regime_notes", r.regime_notes}, {"inputs", r.inputs}};
}

nlohmann::json to_json(const ConstantCheck& c) {
    return {{"lattice", to_string(c.lattice)},
            {"quoted", c.quoted},
            {"recomputed", c.recomputed},
            {"agrees", c.agrees}};
}

}  // namespace aklt
