#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "aklt/lattice.hpp"

namespace aklt {

struct ModelConstants {
    LatticeKind lattice;
    int K_gamma;
    int N_gamma;
    double eta;
    double epsilon;
    int m_gamma;
    // printed value of the LTQO constant
    double C_quoted;

    // L(x) = 1.8 (2x + 1) on the hexagonal lattice, 1.36 x on the square lattice
    double L(double x) const;
    // |gamma^(K)|: 6(2K - 1) resp. 8(K - 1)
    int inner_loop_length(int K) const;
    // C = 2 L(K_g) / |gamma^(K_g)| * exp((m_g + 1) L(K_g) / K_g^(m_g + 1))
    double C_recomputed() const;
};

const ModelConstants& model_constants(LatticeKind lattice);

struct BoundResult {
    double value = 0;
    bool regime_ok = false;
    std::vector<std::string> regime_notes;
    nlohmann::json inputs;
};

BoundResult f_bound(LatticeKind lattice, int m, int N, int K);
BoundResult indistinguishability_bound(LatticeKind lattice, int m, int N, int K, double norm_A);
// Uses the recomputed constant unless `use_quoted` is set.
BoundResult ltqo_bound(LatticeKind lattice, int m, int N, int K, double norm_A, bool use_quoted = false);
BoundResult correlation_bound(LatticeKind lattice, int M, int d, double norm_A, double norm_B);

// Smallest N (at fixed m, K) whose indistinguishability bound is below target.
int smallest_N_for(LatticeKind lattice, int m, int K, double norm_A, double target);

struct ConstantCheck {
    LatticeKind lattice;
    double quoted = 0;
    double recomputed = 0;
    bool agrees = false;  // within 5e-4
};

ConstantCheck check_ltqo_constant(LatticeKind lattice);

nlohmann::json to_json(const BoundResult& r);
nlohmann::json to_json(const ConstantCheck& c);

}  // namespace aklt
