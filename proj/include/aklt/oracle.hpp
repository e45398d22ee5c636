#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "aklt/lattice.hpp"
#include "aklt/tables.hpp"

namespace aklt {

// Philox4x32-10 counter-based generator.
class Philox4x32 {
public:
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    explicit Philox4x32(std::uint64_t seed) : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

    static Block bijection(Block ctr, Key key);
    Block operator()(const Block& ctr) const { return bijection(ctr, key_); }

private:
    Key key_;
};

// uniform double in [0, 1) from two 32-bit words
double to_unit(std::uint32_t hi, std::uint32_t lo);

struct SpherePoint {
    double x = 0, y = 0, z = 1;

    static SpherePoint from_angles(double theta, double phi);
    double dot(const SpherePoint& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const;
};

// z uniform on [-1, 1], azimuth uniform on [0, 2pi)
SpherePoint sphere_from_uniforms(double u, double v);

struct McConfig {
    std::uint64_t seed = 42;
    std::uint64_t samples = 1'000'000;
    unsigned threads = 1;
};

struct McEstimate {
    double estimate = 0;
    double std_error = 0;
    double exact = 0;
    bool within(double sigmas = 4) const;
};

// Deterministic sampler: sample i, sphere k of stream s uses counter (i, k, s).
SpherePoint sample_sphere(const Philox4x32& gen, std::uint64_t i, std::uint32_t k, std::uint32_t stream);

// Mean of f over `samples` draws of `spheres` independent uniform points.
// f receives the points of one draw. Reduction order is fixed.
template <class F>
McEstimate mc_integrate(unsigned spheres, std::uint32_t stream, const McConfig& cfg, F&& f);

double edge_identity_exact(const SpherePoint& y, const SpherePoint& z);
double degree4_identity_exact(const std::array<SpherePoint, 4>& w);

McEstimate mc_edge_identity(const SpherePoint& y, const SpherePoint& z, const McConfig& cfg);
McEstimate mc_degree4_identity(const std::array<SpherePoint, 4>& w, const McConfig& cfg);

// Exact value of int prod_{edges} (1 - Omega_x . Omega_y)/2 through its
// expansion into closed polymers.
double polymer_value(const std::vector<Edge>& volume);

struct PartitionCheck {
    double mc_estimate = 0;
    double std_error = 0;
    double polymer_value = 0;
    bool agrees = false;
};

// Throws std::invalid_argument when the volume exceeds 8 (hexagonal) or
// 9 (square) vertices.
PartitionCheck brute_force_partition(const std::vector<Edge>& volume, LatticeKind lattice, const McConfig& cfg);

std::vector<Edge> single_hexagon_volume();
std::vector<Edge> unit_square_volume();

struct ParityDiff {
    int index = 0;
    std::int64_t engine = 0;
    std::int64_t reference = 0;
};

struct ParityReport {
    TableId table;
    int max = 0;
    std::vector<ParityDiff> diffs;
    bool ok() const { return diffs.empty(); }
};

ParityReport reference_port_compare(TableId table, int max, unsigned threads = 1);

nlohmann::json to_json(const McEstimate& e);
nlohmann::json to_json(const PartitionCheck& p);
nlohmann::json to_json(const ParityReport& r);

}  // namespace aklt

#include "aklt/oracle_impl.hpp"
