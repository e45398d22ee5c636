#include "aklt/oracle.hpp"

#include <bit>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "aklt/reference.hpp"

namespace aklt {

Philox4x32::Block Philox4x32::bijection(Block c, Key k) {
    constexpr std::uint32_t M0 = 0xD2511F53, M1 = 0xCD9E8D57;
    constexpr std::uint32_t W0 = 0x9E3779B9, W1 = 0xBB67AE85;
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            k[0] += W0;
            k[1] += W1;
        }
        const std::uint64_t p0 = std::uint64_t{M0} * c[0];
        const std::uint64_t p1 = std::uint64_t{M1} * c[2];
        c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<std::uint32_t>(p0)};
    }
    return c;
}

double to_unit(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t bits = ((std::uint64_t{hi} << 32) | lo) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
}

SpherePoint SpherePoint::from_angles(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double SpherePoint::norm() const { return std::sqrt(x * x + y * y + z * z); }

SpherePoint sphere_from_uniforms(double u, double v) {
    const double z = 2 * u - 1;
    const double r = std::sqrt(std::max(0.0, 1 - z * z));
    const double phi = 2 * std::numbers::pi * v;
    return {r * std::cos(phi), r * std::sin(phi), z};
}

SpherePoint sample_sphere(const Philox4x32& gen, std::uint64_t i, std::uint32_t k, std::uint32_t stream) {
    auto b = gen({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32), k, stream});
    return sphere_from_uniforms(to_unit(b[0], b[1]), to_unit(b[2], b[3]));
}

bool McEstimate::within(double sigmas) const { return std::abs(estimate - exact) <= sigmas * std_error; }

double edge_identity_exact(const SpherePoint& y, const SpherePoint& z) { return y.dot(z) / 3; }

double degree4_identity_exact(const std::array<SpherePoint, 4>& w) {
    return (w[0].dot(w[1]) * w[2].dot(w[3]) + w[0].dot(w[2]) * w[1].dot(w[3]) + w[0].dot(w[3]) * w[1].dot(w[2])) / 15;
}

McEstimate mc_edge_identity(const SpherePoint& y, const SpherePoint& z, const McConfig& cfg) {
    auto e = mc_integrate(1, 1, cfg, [&](const std::vector<SpherePoint>& p) { return y.dot(p[0]) * p[0].dot(z); });
    e.exact = edge_identity_exact(y, z);
    return e;
}

McEstimate mc_degree4_identity(const std::array<SpherePoint, 4>& w, const McConfig& cfg) {
    auto e = mc_integrate(1, 2, cfg, [&](const std::vector<SpherePoint>& p) {
        return w[0].dot(p[0]) * w[1].dot(p[0]) * w[2].dot(p[0]) * w[3].dot(p[0]);
    });
    e.exact = degree4_identity_exact(w);
    return e;
}

namespace {

struct Indexed {
    std::vector<Vertex> vertices;
    std::vector<std::pair<int, int>> edges;
};

Indexed index_volume(const std::vector<Edge>& volume) {
    std::set<Edge> uniq;
    for (const auto& e : volume) uniq.insert(canonical(e));
    std::map<Vertex, int> id;
    Indexed out;
    auto get = [&](Vertex v) {
        auto [it, fresh] = id.try_emplace(v, static_cast<int>(out.vertices.size()));
        if (fresh) out.vertices.push_back(v);
        return it->second;
    };
    for (const auto& e : uniq) out.edges.emplace_back(get(e.a), get(e.b));
    return out;
}

int find(std::vector<int>& parent, int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
}

// Sum over pairings at every vertex of the subgraph `mask`: each degree-2
// vertex contributes 1/3, each degree-4 vertex 1/15 per pairing, and each
// closed strand a trace factor 3.
double contract(const Indexed& g, std::uint32_t mask) {
    const int nv = static_cast<int>(g.vertices.size());
    std::vector<std::vector<int>> inc(nv);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        if (mask >> e & 1) {
            inc[g.edges[e].first].push_back(e);
            inc[g.edges[e].second].push_back(e);
        }
    std::vector<int> deg4;
    double factor = 1;
    for (int v = 0; v < nv; ++v) {
        const auto d = inc[v].size();
        if (d % 2) return 0;
        if (d == 2) factor /= 3;
        else if (d == 4) {
            factor /= 15;
            deg4.push_back(v);
        } else if (d > 4) {
            throw std::invalid_argument("vertex degree above 4");
        }
    }
    static constexpr int kPairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    double total = 0;
    const auto combos = static_cast<std::uint32_t>(std::pow(3, deg4.size()));
    for (std::uint32_t c = 0; c < combos; ++c) {
        std::vector<int> parent(g.edges.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto join = [&](int a, int b) { parent[find(parent, a)] = find(parent, b); };
        for (int v = 0; v < nv; ++v)
            if (inc[v].size() == 2) join(inc[v][0], inc[v][1]);
        std::uint32_t code = c;
        for (int v : deg4) {
            const int* p = kPairings[code % 3];
            code /= 3;
            join(inc[v][p[0]], inc[v][p[1]]);
            join(inc[v][p[2]], inc[v][p[3]]);
        }
        int strands = 0;
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
            if ((mask >> e & 1) && find(parent, e) == e) ++strands;
        total += std::pow(3.0, strands);
    }
    return factor * total;
}

}  // namespace

double polymer_value(const std::vector<Edge>& volume) {
    const auto g = index_volume(volume);
    const int ne = static_cast<int>(g.edges.size());
    if (ne > 24) throw std::invalid_argument("volume too large for exact polymer sum");
    double sum = 0;
    for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
        const double c = contract(g, mask);
        if (c != 0) sum += (std::popcount(mask) % 2 ? -c : c);
    }
    return std::ldexp(sum, -ne);
}

PartitionCheck brute_force_partition(const std::vector<Edge>& volume, LatticeKind lattice, const McConfig& cfg) {
    const auto g = index_volume(volume);
    const std::size_t limit = lattice == LatticeKind::Hexagonal ? 8 : 9;
    if (g.vertices.size() > limit)
        throw std::invalid_argument("volume too large: " + std::to_string(g.vertices.size()) + " vertices, limit " +
                                    std::to_string(limit));
    PartitionCheck out;
    out.polymer_value = polymer_value(volume);
    auto e = mc_integrate(static_cast<unsigned>(g.vertices.size()), 3, cfg, [&](const std::vector<SpherePoint>& p) {
        double prod = 1;
        for (const auto& [a, b] : g.edges) prod *= (1 - p[a].dot(p[b])) / 2;
        return prod;
    });
    out.mc_estimate = e.estimate;
    out.std_error = e.std_error;
    out.agrees = std::abs(out.mc_estimate - out.polymer_value) <= 4 * out.std_error;
    return out;
}

std::vector<Edge> single_hexagon_volume() {
    auto h = hexagon_around({0, 0});
    std::vector<Edge> out;
    for (std::size_t i = 0; i < h.size(); ++i) out.push_back(make_edge(h[i], h[(i + 1) % h.size()]));
    return out;
}

std::vector<Edge> unit_square_volume() {
    return {make_edge({0, 0}, {1, 0}), make_edge({1, 0}, {1, 1}), make_edge({1, 1}, {0, 1}),
            make_edge({0, 1}, {0, 0})};
}

ParityReport reference_port_compare(TableId table, int max, unsigned threads) {
    if (auto err = check_range(table, max)) throw std::invalid_argument(*err);
    ParityReport rep{table, max, {}};
    TableOptions opt;
    opt.threads = threads;
    std::map<int, std::int64_t> ref;
    switch (table) {
        case TableId::LoopsThroughEdge: ref = reference::loops(max); break;
        case TableId::WalksToBoundaryN: ref = reference::walks_to_boundary(max); break;
        case TableId::RightEndpointR: ref = reference::right_endpoint(max); break;
        case TableId::OddCornerQ: ref = reference::odd_corner(max); break;
        case TableId::SquareCn:
            for (int n = 3; n <= max; ++n) ref[n] = reference::square_cn(n);
            break;
        case TableId::SupTableS: throw std::invalid_argument("no reference port for the S table");
    }
    const auto eng = compute_table(table, max, opt).as_map();
    for (const auto& [l, v] : ref) {
        auto it = eng.find(l);
        const std::int64_t e = it == eng.end() ? -1 : it->second;
        if (e != v) rep.diffs.push_back({l, e, v});
    }
    for (const auto& [l, v] : eng)
        if (!ref.count(l)) rep.diffs.push_back({l, v, -1});
    return rep;
}

nlohmann::json to_json(const McEstimate& e) {
    return {{"estimate", e.estimate}, {"std_error", e.std_error}, {"exact", e.exact}, {"within_4sigma", e.within()}};
}

nlohmann::json to_json(const PartitionCheck& p) {
    return {{"mc_estimate", p.mc_estimate},
            {"std_error", p.std_error},
            {"polymer_value", p.polymer_value},
            {"agrees", p.agrees}};
}

nlohmann::json to_json(const ParityReport& r) {
    nlohmann::json diffs = nlohmann::json::array();
    for (const auto& d : r.diffs) diffs.push_back({{"l", d.index}, {"engine", d.engine}, {"reference", d.reference}});
    return {{"table", to_string(r.table)}, {"max", r.max}, {"ok", r.ok()}, {"diffs", diffs}};
}

}  // namespace aklt
