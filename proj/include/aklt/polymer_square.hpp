#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "aklt/lattice.hpp"
#include "aklt/polymer_hex.hpp"

namespace aklt {

enum class TrailKind { Walk, Loop };

// Edge-self-avoiding trail on Z^2. For loops the closing edge runs from the
// last vertex back to the first, which is not repeated. The order of the
// vertex sequence records how the trail is routed through a vertex it
// visits twice.
struct Trail {
    TrailKind kind = TrailKind::Walk;
    std::vector<Vertex> vertices;
    int length() const {
        int n = static_cast<int>(vertices.size());
        return kind == TrailKind::Walk ? n - 1 : n;
    }
    friend auto operator<=>(const Trail&, const Trail&) = default;
};

Trail canonical(const Trail& t);
bool is_edge_self_avoiding(const Trail& t);
// Vertices visited twice (the degree-4 vertices of the trail).
std::vector<Vertex> degree4_vertices(const Trail& t);
// At each degree-4 vertex, the two pairs of incident edges joined by the
// trail, each pair and the pair list sorted.
using Pairing = std::pair<std::pair<Edge, Edge>, std::pair<Edge, Edge>>;
std::vector<std::pair<Vertex, Pairing>> routings(const Trail& t);

using TrailConstraints = EnumerationConstraints;

std::vector<Vertex> square_step_candidates(Vertex prev, Vertex cur);

std::vector<Trail> generate_trails(const TrailConstraints& c, EnumOptions opt = {});
std::uint64_t count_trails(const TrailConstraints& c, EnumOptions opt = {});
std::vector<std::uint64_t> count_trails_hitting(const TrailConstraints& c,
                                                const std::vector<std::vector<Vertex>>& targets,
                                                EnumOptions opt = {});

// Closed trails of length n through v in the bulk, canonical.
std::vector<Trail> loops_through_vertex(Vertex v, int n);

struct TrailCounts {
    std::uint64_t walks = 0;
    std::uint64_t loops = 0;
    std::uint64_t total() const { return walks + loops; }
};

// Walks of length n meeting v inside the corner window (inner or outer), and
// bulk loops of length n through v.
TrailCounts trails_through_vertex(Vertex v, int n, bool inner_corner, EnumOptions opt = {});

// Largest walk count over the vertices of the n x n block at the corner and
// both corner types, plus the bulk loop count.
TrailCounts max_trails_through_vertex(int n, EnumOptions opt = {});

}  // namespace aklt
