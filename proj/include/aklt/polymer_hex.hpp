#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aklt/lattice.hpp"

namespace aklt {

// Self-avoiding walk; |gamma| = vertices.size() - 1.
struct Walk {
    std::vector<Vertex> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
    friend auto operator<=>(const Walk&, const Walk&) = default;
};

// Closed self-avoiding cycle, stored without repeating the first vertex.
struct Loop {
    std::vector<Vertex> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
    friend auto operator<=>(const Loop&, const Loop&) = default;
};

Walk canonical(const Walk& w);
Loop canonical(const Loop& l);
Walk reversed(const Walk& w);
bool is_self_avoiding_walk(const Walk& w, LatticeKind lattice);
bool is_self_avoiding_loop(const Loop& l, LatticeKind lattice);

struct EnumerationConstraints {
    int length = 0;
    std::vector<DirectedEdge> start_edges;
    std::vector<DirectedEdge> end_edges;  // only the boundary vertex of each is used
    std::vector<Vertex> must_intersect;
    // Vertices forbidden strictly inside the walk. Defaults to the boundary
    // vertices of start_edges and end_edges.
    std::optional<std::vector<Vertex>> avoid;
};

struct EnumOptions {
    unsigned threads = 1;
};

// Continuations of a walk that arrived at `cur` from `prev`.
std::vector<Vertex> hex_step_candidates(Vertex prev, Vertex cur);

std::vector<Walk> generate_walks(const EnumerationConstraints& c, EnumOptions opt = {});
std::uint64_t count_walks(const EnumerationConstraints& c, EnumOptions opt = {});

// Loops are enumerated from each start edge and must close on an end vertex.
std::vector<Loop> generate_loops(const EnumerationConstraints& c, EnumOptions opt = {});
std::uint64_t count_loops(const EnumerationConstraints& c, EnumOptions opt = {});

// Accepted walks are enumerated once; entry t counts those meeting targets[t].
std::vector<std::uint64_t> count_walks_hitting(const EnumerationConstraints& c,
                                               const std::vector<std::vector<Vertex>>& targets,
                                               EnumOptions opt = {});

// Walks of length l leaving along `first` and ending on the boundary of a
// corner window (inner or outer), never touching it in between.
std::uint64_t walk_concatenation_count(const DirectedEdge& first, int l, bool inner_corner,
                                       int window, EnumOptions opt = {});

// All simple cycles of the given length through vertex v (or any vertex of
// `through`) avoiding `forbidden`, canonicalized.
std::vector<Loop> cycles_through(const std::vector<Vertex>& through, int length,
                                 const VertexSet& forbidden, LatticeKind lattice);

}  // namespace aklt
