#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace aklt {

enum class LatticeKind { Hexagonal, Square };

const char* to_string(LatticeKind kind);

// Integer lattice point. The hexagonal lattice uses a brick-wall embedding:
// every horizontal bond (x,y)-(x+1,y) is present and the vertical bond
// (x,y)-(x,y+1) is present iff x+y is even.
struct Vertex {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct VertexHash {
    std::size_t operator()(const Vertex& v) const noexcept {
        auto ux = static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.x));
        auto uy = static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.y));
        std::uint64_t h = (ux << 32) | uy;
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        return static_cast<std::size_t>(h);
    }
};

using VertexSet = std::unordered_set<Vertex, VertexHash>;

// Undirected edge, endpoints stored in lexicographic order.
struct Edge {
    Vertex a;
    Vertex b;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge canonical(Edge e);
Edge make_edge(Vertex u, Vertex v);

struct EdgeHash {
    std::size_t operator()(const Edge& e) const noexcept {
        VertexHash h;
        return h(e.a) * 0x9e3779b97f4a7c15ULL ^ h(e.b);
    }
};

using EdgeSet = std::unordered_set<Edge, EdgeHash>;

// Oriented bond; boundary windows list (boundary vertex, first interior vertex).
struct DirectedEdge {
    Vertex from;
    Vertex to;
    friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

std::vector<Vertex> neighbors(Vertex v, LatticeKind lattice);
bool adjacent(Vertex u, Vertex v, LatticeKind lattice);

// Hexagonal lattice in "doubled" Cartesian coordinates: a point (x, y) of the
// unit-bond honeycomb maps to (2x, 2y/sqrt 3). These are the coordinates the
// boundary-window constructions are naturally written in.
struct Doubled {
    int X = 0;
    int Y = 0;
    friend auto operator<=>(const Doubled&, const Doubled&) = default;
};

bool is_hex_site(Doubled p);
Vertex from_doubled(Doubled p);
Doubled to_doubled(Vertex v);
// Cartesian position of a brick-wall vertex on the unit-bond honeycomb.
std::pair<double, double> hex_position(Vertex v);

// The six vertices of the hexagon whose centre is at doubled coordinates c
// (c.X divisible by 3, c.X + c.Y even), listed clockwise.
std::vector<Vertex> hexagon_around(Doubled c);

// Graph distance from the central hexagon on the dual lattice.
int hex_dual_distance(Doubled c);

enum class BoundaryClass { Interior, InnerBoundary, OuterBoundary, NotInVolume };

const char* to_string(BoundaryClass c);

// The annular volume between an inner ball of radius K and an outer ball of
// radius N. K = 0 means no hole.
class Annulus {
public:
    Annulus(LatticeKind lattice, int N, int K);

    LatticeKind lattice() const { return lattice_; }
    int N() const { return N_; }
    int K() const { return K_; }

    bool contains_vertex(Vertex v) const;
    bool contains_edge(Edge e) const;
    int degree(Vertex v) const;
    BoundaryClass classify(Vertex v) const;

    const EdgeSet& edges() const { return edges_; }
    std::vector<Vertex> vertices() const;
    std::vector<Vertex> boundary(BoundaryClass which) const;

private:
    LatticeKind lattice_;
    int N_;
    int K_;
    EdgeSet edges_;
    std::unordered_map<Vertex, int, VertexHash> degree_;
    VertexSet inner_region_;
};

// Edges of the hexagons at dual distance <= r - 1 (the hole of radius r).
EdgeSet hex_ball_interior_edges(int r);

enum class WindowKind { StraightInner, StraightOuter, CornerInner, CornerOuter };

const char* to_string(WindowKind k);

// Hexagonal boundary windows. Straight kinds give a straight run of
// length+1 boundary bonds; corner kinds give the straight run followed by
// the run on the other side of an inner or outer corner.
std::vector<DirectedEdge> boundary_window(WindowKind kind, int length);

// Pieces of the corner windows. `straight_window` is the run shared by both
// corner kinds, `corner_arm` the run on the far side of the corner.
std::vector<DirectedEdge> straight_window(int length);
std::vector<DirectedEdge> corner_arm(bool inner, int length);
std::vector<DirectedEdge> corner_window(bool inner, int length);

// Hexagonal loops next to the corner used for the loop column of the S
// table, and their vertical stacks.
std::vector<std::vector<Vertex>> corner_hexagons(int count);
std::vector<std::vector<Vertex>> layered_corner_hexagons(int count, int layers);

// Square-lattice windows (vertices are Z^2 points).
std::vector<DirectedEdge> square_straight_window(int length);
std::vector<DirectedEdge> square_corner_arm(bool inner, int length);
std::vector<DirectedEdge> square_corner_window(bool inner, int length);

std::vector<Vertex> firsts(const std::vector<DirectedEdge>& es);
std::vector<Vertex> lasts(const std::vector<DirectedEdge>& es);

// Finite piece of the infinite lattice reached by a breadth-first search,
// re-indexed for fast enumeration.
struct LocalGraph {
    LatticeKind lattice;
    std::vector<Vertex> vertex;
    std::unordered_map<Vertex, int, VertexHash> index;
    // adjacency padded with -1; width 3 (hex) or 4 (square)
    std::vector<int> adj;
    int width = 0;

    int find(Vertex v) const {
        auto it = index.find(v);
        return it == index.end() ? -1 : it->second;
    }
    int size() const { return static_cast<int>(vertex.size()); }
    const int* nbrs(int i) const { return adj.data() + static_cast<std::size_t>(i) * width; }
    // distances to a target set inside the graph; unreachable = large
    std::vector<int> distances_from(const std::vector<int>& sources) const;
};

LocalGraph build_local_graph(LatticeKind lattice, const std::vector<Vertex>& seeds, int radius);

}  // namespace aklt
