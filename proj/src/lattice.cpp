#include "aklt/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <limits>
#include <stdexcept>

namespace aklt {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int mod3(int a) { return ((a % 3) + 3) % 3; }

int linf(Vertex v) { return std::max(std::abs(v.x), std::abs(v.y)); }

}  // namespace

const char* to_string(LatticeKind kind) {
    return kind == LatticeKind::Hexagonal ? "hexagonal" : "square";
}

const char* to_string(BoundaryClass c) {
    switch (c) {
        case BoundaryClass::Interior: return "interior";
        case BoundaryClass::InnerBoundary: return "inner-boundary";
        case BoundaryClass::OuterBoundary: return "outer-boundary";
        case BoundaryClass::NotInVolume: return "not-in-volume";
    }
    return "?";
}

const char* to_string(WindowKind k) {
    switch (k) {
        case WindowKind::StraightInner: return "straight-inner";
        case WindowKind::StraightOuter: return "straight-outer";
        case WindowKind::CornerInner: return "corner-inner";
        case WindowKind::CornerOuter: return "corner-outer";
    }
    return "?";
}

Edge canonical(Edge e) {
    if (e.b < e.a) std::swap(e.a, e.b);
    return e;
}

Edge make_edge(Vertex u, Vertex v) { return canonical(Edge{u, v}); }

std::vector<Vertex> neighbors(Vertex v, LatticeKind lattice) {
    if (lattice == LatticeKind::Square)
        return {{v.x + 1, v.y}, {v.x - 1, v.y}, {v.x, v.y + 1}, {v.x, v.y - 1}};
    int dy = ((v.x + v.y) % 2 == 0) ? 1 : -1;
    return {{v.x + 1, v.y}, {v.x - 1, v.y}, {v.x, v.y + dy}};
}

bool adjacent(Vertex u, Vertex v, LatticeKind lattice) {
    for (const auto& w : neighbors(u, lattice))
        if (w == v) return true;
    return false;
}

bool is_hex_site(Doubled p) { return ((p.X + p.Y) % 2 == 0) && mod3(p.X) != 0; }

Vertex from_doubled(Doubled p) {
    if (!is_hex_site(p)) throw std::invalid_argument("not a honeycomb site");
    return Vertex{p.Y, floor_div(p.X, 3)};
}

Doubled to_doubled(Vertex v) {
    bool even = ((v.x + v.y) % 2 == 0);
    return Doubled{3 * v.y + (even ? 2 : 1), v.x};
}

std::pair<double, double> hex_position(Vertex v) {
    Doubled d = to_doubled(v);
    return {d.X / 2.0, d.Y * std::sqrt(3.0) / 2.0};
}

std::vector<Vertex> hexagon_around(Doubled c) {
    const int X = c.X, Y = c.Y;
    return {from_doubled({X - 1, Y - 1}), from_doubled({X - 2, Y}), from_doubled({X - 1, Y + 1}),
            from_doubled({X + 1, Y + 1}), from_doubled({X + 2, Y}), from_doubled({X + 1, Y - 1})};
}

int hex_dual_distance(Doubled c) {
    int a = std::abs(c.X / 3);
    int y = std::abs(c.Y);
    return std::max(a, (a + y) / 2);
}

namespace {

template <class F>
void for_each_hexagon_within(int r, F&& f) {
    // centres at dual distance <= r
    for (int a = -r; a <= r; ++a)
        for (int Y = -2 * r; Y <= 2 * r; ++Y) {
            Doubled c{3 * a, Y};
            if ((c.X + c.Y) % 2 != 0) continue;
            if (hex_dual_distance(c) <= r) f(c);
        }
}

void add_hexagon_edges(const std::vector<Vertex>& h, EdgeSet& out) {
    for (std::size_t i = 0; i < h.size(); ++i) out.insert(make_edge(h[i], h[(i + 1) % h.size()]));
}

}  // namespace

EdgeSet hex_ball_interior_edges(int r) {
    EdgeSet out;
    if (r <= 0) return out;
    for_each_hexagon_within(r - 1, [&](Doubled c) { add_hexagon_edges(hexagon_around(c), out); });
    return out;
}

Annulus::Annulus(LatticeKind lattice, int N, int K) : lattice_(lattice), N_(N), K_(K) {
    if (N < 1 || K < 0 || K >= N) throw std::invalid_argument("annulus requires 0 <= K < N");
    if (lattice == LatticeKind::Hexagonal) {
        for_each_hexagon_within(N - 1, [&](Doubled c) {
            for (const auto& v : hexagon_around(c))
                for (const auto& w : neighbors(v, lattice)) edges_.insert(make_edge(v, w));
        });
        EdgeSet hole = hex_ball_interior_edges(K);
        for (const auto& e : hole) {
            edges_.erase(e);
            inner_region_.insert(e.a);
            inner_region_.insert(e.b);
        }
    } else {
        for (int x = -(N - 1); x <= N - 1; ++x)
            for (int y = -(N - 1); y <= N - 1; ++y) {
                Vertex c{x, y};
                if (linf(c) < K) continue;
                for (const auto& w : neighbors(c, lattice)) edges_.insert(make_edge(c, w));
            }
        for (int x = -(K - 1); x <= K - 1; ++x)
            for (int y = -(K - 1); y <= K - 1; ++y) inner_region_.insert({x, y});
    }
    for (const auto& e : edges_) {
        ++degree_[e.a];
        ++degree_[e.b];
    }
}

bool Annulus::contains_vertex(Vertex v) const { return degree_.count(v) != 0; }

bool Annulus::contains_edge(Edge e) const { return edges_.count(canonical(e)) != 0; }

int Annulus::degree(Vertex v) const {
    auto it = degree_.find(v);
    return it == degree_.end() ? 0 : it->second;
}

BoundaryClass Annulus::classify(Vertex v) const {
    if (!contains_vertex(v)) return BoundaryClass::NotInVolume;
    if (lattice_ == LatticeKind::Square) {
        int r = linf(v);
        if (r >= K_ && r <= N_ - 1) return BoundaryClass::Interior;
        return r < K_ ? BoundaryClass::InnerBoundary : BoundaryClass::OuterBoundary;
    }
    if (degree(v) != 1) return BoundaryClass::Interior;
    return inner_region_.count(v) ? BoundaryClass::InnerBoundary : BoundaryClass::OuterBoundary;
}

std::vector<Vertex> Annulus::vertices() const {
    std::vector<Vertex> out;
    out.reserve(degree_.size());
    for (const auto& [v, d] : degree_) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> Annulus::boundary(BoundaryClass which) const {
    std::vector<Vertex> out;
    for (const auto& v : vertices())
        if (classify(v) == which) out.push_back(v);
    return out;
}

std::vector<DirectedEdge> straight_window(int length) {
    std::vector<DirectedEdge> out;
    for (int i = 0; i <= length; ++i)
        out.push_back({from_doubled({-1 - 3 * i, 1 - i}), from_doubled({-2 - 3 * i, 2 - i})});
    return out;
}

std::vector<DirectedEdge> corner_arm(bool inner, int length) {
    std::vector<DirectedEdge> out;
    for (int i = 0; i <= length; ++i) {
        if (inner)
            out.push_back({from_doubled({1 + 3 * i, 1 - i}), from_doubled({2 + 3 * i, 2 - i})});
        else
            out.push_back({from_doubled({1, 2 * i + 3}), from_doubled({-1, 2 * i + 3})});
    }
    return out;
}

std::vector<DirectedEdge> corner_window(bool inner, int length) {
    auto out = straight_window(length);
    auto arm = corner_arm(inner, length);
    out.insert(out.end(), arm.begin(), arm.end());
    return out;
}

std::vector<DirectedEdge> boundary_window(WindowKind kind, int length) {
    if (length < 1) throw std::invalid_argument("window length must be >= 1");
    switch (kind) {
        case WindowKind::StraightInner:
        case WindowKind::StraightOuter: return straight_window(length);
        case WindowKind::CornerInner: return corner_window(true, length);
        case WindowKind::CornerOuter: return corner_window(false, length);
    }
    return {};
}

std::vector<std::vector<Vertex>> corner_hexagons(int count) {
    std::vector<std::vector<Vertex>> out;
    for (int i = 0; i < count; ++i) out.push_back(hexagon_around({-3 * i, 4 - i}));
    return out;
}

std::vector<std::vector<Vertex>> layered_corner_hexagons(int count, int layers) {
    auto out = corner_hexagons(count);
    for (int i = 0; i < count; ++i)
        for (int j = 1; j <= layers; ++j) out.push_back(hexagon_around({-3 * i, 4 - i + 2 * j}));
    return out;
}

std::vector<DirectedEdge> square_straight_window(int length) {
    std::vector<DirectedEdge> out;
    for (int i = 1; i <= length; ++i) out.push_back({{0, i}, {1, i}});
    return out;
}

std::vector<DirectedEdge> square_corner_arm(bool inner, int length) {
    std::vector<DirectedEdge> out;
    for (int i = 1; i <= length; ++i) {
        if (inner)
            out.push_back({{1 - i, 1}, {1 - i, 0}});
        else
            out.push_back({{i, 0}, {i, 1}});
    }
    return out;
}

std::vector<DirectedEdge> square_corner_window(bool inner, int length) {
    auto out = square_straight_window(length);
    auto arm = square_corner_arm(inner, length);
    out.insert(out.end(), arm.begin(), arm.end());
    return out;
}

std::vector<Vertex> firsts(const std::vector<DirectedEdge>& es) {
    std::vector<Vertex> out;
    for (const auto& e : es) out.push_back(e.from);
    return out;
}

std::vector<Vertex> lasts(const std::vector<DirectedEdge>& es) {
    std::vector<Vertex> out;
    for (const auto& e : es) out.push_back(e.to);
    return out;
}

LocalGraph build_local_graph(LatticeKind lattice, const std::vector<Vertex>& seeds, int radius) {
    LocalGraph g;
    g.lattice = lattice;
    g.width = lattice == LatticeKind::Hexagonal ? 3 : 4;
    std::deque<std::pair<int, int>> queue;
    auto add = [&](Vertex v) {
        auto [it, fresh] = g.index.emplace(v, g.size());
        if (fresh) g.vertex.push_back(v);
        return std::pair{it->second, fresh};
    };
    for (const auto& s : seeds) {
        auto [i, fresh] = add(s);
        if (fresh) queue.emplace_back(i, 0);
    }
    while (!queue.empty()) {
        auto [i, d] = queue.front();
        queue.pop_front();
        if (d == radius) continue;
        for (const auto& w : neighbors(g.vertex[i], lattice)) {
            auto [j, fresh] = add(w);
            if (fresh) queue.emplace_back(j, d + 1);
        }
    }
    g.adj.assign(static_cast<std::size_t>(g.size()) * g.width, -1);
    for (int i = 0; i < g.size(); ++i) {
        int k = 0;
        for (const auto& w : neighbors(g.vertex[i], lattice)) {
            int j = g.find(w);
            if (j >= 0) g.adj[static_cast<std::size_t>(i) * g.width + k] = j;
            ++k;
        }
    }
    return g;
}

std::vector<int> LocalGraph::distances_from(const std::vector<int>& sources) const {
    const int inf = std::numeric_limits<int>::max() / 4;
    std::vector<int> dist(vertex.size(), inf);
    std::deque<int> queue;
    for (int s : sources)
        if (dist[s] != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        const int* n = nbrs(i);
        for (int k = 0; k < width; ++k) {
            int j = n[k];
            if (j >= 0 && dist[j] == inf) {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    return dist;
}

}  // namespace aklt
