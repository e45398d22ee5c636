#include "aklt/polymer_square.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include "path_engine.hpp"

namespace aklt {

namespace {

std::vector<Vertex> default_avoid(const TrailConstraints& c) {
    if (c.avoid) return *c.avoid;
    auto out = firsts(c.start_edges);
    auto e = firsts(c.end_edges);
    out.insert(out.end(), e.begin(), e.end());
    return out;
}

detail::Problem problem_for(const TrailConstraints& c) {
    if (c.length < 2) throw std::invalid_argument("trail length must be >= 2");
    return detail::make_problem(LatticeKind::Square, detail::Mode::Trail, c.length, c.start_edges,
                                firsts(c.end_edges), c.must_intersect, default_avoid(c));
}

// edge list of a trail as consecutive vertex pairs
std::vector<std::pair<Vertex, Vertex>> steps(const Trail& t) {
    std::vector<std::pair<Vertex, Vertex>> out;
    const auto& v = t.vertices;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) out.emplace_back(v[i], v[i + 1]);
    if (t.kind == TrailKind::Loop && v.size() > 1) out.emplace_back(v.back(), v.front());
    return out;
}

}  // namespace

Trail canonical(const Trail& t) {
    if (t.kind == TrailKind::Walk) {
        Trail r = t;
        std::reverse(r.vertices.begin(), r.vertices.end());
        return r < t ? r : t;
    }
    Loop l = canonical(Loop{t.vertices});
    return Trail{TrailKind::Loop, l.vertices};
}

bool is_edge_self_avoiding(const Trail& t) {
    EdgeSet seen;
    for (const auto& [a, b] : steps(t)) {
        if (!adjacent(a, b, LatticeKind::Square)) return false;
        if (!seen.insert(make_edge(a, b)).second) return false;
    }
    return true;
}

std::vector<Vertex> degree4_vertices(const Trail& t) {
    std::map<Vertex, int> visits;
    const auto& v = t.vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
        // a walk's endpoints have one incident trail edge each
        ++visits[v[i]];
    }
    std::vector<Vertex> out;
    for (const auto& [x, n] : visits) {
        int deg = 2 * n;
        if (t.kind == TrailKind::Walk) {
            if (x == v.front()) --deg;
            if (x == v.back()) --deg;
        }
        if (deg == 4) out.push_back(x);
    }
    return out;
}

std::vector<std::pair<Vertex, Pairing>> routings(const Trail& t) {
    std::vector<std::pair<Vertex, Pairing>> out;
    const auto& v = t.vertices;
    const std::size_t n = v.size();
    for (const auto& x : degree4_vertices(t)) {
        std::vector<std::pair<Edge, Edge>> pairs;
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] != x) continue;
            bool has_prev = t.kind == TrailKind::Loop || i > 0;
            bool has_next = t.kind == TrailKind::Loop || i + 1 < n;
            if (!has_prev || !has_next) continue;
            Edge a = make_edge(v[(i + n - 1) % n], x);
            Edge b = make_edge(x, v[(i + 1) % n]);
            pairs.push_back(a < b ? std::pair{a, b} : std::pair{b, a});
        }
        if (pairs.size() != 2) continue;
        std::sort(pairs.begin(), pairs.end());
        out.push_back({x, Pairing{pairs[0], pairs[1]}});
    }
    return out;
}

std::vector<Vertex> square_step_candidates(Vertex prev, Vertex cur) {
    std::vector<Vertex> out;
    for (const auto& n : neighbors(cur, LatticeKind::Square))
        if (n != prev) out.push_back(n);
    return out;
}

std::vector<Trail> generate_trails(const TrailConstraints& c, EnumOptions opt) {
    auto p = problem_for(c);
    auto sinks = detail::run_parallel<detail::CollectSink>(
        p, opt.threads, [&] { return detail::CollectSink{p.L, {}}; });
    std::vector<Trail> out;
    for (const auto& s : sinks)
        for (const auto& path : s.paths) {
            Trail t;
            for (int i : path) t.vertices.push_back(p.g.vertex[i]);
            out.push_back(canonical(t));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_trails(const TrailConstraints& c, EnumOptions opt) {
    auto p = problem_for(c);
    auto sinks = detail::run_parallel<detail::CountSink>(p, opt.threads,
                                                         [] { return detail::CountSink{}; });
    std::uint64_t n = 0;
    for (const auto& s : sinks) n += s.n;
    return n;
}

std::vector<std::uint64_t> count_trails_hitting(const TrailConstraints& c,
                                                const std::vector<std::vector<Vertex>>& targets,
                                                EnumOptions opt) {
    TrailConstraints cc = c;
    cc.must_intersect.clear();
    for (const auto& t : targets) cc.must_intersect.insert(cc.must_intersect.end(), t.begin(), t.end());
    auto p = problem_for(cc);
    std::vector<std::vector<int>> at(p.g.vertex.size());
    for (std::size_t t = 0; t < targets.size(); ++t)
        for (const auto& v : targets[t]) {
            int i = p.g.find(v);
            if (i >= 0 && (at[i].empty() || at[i].back() != static_cast<int>(t)))
                at[i].push_back(static_cast<int>(t));
        }
    const std::size_t T = targets.size();
    auto sinks = detail::run_parallel<detail::HitSink>(p, opt.threads, [&] {
        return detail::HitSink{p.L, &at, std::vector<std::uint64_t>(T, 0), std::vector<std::uint64_t>(T, 0), 0};
    });
    std::vector<std::uint64_t> out(T, 0);
    for (const auto& s : sinks)
        for (std::size_t t = 0; t < T; ++t) out[t] += s.counts[t];
    return out;
}

std::vector<Trail> loops_through_vertex(Vertex v, int n) {
    std::set<Trail> found;
    std::vector<Vertex> path{v};
    EdgeSet used;
    auto rec = [&](auto&& self) -> void {
        const Vertex cur = path.back();
        const int len = static_cast<int>(path.size()) - 1;
        if (len == n) {
            if (cur == v) {
                Trail t{TrailKind::Loop, std::vector<Vertex>(path.begin(), path.end() - 1)};
                found.insert(canonical(t));
            }
            return;
        }
        for (const auto& w : neighbors(cur, LatticeKind::Square)) {
            Edge e = make_edge(cur, w);
            if (used.count(e)) continue;
            int dist = std::abs(w.x - v.x) + std::abs(w.y - v.y);
            if (dist > n - len - 1) continue;
            used.insert(e);
            path.push_back(w);
            self(self);
            path.pop_back();
            used.erase(e);
        }
    };
    rec(rec);
    return {found.begin(), found.end()};
}

namespace {

std::vector<std::uint64_t> corner_walk_counts(const std::vector<std::vector<Vertex>>& targets, int n,
                                              bool inner, EnumOptions opt) {
    const int w = 2 * n;
    auto all = square_corner_window(inner, w);
    TrailConstraints a;
    a.length = n;
    a.start_edges = square_straight_window(w);
    a.end_edges = all;
    a.avoid = firsts(all);
    TrailConstraints b = a;
    b.start_edges = square_corner_arm(inner, w);
    b.end_edges = b.start_edges;
    auto ca = count_trails_hitting(a, targets, opt);
    auto cb = count_trails_hitting(b, targets, opt);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
    return ca;
}

}  // namespace

TrailCounts trails_through_vertex(Vertex v, int n, bool inner_corner, EnumOptions opt) {
    if (n < 2) throw std::invalid_argument("trail length must be >= 2");
    TrailCounts out;
    out.walks = corner_walk_counts({{v}}, n, inner_corner, opt)[0];
    out.loops = loops_through_vertex(v, n).size();
    return out;
}

TrailCounts max_trails_through_vertex(int n, EnumOptions opt) {
    if (n < 2) throw std::invalid_argument("trail length must be >= 2");
    std::vector<std::vector<Vertex>> targets;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) targets.push_back({{i, j}});
    TrailCounts out;
    for (bool inner : {false, true})
        for (auto c : corner_walk_counts(targets, n, inner, opt)) out.walks = std::max(out.walks, c);
    out.loops = loops_through_vertex({0, 0}, n).size();
    return out;
}

}  // namespace aklt
