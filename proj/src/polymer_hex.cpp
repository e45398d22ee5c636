#include "aklt/polymer_hex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "path_engine.hpp"

namespace aklt {

namespace {

std::vector<Vertex> default_avoid(const EnumerationConstraints& c) {
    if (c.avoid) return *c.avoid;
    auto out = firsts(c.start_edges);
    auto e = firsts(c.end_edges);
    out.insert(out.end(), e.begin(), e.end());
    return out;
}

detail::Problem problem_for(const EnumerationConstraints& c, detail::Mode mode) {
    if (c.length < 1) throw std::invalid_argument("walk length must be >= 1");
    return detail::make_problem(LatticeKind::Hexagonal, mode, c.length, c.start_edges,
                                firsts(c.end_edges), c.must_intersect, default_avoid(c));
}

std::vector<std::vector<int>> collect(const detail::Problem& p, EnumOptions opt) {
    auto sinks = detail::run_parallel<detail::CollectSink>(
        p, opt.threads, [&] { return detail::CollectSink{p.L, {}}; });
    std::vector<std::vector<int>> out;
    for (auto& s : sinks)
        for (auto& path : s.paths) out.push_back(std::move(path));
    return out;
}

std::uint64_t count(const detail::Problem& p, EnumOptions opt) {
    auto sinks = detail::run_parallel<detail::CountSink>(p, opt.threads,
                                                         [] { return detail::CountSink{}; });
    std::uint64_t n = 0;
    for (const auto& s : sinks) n += s.n;
    return n;
}

}  // namespace

Walk reversed(const Walk& w) {
    Walk r = w;
    std::reverse(r.vertices.begin(), r.vertices.end());
    return r;
}

Walk canonical(const Walk& w) {
    Walk r = reversed(w);
    return r < w ? r : w;
}

Loop canonical(const Loop& l) {
    const auto& v = l.vertices;
    const std::size_t n = v.size();
    Loop best = l;
    for (int dir = 0; dir < 2; ++dir)
        for (std::size_t s = 0; s < n; ++s) {
            Loop cand;
            cand.vertices.reserve(n);
            for (std::size_t k = 0; k < n; ++k) {
                std::size_t idx = dir == 0 ? (s + k) % n : (s + n - k) % n;
                cand.vertices.push_back(v[idx]);
            }
            if (cand < best) best = std::move(cand);
        }
    return best;
}

bool is_self_avoiding_walk(const Walk& w, LatticeKind lattice) {
    VertexSet seen;
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (!seen.insert(w.vertices[i]).second) return false;
        if (i > 0 && !adjacent(w.vertices[i - 1], w.vertices[i], lattice)) return false;
    }
    return true;
}

bool is_self_avoiding_loop(const Loop& l, LatticeKind lattice) {
    const auto& v = l.vertices;
    if (v.size() < 3) return false;
    VertexSet seen(v.begin(), v.end());
    if (seen.size() != v.size()) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!adjacent(v[i], v[(i + 1) % v.size()], lattice)) return false;
    return true;
}

std::vector<Vertex> hex_step_candidates(Vertex prev, Vertex cur) {
    std::vector<Vertex> out;
    for (const auto& n : neighbors(cur, LatticeKind::Hexagonal))
        if (n != prev) out.push_back(n);
    return out;
}

std::vector<Walk> generate_walks(const EnumerationConstraints& c, EnumOptions opt) {
    auto p = problem_for(c, detail::Mode::Walk);
    std::vector<Walk> out;
    for (const auto& path : collect(p, opt)) {
        Walk w;
        for (int i : path) w.vertices.push_back(p.g.vertex[i]);
        out.push_back(canonical(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_walks(const EnumerationConstraints& c, EnumOptions opt) {
    return count(problem_for(c, detail::Mode::Walk), opt);
}

std::vector<Loop> generate_loops(const EnumerationConstraints& c, EnumOptions opt) {
    if (c.length % 2 != 0) throw std::invalid_argument("hexagonal loops have even length");
    auto p = problem_for(c, detail::Mode::Loop);
    std::vector<Loop> out;
    for (const auto& path : collect(p, opt)) {
        Loop l;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) l.vertices.push_back(p.g.vertex[path[k]]);
        out.push_back(canonical(l));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t count_loops(const EnumerationConstraints& c, EnumOptions opt) {
    if (c.length % 2 != 0) throw std::invalid_argument("hexagonal loops have even length");
    return count(problem_for(c, detail::Mode::Loop), opt);
}

std::vector<std::uint64_t> count_walks_hitting(const EnumerationConstraints& c,
                                               const std::vector<std::vector<Vertex>>& targets,
                                               EnumOptions opt) {
    EnumerationConstraints cc = c;
    // the union of the targets is the intersection constraint
    cc.must_intersect.clear();
    for (const auto& t : targets) cc.must_intersect.insert(cc.must_intersect.end(), t.begin(), t.end());
    auto p = problem_for(cc, detail::Mode::Walk);
    std::vector<std::vector<int>> at(p.g.vertex.size());
    for (std::size_t t = 0; t < targets.size(); ++t) {
        std::vector<int> ids;
        for (const auto& v : targets[t]) {
            int i = p.g.find(v);
            if (i >= 0) ids.push_back(i);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (int i : ids) at[i].push_back(static_cast<int>(t));
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

std::uint64_t walk_concatenation_count(const DirectedEdge& first, int l, bool inner_corner,
                                       int window, EnumOptions opt) {
    auto w = corner_window(inner_corner, window);
    EnumerationConstraints c;
    c.length = l;
    c.start_edges = {first};
    c.end_edges = w;
    c.must_intersect = firsts(w);
    c.avoid = firsts(w);
    return count_walks(c, opt);
}

std::vector<Loop> cycles_through(const std::vector<Vertex>& through, int length,
                                 const VertexSet& forbidden, LatticeKind lattice) {
    std::set<Loop> found;
    std::vector<Vertex> path;
    VertexSet on;
    auto rec = [&](auto&& self) -> void {
        const Vertex cur = path.back();
        if (static_cast<int>(path.size()) == length) {
            if (adjacent(cur, path.front(), lattice)) found.insert(canonical(Loop{path}));
            return;
        }
        for (const auto& n : neighbors(cur, lattice)) {
            if (on.count(n) || forbidden.count(n)) continue;
            path.push_back(n);
            on.insert(n);
            self(self);
            on.erase(n);
            path.pop_back();
        }
    };
    for (const auto& v : through) {
        if (forbidden.count(v)) continue;
        path = {v};
        on = {v};
        rec(rec);
    }
    return {found.begin(), found.end()};
}

}  // namespace aklt
