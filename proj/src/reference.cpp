#include "aklt/reference.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

namespace aklt::reference {

namespace {

constexpr double kTol = 1e-6;
const double kS = std::sqrt(3.0) / 2;

struct P {
    double x, y;
};
using Path = std::vector<P>;

bool is_close(const P& a, const P& b) { return std::abs(a.x - b.x) < kTol && std::abs(a.y - b.y) < kTol; }

bool in_path(const P& p, const Path& path, std::size_t from = 0) {
    for (std::size_t i = from; i < path.size(); ++i)
        if (is_close(p, path[i])) return true;
    return false;
}

bool hits(const Path& a, std::size_t lo, std::size_t hi, const Path& b) {
    for (std::size_t i = lo; i < hi; ++i)
        if (in_path(a[i], b)) return true;
    return false;
}

Path firsts(const std::vector<Path>& ps) {
    Path out;
    for (const auto& p : ps) out.push_back(p.front());
    return out;
}

bool is_reverse_of(const Path& path, const Path& r) {
    const std::size_t n = std::min(path.size(), r.size());
    for (std::size_t i = 0; i < n; ++i)
        if (!is_close(path[path.size() - 1 - i], r[i])) return false;
    return true;
}

// Hexagonal lattice windows.

std::vector<Path> starts2(int n) {
    std::vector<Path> s;
    for (int i = 0; i <= n; ++i)
        s.push_back({{-0.5 - i * 1.5, kS * (1 - i)}, {-1 - i * 1.5, kS * (2 - i)}});
    return s;
}

std::vector<Path> ends2(int n, int o) {
    std::vector<Path> e;
    for (int i = 0; i <= n; ++i) {
        if (o == 1) {
            e.push_back({{0.5 + i * 1.5, kS * (1 - i)}, {1 + i * 1.5, kS * (2 - i)}});
        } else {
            double val = 2 * (i + 1.5) * kS;
            e.push_back({{0.5, val}, {-0.5, val}});
        }
    }
    return e;
}

std::vector<Path> alls(int length, int o) {
    auto a = starts2(length);
    auto b = ends2(length, o);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

enum class Kind { Saw, Loop, Avoid };

// generate_saws / generate_loops / saw_with_avoidance share one body
std::vector<Path> hex_search(Kind kind, int length, const std::vector<Path>& start_paths,
                             const std::vector<Path>& end_paths, const Path& intersect, const Path& avoid_in = {}) {
    std::vector<Path> results;
    const Path end_firsts = firsts(end_paths);
    Path avoid = avoid_in;
    if (kind != Kind::Avoid) {
        avoid = firsts(start_paths);
        avoid.insert(avoid.end(), end_firsts.begin(), end_firsts.end());
    }
    Path path;
    auto recurse = [&](auto&& self) -> void {
        if (path.size() == static_cast<std::size_t>(length) + 1) {
            if (in_path(path.back(), end_firsts) && hits(path, 0, path.size(), intersect) &&
                !hits(path, 1, path.size() - 1, avoid)) {
                bool dup = std::any_of(results.begin(), results.end(),
                                       [&](const Path& r) { return is_reverse_of(path, r); });
                if (!dup) results.push_back(path);
            }
            return;
        }
        const P last = path.back();
        const P prev = path[path.size() - 2];
        const double dx = last.x - prev.x, dy = last.y - prev.y;
        const P left{last.x + dx / 2 - kS * dy, last.y + kS * dx + dy / 2};
        const P right{last.x + dx / 2 + kS * dy, last.y - kS * dx + dy / 2};
        for (const P& next : {left, right}) {
            if (in_path(next, path, kind == Kind::Loop ? 1 : 0)) continue;
            if (in_path(last, end_firsts) && path.size() != static_cast<std::size_t>(length)) continue;
            path.push_back(next);
            self(self);
            path.pop_back();
        }
    };
    for (const auto& sp : start_paths) {
        path = sp;
        recurse(recurse);
    }
    return results;
}

Path shift(const Path& p, double dx, double dy) {
    Path out;
    for (const auto& q : p) out.push_back({q.x + dx, q.y + dy});
    return out;
}

std::vector<Path> loop_translates(int m) {
    const double r3 = std::sqrt(3.0);
    const Path top{{-0.5, 1.5 * r3}, {-1.0, 2 * r3}, {-0.5, 2.5 * r3}, {0.5, 2.5 * r3},
                   {1, 2 * r3},      {0.5, 1.5 * r3}, {-0.5, 1.5 * r3}};
    std::vector<Path> w;
    for (int i = 0; i < m; ++i) w.push_back(shift(top, -i * 1.5, -i * kS));
    return w;
}

std::vector<Path> layered_loop_translates(int mm, int l) {
    auto z = loop_translates(mm);
    for (const auto& p : loop_translates(mm))
        for (int j = 1; j <= l; ++j) z.push_back(shift(p, 0, std::sqrt(3.0) * j));
    return z;
}

std::vector<Path> get_edges(const std::vector<Path>& paths) {
    std::vector<Path> edges;
    for (const auto& p : paths)
        for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.push_back({p[i], p[(i + 1) % p.size()]});
    return edges;
}

std::vector<std::int64_t> Pb(int length, int o) {
    std::vector<std::int64_t> results;
    const auto edges = get_edges(layered_loop_translates(length, length));
    const auto window = alls(length, o);
    const Path wf = firsts(window);
    for (int i = 1; i <= length; ++i) {
        std::int64_t best = 0;
        for (const auto& pe : edges) {
            const P point = pe[0];
            std::int64_t a = 0;
            for (const auto& edge : edges)
                if (is_close(edge[0], point))
                    a += static_cast<std::int64_t>(hex_search(Kind::Avoid, i, {edge}, window, wf, wf).size());
            best = std::max(best, a);
        }
        results.push_back(best);
    }
    return results;
}

std::vector<std::int64_t> Qb(int length, int o) {
    std::vector<std::int64_t> a((length - 3) / 2 + 1, 0);
    const auto e = ends2(length, o);
    for (int i = 3; i <= length; i += 2)
        a[i / 2 - 1] += static_cast<std::int64_t>(hex_search(Kind::Saw, i, starts2(length), e, firsts(e)).size());
    return a;
}

// Square lattice.

std::vector<Path> sq_starts2(int n) {
    std::vector<Path> s;
    for (int i = 1; i <= n; ++i) s.push_back({{0, double(i)}, {1, double(i)}});
    return s;
}

std::vector<Path> sq_ends2(int n, int o) {
    std::vector<Path> e;
    for (int i = 1; i <= n; ++i) {
        if (o == 1)
            e.push_back({{1.0 - i, 1}, {1.0 - i, 0}});
        else
            e.push_back({{double(i), 0}, {double(i), 1}});
    }
    return e;
}

std::vector<Path> sq_alls(int n, int o) {
    auto a = sq_starts2(n);
    auto b = sq_ends2(n, o);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

using EdgeKey = std::pair<std::pair<long, long>, std::pair<long, long>>;

EdgeKey edge_key(const P& a, const P& b) {
    std::pair<long, long> u{std::lround(a.x), std::lround(a.y)}, v{std::lround(b.x), std::lround(b.y)};
    if (v < u) std::swap(u, v);
    return {u, v};
}

std::vector<Path> esaw_with_avoidance(int length, const std::vector<Path>& start_paths,
                                      const std::vector<Path>& end_paths, const Path& intersect,
                                      const Path& avoid) {
    std::vector<Path> results;
    const Path end_firsts = firsts(end_paths);
    Path path;
    std::set<EdgeKey> visited;
    auto recurse = [&](auto&& self) -> void {
        if (path.size() == static_cast<std::size_t>(length) + 1) {
            if (in_path(path.back(), end_firsts) && hits(path, 0, path.size(), intersect) &&
                !hits(path, 1, path.size() - 1, avoid)) {
                bool dup = std::any_of(results.begin(), results.end(),
                                       [&](const Path& r) { return is_reverse_of(path, r); });
                if (!dup) results.push_back(path);
            }
            return;
        }
        const P last = path.back();
        const P prev = path[path.size() - 2];
        const double dx = last.x - prev.x, dy = last.y - prev.y;
        const P left{last.x - dy, last.y + dx};
        const P right{last.x + dy, last.y - dx};
        const P middle{last.x + dx, last.y + dy};
        for (const P& next : {left, right, middle}) {
            auto e = edge_key(last, next);
            if (visited.count(e)) continue;
            if (in_path(last, end_firsts) && path.size() != static_cast<std::size_t>(length)) continue;
            visited.insert(e);
            path.push_back(next);
            self(self);
            path.pop_back();
            visited.erase(e);
        }
    };
    for (const auto& sp : start_paths) {
        path = sp;
        visited.clear();
        for (std::size_t i = 1; i < path.size(); ++i) visited.insert(edge_key(path[i - 1], path[i]));
        recurse(recurse);
    }
    return results;
}

std::int64_t square_corner_max(int i) {
    std::int64_t best = 0;
    for (int o : {0, 1}) {
        const auto all = sq_alls(2 * i, o);
        const Path af = firsts(all);
        const auto arm = sq_ends2(2 * i, o);
        for (int x = 0; x < i; ++x)
            for (int y = 0; y < i; ++y) {
                const Path e{{double(x), double(y)}};
                auto a = esaw_with_avoidance(i, sq_starts2(2 * i), all, e, af).size() +
                         esaw_with_avoidance(i, arm, arm, e, af).size();
                best = std::max<std::int64_t>(best, static_cast<std::int64_t>(a));
            }
    }
    return best;
}

// Closed trails of length n through the origin, deduplicated against every
// rotation and reflection of the stored ones.
std::int64_t square_bulk_loops(int n) {
    std::vector<Path> results;
    Path path{{0, 0}};
    std::set<EdgeKey> visited;
    auto same_cycle = [&](const Path& a, const Path& b) {
        const std::size_t m = a.size();
        for (std::size_t s = 0; s < m; ++s)
            for (int dir : {1, -1}) {
                bool ok = true;
                for (std::size_t k = 0; k < m && ok; ++k) {
                    std::size_t j = dir == 1 ? (s + k) % m : (s + m - k) % m;
                    ok = is_close(a[k], b[j]);
                }
                if (ok) return true;
            }
        return false;
    };
    auto recurse = [&](auto&& self) -> void {
        const P last = path.back();
        if (path.size() == static_cast<std::size_t>(n) + 1) {
            if (is_close(last, path.front())) {
                Path cyc(path.begin(), path.end() - 1);
                if (std::none_of(results.begin(), results.end(), [&](const Path& r) { return same_cycle(cyc, r); }))
                    results.push_back(cyc);
            }
            return;
        }
        const P steps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const P& d : steps) {
            const P next{last.x + d.x, last.y + d.y};
            auto e = edge_key(last, next);
            if (visited.count(e)) continue;
            visited.insert(e);
            path.push_back(next);
            self(self);
            path.pop_back();
            visited.erase(e);
        }
    };
    recurse(recurse);
    return static_cast<std::int64_t>(results.size());
}

}  // namespace

std::map<int, std::int64_t> loops(int max) {
    std::map<int, std::int64_t> out;
    const auto s = starts2(0);
    for (int i = 6; i <= max; i += 2)
        out[i] = static_cast<std::int64_t>(hex_search(Kind::Loop, i, s, s, s[0]).size());
    return out;
}

std::map<int, std::int64_t> walks_to_boundary(int max) {
    auto a = Pb(max, 0);
    auto b = Pb(max, 1);
    std::map<int, std::int64_t> out;
    for (int i = 1; i <= max; ++i) out[i] = std::max(a[i - 1], b[i - 1]);
    return out;
}

std::map<int, std::int64_t> right_endpoint(int max) {
    std::map<int, std::int64_t> out;
    const auto s = starts2(max);
    const std::size_t z = s.size() / 2;
    const std::vector<Path> start{s[z]};
    const std::vector<Path> ends(s.begin(), s.begin() + static_cast<long>(z));
    const std::vector<Path> tail(s.begin() + static_cast<long>(z), s.end());
    for (int i = 4; i <= max; i += 2)
        out[i] = static_cast<std::int64_t>(hex_search(Kind::Avoid, i, start, ends, firsts(s), firsts(tail)).size());
    return out;
}

std::map<int, std::int64_t> odd_corner(int max) {
    auto a = Qb(max, 1);
    auto b = Qb(max, 0);
    std::map<int, std::int64_t> out;
    for (int i = 3; i <= max; i += 2) out[i] = std::max(a[i / 2 - 1], b[i / 2 - 1]);
    return out;
}

std::int64_t square_cn(int n) { return square_corner_max(n) + square_bulk_loops(n); }

}  // namespace aklt::reference
