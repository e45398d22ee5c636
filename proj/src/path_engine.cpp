#include "path_engine.hpp"

namespace aklt::detail {

Problem make_problem(LatticeKind lattice, Mode mode, int L, const std::vector<DirectedEdge>& starts,
                     const std::vector<Vertex>& end_vertices, const std::vector<Vertex>& intersect,
                     const std::vector<Vertex>& avoid) {
    Problem p;
    p.L = L;
    p.mode = mode;
    std::vector<Vertex> seeds;
    for (const auto& s : starts) {
        seeds.push_back(s.from);
        seeds.push_back(s.to);
    }
    p.g = build_local_graph(lattice, seeds, L);
    const std::size_t n = p.g.vertex.size();
    p.is_end.assign(n, 0);
    p.is_avoid.assign(n, 0);
    p.is_inter.assign(n, 0);
    std::vector<int> ends, inters;
    for (const auto& v : end_vertices) {
        int i = p.g.find(v);
        if (i >= 0 && !p.is_end[i]) {
            p.is_end[i] = 1;
            ends.push_back(i);
        }
    }
    for (const auto& v : intersect) {
        int i = p.g.find(v);
        if (i >= 0 && !p.is_inter[i]) {
            p.is_inter[i] = 1;
            inters.push_back(i);
        }
    }
    for (const auto& v : avoid) {
        int i = p.g.find(v);
        if (i >= 0) p.is_avoid[i] = 1;
    }
    p.dist_end = p.g.distances_from(ends);
    p.dist_inter = p.g.distances_from(inters);
    for (const auto& s : starts) {
        int a = p.g.find(s.from), b = p.g.find(s.to);
        auto k = Problem::key(a, b);
        if (p.start_keys.insert(k).second) p.starts.emplace_back(a, b);
    }
    return p;
}

std::vector<std::vector<int>> root_prefixes(const Problem& p) {
    std::vector<std::vector<int>> out;
    const int L = p.L;
    for (auto [a, b] : p.starts) {
        if (L >= 2 && p.is_avoid[b]) continue;
        if (p.dist_end[b] > L - 1) continue;
        if (p.is_inter[a] + p.is_inter[b] == 0 && p.dist_inter[b] > L - 1) continue;
        out.push_back({a, b});
    }
    return out;
}

}  // namespace aklt::detail
