#pragma once

// Depth-first enumerator shared by the hexagonal walk/loop generators and the
// square-lattice trail generator. Works on a LocalGraph with integer ids.

#include <atomic>
#include <cstdint>
#include <thread>
#include <unordered_set>
#include <vector>

#include "aklt/lattice.hpp"

namespace aklt::detail {

enum class Mode { Walk, Loop, Trail };

struct Problem {
    LocalGraph g;
    int L = 0;
    Mode mode = Mode::Walk;
    std::vector<std::pair<int, int>> starts;
    std::vector<std::uint8_t> is_end, is_avoid, is_inter;
    std::vector<int> dist_end, dist_inter;
    std::unordered_set<std::uint64_t> start_keys;

    static std::uint64_t key(int a, int b) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
               static_cast<std::uint32_t>(b);
    }
};

Problem make_problem(LatticeKind lattice, Mode mode, int L, const std::vector<DirectedEdge>& starts,
                     const std::vector<Vertex>& end_vertices, const std::vector<Vertex>& intersect,
                     const std::vector<Vertex>& avoid);

class Walker {
public:
    explicit Walker(const Problem& p)
        : p_(p), path_(static_cast<std::size_t>(p.L) + 1), on_(p.g.size(), 0) {
        if (p.mode == Mode::Trail) used_.assign(static_cast<std::size_t>(p.g.size()) * 2, 0);
    }

    // Seeds the walker with a prefix path[0..depth].
    bool load(const std::vector<int>& prefix) {
        clear();
        depth_ = static_cast<int>(prefix.size()) - 1;
        for (int k = 0; k <= depth_; ++k) {
            path_[k] = prefix[k];
            if (p_.mode != Mode::Loop || k > 0) ++on_[prefix[k]];
            inter_ += p_.is_inter[prefix[k]];
            if (k > 0 && p_.mode == Mode::Trail) {
                int e = edge_key(prefix[k - 1], prefix[k]);
                if (e < 0) return false;
                used_[e] = 1;
            }
        }
        return true;
    }

    template <class Emit>
    void run(int stop_depth, Emit&& emit) {
        extend(depth_, stop_depth, emit);
    }

    const std::vector<int>& path() const { return path_; }

private:
    void clear() {
        std::fill(on_.begin(), on_.end(), 0);
        if (!used_.empty()) std::fill(used_.begin(), used_.end(), 0);
        inter_ = 0;
    }

    int edge_key(int a, int b) const {
        const int* n = p_.g.nbrs(a);
        for (int k = 0; k < 4; ++k)
            if (n[k] == b) return (k % 2 == 0) ? 2 * a + k / 2 : 2 * b + k / 2;
        return -1;
    }

    bool reverse_acceptable() const {
        const int L = p_.L;
        if (!p_.start_keys.count(Problem::key(path_[L], path_[L - 1]))) return false;
        if (!p_.is_end[path_[0]]) return false;
        for (int k = 2; k <= L - 1; ++k)
            if (p_.is_end[path_[k]]) return false;
        return true;
    }

    bool forward_is_smaller() const {
        const int L = p_.L;
        for (int k = 0; k <= L; ++k) {
            if (path_[k] != path_[L - k]) return path_[k] < path_[L - k];
        }
        return true;
    }

    template <class Emit>
    void extend(int depth, int stop, Emit& emit) {
        const int L = p_.L;
        if (depth == L) {
            if (!p_.is_end[path_[L]] || inter_ == 0) return;
            if (reverse_acceptable() && !forward_is_smaller()) return;
            emit(path_.data(), depth);
            return;
        }
        if (depth == stop) {
            emit(path_.data(), depth);
            return;
        }
        const int last = path_[depth];
        if (p_.is_end[last] && depth != L - 1) return;
        const int remaining = L - depth - 1;
        const int* n = p_.g.nbrs(last);
        const int prev = path_[depth - 1];
        for (int k = 0; k < p_.g.width; ++k) {
            const int nx = n[k];
            if (nx < 0 || nx == prev) continue;
            int ekey = -1;
            if (p_.mode == Mode::Trail) {
                ekey = (k % 2 == 0) ? 2 * last + k / 2 : 2 * nx + k / 2;
                if (used_[ekey]) continue;
            } else if (on_[nx]) {
                continue;
            }
            if (depth + 1 < L && p_.is_avoid[nx]) continue;
            if (p_.dist_end[nx] > remaining) continue;
            const int hit = inter_ + p_.is_inter[nx];
            if (hit == 0 && p_.dist_inter[nx] > remaining) continue;
            path_[depth + 1] = nx;
            ++on_[nx];
            inter_ = hit;
            if (ekey >= 0) used_[ekey] = 1;
            extend(depth + 1, stop, emit);
            if (ekey >= 0) used_[ekey] = 0;
            inter_ -= p_.is_inter[nx];
            --on_[nx];
        }
    }

    const Problem& p_;
    std::vector<int> path_;
    std::vector<int> on_;
    std::vector<std::uint8_t> used_;
    int inter_ = 0;
    int depth_ = 0;
};

// Initial prefixes: the admissible start edges.
std::vector<std::vector<int>> root_prefixes(const Problem& p);

// Splits the search into independent prefixes and runs `Sink::accept` over
// every kept path. One sink per worker thread; integer reductions are
// order-independent so results do not depend on the thread count.
template <class Sink, class MakeSink>
std::vector<Sink> run_parallel(const Problem& p, unsigned threads, MakeSink make_sink) {
    if (threads == 0) threads = 1;
    std::vector<std::vector<int>> tasks = root_prefixes(p);
    int depth = 1;
    const std::size_t want = threads > 1 ? 32u * threads : 1u;
    while (tasks.size() < want && depth < p.L - 1) {
        std::vector<std::vector<int>> next;
        Walker w(p);
        for (const auto& t : tasks) {
            if (!w.load(t)) continue;
            w.run(depth + 1, [&](const int* path, int d) {
                if (d == p.L) return;  // complete paths are re-found below
                next.emplace_back(path, path + d + 1);
            });
            // complete paths of length depth+1 only arise if L == depth+1,
            // excluded by the loop condition
        }
        tasks.swap(next);
        ++depth;
    }
    std::vector<Sink> sinks;
    sinks.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) sinks.push_back(make_sink());
    std::atomic<std::size_t> next{0};
    auto work = [&](unsigned id) {
        Walker w(p);
        Sink& sink = sinks[id];
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            if (!w.load(tasks[i])) continue;
            w.run(-1, [&](const int* path, int) { sink.accept(path); });
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    return sinks;
}

struct CountSink {
    std::uint64_t n = 0;
    void accept(const int*) { ++n; }
};

struct CollectSink {
    int L = 0;
    std::vector<std::vector<int>> paths;
    void accept(const int* path) { paths.emplace_back(path, path + L + 1); }
};

// Counts kept paths meeting each target group. targets_at[v] lists group ids.
struct HitSink {
    int L = 0;
    const std::vector<std::vector<int>>* targets_at = nullptr;
    std::vector<std::uint64_t> counts;
    std::vector<std::uint64_t> stamp;
    std::uint64_t serial = 0;
    void accept(const int* path) {
        ++serial;
        for (int k = 0; k <= L; ++k)
            for (int t : (*targets_at)[path[k]])
                if (stamp[t] != serial) {
                    stamp[t] = serial;
                    ++counts[t];
                }
    }
};

}  // namespace aklt::detail
