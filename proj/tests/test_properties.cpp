#include <doctest.h>

#include <random>
#include <set>

#include "aklt/criterion.hpp"
#include "aklt/polymer_hex.hpp"
#include "aklt/polymer_square.hpp"
#include "aklt/tables.hpp"

using namespace aklt;

namespace {

EnumerationConstraints corner_walks(bool inner, int l) {
    EnumerationConstraints c;
    c.length = l;
    c.start_edges = straight_window(l);
    c.end_edges = corner_window(inner, l);
    c.must_intersect = firsts(corner_arm(inner, l));
    return c;
}

}  // namespace

TEST_CASE("parallel enumeration gives the same counts for 1 and 8 threads") {
    for (auto id : {TableId::LoopsThroughEdge, TableId::WalksToBoundaryN, TableId::RightEndpointR, TableId::OddCornerQ,
                    TableId::SquareCn}) {
        const int max = id == TableId::SquareCn ? 6 : (id == TableId::OddCornerQ ? 13 : (id == TableId::WalksToBoundaryN ? 8 : 16));
        CAPTURE(to_string(id));
        CHECK(compute_table(id, max, {1, false}).as_map() == compute_table(id, max, {8, false}).as_map());
    }
    CHECK(s_column("w4", 12, {1, false}) == s_column("w4", 12, {8, false}));
    for (bool inner : {false, true}) {
        auto c = corner_walks(inner, 11);
        CHECK(count_walks(c, {1}) == count_walks(c, {8}));
        auto a = generate_walks(c, {1});
        auto b = generate_walks(c, {8});
        CHECK(std::set<Walk>(a.begin(), a.end()) == std::set<Walk>(b.begin(), b.end()));
    }
}

TEST_CASE("canonicalization is idempotent and reversal invariant") {
    for (bool inner : {false, true})
        for (const auto& w : generate_walks(corner_walks(inner, 9))) {
            CHECK(canonical(canonical(w)) == canonical(w));
            CHECK(canonical(reversed(w)) == canonical(w));
            CHECK(reversed(reversed(w)) == w);
        }
    for (const auto& l : cycles_through({{0, 0}}, 12, {}, LatticeKind::Hexagonal)) {
        CHECK(canonical(l) == l);
        Loop rot = l;
        std::rotate(rot.vertices.begin(), rot.vertices.begin() + 3, rot.vertices.end());
        CHECK(canonical(rot) == l);
        Loop rev = l;
        std::reverse(rev.vertices.begin(), rev.vertices.end());
        CHECK(canonical(rev) == l);
    }
    for (const auto& t : loops_through_vertex({0, 0}, 8)) {
        CHECK(canonical(canonical(t)) == canonical(t));
        Trail rev = t;
        std::reverse(rev.vertices.begin(), rev.vertices.end());
        CHECK(canonical(rev) == canonical(t));
    }
}

TEST_CASE("no walk is counted together with its reversal") {
    // windows symmetric under reversal: straight run both as start and end
    EnumerationConstraints c;
    c.length = 8;
    c.start_edges = straight_window(8);
    c.end_edges = straight_window(8);
    c.must_intersect = firsts(c.start_edges);
    auto ws = generate_walks(c);
    std::set<Walk> canon;
    for (const auto& w : ws) canon.insert(canonical(w));
    CHECK(canon.size() == ws.size());
}

TEST_CASE("bipartite lattice: no odd loops, every loop even") {
    for (int l = 3; l <= 15; l += 2) CHECK(cycles_through({{0, 0}}, l, {}, LatticeKind::Hexagonal).empty());
    for (int l = 6; l <= 14; l += 2)
        for (const auto& c : cycles_through({{1, 0}}, l, {}, LatticeKind::Hexagonal)) CHECK(c.length() % 2 == 0);
    for (int n = 3; n <= 9; n += 2) CHECK(loops_through_vertex({0, 0}, n).empty());
}

TEST_CASE("tail closed forms match truncated sums") {
    for (int m = 0; m <= 4; ++m) {
        auto p = hex_params(m);
        for (int l0 = 7; l0 <= 40; l0 += 3) {
            CHECK(std::abs(tail_sum_walks(l0, p) / tail_sum_walks_truncated(l0, p) - 1) <= 1e-10);
            CHECK(std::abs(tail_sum_walks(l0, p, true) / tail_sum_walks_truncated(l0, p, true) - 1) <= 1e-10);
        }
        for (int k0 = 4; k0 <= 20; ++k0)
            CHECK(std::abs(tail_sum_loops(k0, p) / tail_sum_loops_truncated(k0, p) - 1) <= 1e-10);
    }
}

TEST_CASE("little w decreases with length and decoration") {
    for (int m = 0; m <= 3; ++m) {
        auto p = hex_params(m);
        for (int l = 7; l < 60; ++l) CHECK(little_w(l + 1, p) < little_w(l, p));
        for (int l = 3; l < 30; ++l) CHECK(little_w(l, hex_params(m + 1)) < little_w(l, p));
    }
}

TEST_CASE("random walks from the generator are self-avoiding and distinct") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        int l = 5 + static_cast<int>(rng() % 6);
        bool inner = rng() % 2;
        auto ws = generate_walks(corner_walks(inner, l));
        for (const auto& w : ws) CHECK(is_self_avoiding_walk(w, LatticeKind::Hexagonal));
    }
}
