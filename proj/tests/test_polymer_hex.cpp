#include <doctest.h>

#include <set>

#include "aklt/polymer_hex.hpp"
#include "brick.hpp"

using namespace aklt;

namespace {

EnumerationConstraints bond_loops(DirectedEdge e, int l) {
    EnumerationConstraints c;
    c.length = l;
    c.start_edges = {e};
    c.end_edges = {e};
    c.must_intersect = {e.from, e.to};
    return c;
}

}  // namespace

TEST_CASE("step generator branches at most twice") {
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y) {
            Vertex v{x, y};
            for (auto p : neighbors(v, LatticeKind::Hexagonal)) {
                auto c = hex_step_candidates(p, v);
                CHECK(c.size() == 2);
                for (auto w : c) {
                    CHECK(adjacent(v, w, LatticeKind::Hexagonal));
                    CHECK_FALSE(w == p);
                }
            }
        }
}

TEST_CASE("loops through a bond match brute-force cycle counts") {
    auto e = straight_window(0).front();
    for (int l = 6; l <= 16; l += 2) {
        CAPTURE(l);
        CHECK(static_cast<long>(count_loops(bond_loops(e, l))) == brick::cycles_through_bond(e.from, e.to, l));
    }
}

TEST_CASE("loop counts are the same for all three bond orientations") {
    Vertex v{0, 0};
    std::vector<long> counts;
    for (auto w : neighbors(v, LatticeKind::Hexagonal)) counts.push_back(static_cast<long>(count_loops(bond_loops({v, w}, 12))));
    CHECK(counts[0] == counts[1]);
    CHECK(counts[1] == counts[2]);
    CHECK(counts[0] == 8);
}

TEST_CASE("loops are even and odd lengths are rejected") {
    auto e = straight_window(0).front();
    CHECK_THROWS_AS(count_loops(bond_loops(e, 7)), std::invalid_argument);
    for (const auto& l : generate_loops(bond_loops(e, 10))) {
        CHECK(l.length() % 2 == 0);
        CHECK(is_self_avoiding_loop(l, LatticeKind::Hexagonal));
    }
    CHECK(count_loops(bond_loops(e, 8)) == 0);
}

TEST_CASE("generated walks satisfy their constraints") {
    EnumerationConstraints c;
    c.length = 7;
    c.start_edges = straight_window(7);
    c.end_edges = corner_arm(false, 7);
    auto ends = firsts(c.end_edges);
    c.must_intersect = ends;
    auto walks = generate_walks(c);
    CHECK(walks.size() == count_walks(c));
    CHECK(walks.size() > 0);
    std::set<Vertex> end_set(ends.begin(), ends.end());
    std::set<Walk> canon;
    for (const auto& w : walks) {
        CHECK(w.length() == 7);
        CHECK(is_self_avoiding_walk(w, LatticeKind::Hexagonal));
        CHECK(end_set.count(w.vertices.back()));
        CHECK(canonical(w) == canonical(reversed(w)));
        canon.insert(canonical(w));
    }
    CHECK(canon.size() == walks.size());
}

TEST_CASE("canonical forms") {
    Walk w{{{0, 0}, {1, 0}, {1, 1}}};
    CHECK(canonical(canonical(w)) == canonical(w));
    CHECK(canonical(w) == canonical(reversed(w)));
    Loop l{{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 1}}};
    Loop rot{{{2, 1}, {1, 1}, {0, 1}, {0, 0}, {1, 0}, {2, 0}}};
    Loop rev{{{0, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 0}, {1, 0}}};
    CHECK(canonical(l) == canonical(rot));
    CHECK(canonical(l) == canonical(rev));
    CHECK(is_self_avoiding_loop(l, LatticeKind::Hexagonal));
}

TEST_CASE("cycles_through finds the hexagons around a vertex") {
    auto c = cycles_through({{0, 0}}, 6, {}, LatticeKind::Hexagonal);
    CHECK(c.size() == 3);
    CHECK(cycles_through({{0, 0}}, 8, {}, LatticeKind::Hexagonal).empty());
    CHECK(cycles_through({{0, 0}}, 7, {}, LatticeKind::Hexagonal).empty());
    // each cycle through a vertex uses two of its three bonds
    for (int l : {10, 12, 14}) {
        long sum = 0;
        for (auto w : brick::hex_nbrs({0, 0})) sum += brick::cycles_through_bond({0, 0}, w, l);
        CHECK(static_cast<long>(cycles_through({{0, 0}}, l, {}, LatticeKind::Hexagonal).size()) == sum / 2);
    }
}
