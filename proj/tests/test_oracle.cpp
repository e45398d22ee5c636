#include <doctest.h>

#include <cmath>

#include "aklt/oracle.hpp"

using namespace aklt;

TEST_CASE("Philox4x32-10 known answers") {
    using B = Philox4x32::Block;
    CHECK(Philox4x32::bijection({0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::bijection({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::bijection({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("sphere samples are unit vectors and uniform") {
    Philox4x32 g(7);
    double sx = 0, sz = 0, sz2 = 0, sz4 = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        auto p = sample_sphere(g, i, 0, 0);
        CHECK(std::abs(p.norm() - 1) < 1e-12);
        sx += p.x;
        sz += p.z;
        sz2 += p.z * p.z;
        sz4 += p.z * p.z * p.z * p.z;
    }
    // sd of x and z is 1/sqrt(3); sd of z^2 is sqrt(1/5 - 1/9)
    const double se = 1 / std::sqrt(3.0 * n);
    CHECK(std::abs(sx / n) < 4 * se);
    CHECK(std::abs(sz / n) < 4 * se);
    CHECK(std::abs(sz2 / n - 1.0 / 3) < 4 * std::sqrt(1.0 / 5 - 1.0 / 9) / std::sqrt(double(n)));
    CHECK(std::abs(sz4 / n - 1.0 / 5) < 0.01);
}

TEST_CASE("Monte-Carlo runs are deterministic across thread counts") {
    SpherePoint a{0, 0, 1}, b = SpherePoint::from_angles(1.0, 2.0);
    McConfig c1{11, 100000, 1}, c4{11, 100000, 4};
    auto e1 = mc_edge_identity(a, b, c1);
    auto e2 = mc_edge_identity(a, b, c1);
    auto e4 = mc_edge_identity(a, b, c4);
    CHECK(e1.estimate == e2.estimate);
    CHECK(e1.estimate == e4.estimate);
    CHECK(e1.std_error == e4.std_error);
    McConfig other{12, 100000, 1};
    CHECK(mc_edge_identity(a, b, other).estimate != e1.estimate);
}

TEST_CASE("analytic identity cases") {
    McConfig cfg{42, 1'000'000, 2};
    SpherePoint n{0, 0, 1}, e{1, 0, 0};
    CHECK(edge_identity_exact(n, n) == doctest::Approx(1.0 / 3));
    CHECK(edge_identity_exact(n, e) == 0);
    CHECK(degree4_identity_exact({n, n, n, n}) == doctest::Approx(1.0 / 5));
    CHECK(degree4_identity_exact({n, n, e, e}) == doctest::Approx(1.0 / 15));
    CHECK(mc_edge_identity(n, n, cfg).within());
    CHECK(mc_edge_identity(n, e, cfg).within());
    CHECK(mc_degree4_identity({n, n, n, n}, cfg).within());
    CHECK(mc_degree4_identity({n, n, e, e}, cfg).within());
}

TEST_CASE("random identity configurations") {
    Philox4x32 g(99);
    for (int i = 0; i < 5; ++i) {
        auto p = [&](std::uint32_t k) { return sample_sphere(g, i, k, 1); };
        McConfig cfg{static_cast<std::uint64_t>(100 + i), 400000, 2};
        CHECK(mc_edge_identity(p(0), p(1), cfg).within());
        CHECK(mc_degree4_identity({p(2), p(3), p(4), p(5)}, cfg).within());
    }
}

TEST_CASE("exact polymer values") {
    CHECK(polymer_value(single_hexagon_volume()) == doctest::Approx(244.0 / (64 * 243)).epsilon(1e-14));
    CHECK(polymer_value(unit_square_volume()) == doctest::Approx((1 + 1.0 / 27) / 16).epsilon(1e-14));
    CHECK(polymer_value(single_hexagon_volume()) > 1.0 / 64);
    // a tree has no closed polymer
    std::vector<Edge> path{make_edge({0, 0}, {1, 0}), make_edge({1, 0}, {2, 0}), make_edge({2, 0}, {2, 1})};
    CHECK(polymer_value(path) == doctest::Approx(1.0 / 8));
    // disjoint supports factorize
    auto h = single_hexagon_volume();
    auto two = h;
    for (const auto& e : h) two.push_back(make_edge({e.a.x + 6, e.a.y}, {e.b.x + 6, e.b.y}));
    const double one = polymer_value(h);
    CHECK(polymer_value(two) == doctest::Approx(one * one).epsilon(1e-13));
}

TEST_CASE("brute-force partition functions") {
    McConfig cfg{42, 2'000'000, 2};
    auto hx = brute_force_partition(single_hexagon_volume(), LatticeKind::Hexagonal, cfg);
    CHECK(hx.agrees);
    auto sq = brute_force_partition(unit_square_volume(), LatticeKind::Square, cfg);
    CHECK(sq.agrees);
    // 3x3 block: four plaquettes and a degree-4 centre
    std::vector<Edge> block;
    for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 2; ++y) {
            if (x < 2) block.push_back(make_edge({x, y}, {x + 1, y}));
            if (y < 2) block.push_back(make_edge({x, y}, {x, y + 1}));
        }
    auto b = brute_force_partition(block, LatticeKind::Square, cfg);
    CHECK(b.agrees);
    CHECK(b.polymer_value > 1.0 / 4096);

    std::vector<Edge> big = block;
    big.push_back(make_edge({2, 2}, {3, 2}));
    CHECK_THROWS_AS(brute_force_partition(big, LatticeKind::Square, cfg), std::invalid_argument);
    std::vector<Edge> hex_big = single_hexagon_volume();
    auto h0 = hex_big[0];
    hex_big.push_back(make_edge(h0.a, {h0.a.x - 1, h0.a.y}));
    hex_big.push_back(make_edge({h0.a.x - 1, h0.a.y}, {h0.a.x - 2, h0.a.y}));
    hex_big.push_back(make_edge({h0.a.x - 2, h0.a.y}, {h0.a.x - 3, h0.a.y}));
    CHECK_THROWS_AS(brute_force_partition(hex_big, LatticeKind::Hexagonal, cfg), std::invalid_argument);
}

TEST_CASE("reference port parity at small ranges") {
    CHECK(reference_port_compare(TableId::LoopsThroughEdge, 12).ok());
    CHECK(reference_port_compare(TableId::RightEndpointR, 10).ok());
    CHECK(reference_port_compare(TableId::OddCornerQ, 9).ok());
    CHECK(reference_port_compare(TableId::WalksToBoundaryN, 6).ok());
    CHECK(reference_port_compare(TableId::SquareCn, 4).ok());
    CHECK_THROWS_AS(reference_port_compare(TableId::SupTableS, 8), std::invalid_argument);
}
