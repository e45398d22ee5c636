#include <doctest.h>

#include <filesystem>
#include <map>
#include <sstream>

#include "aklt/golden.hpp"
#include "aklt/tables.hpp"

using namespace aklt;

namespace {

using M = std::map<int, std::int64_t>;

const M kLoops{{6, 2},    {8, 0},    {10, 10},   {12, 8},    {14, 56},    {16, 96},
               {18, 390}, {20, 920}, {22, 3168}, {24, 8592}, {26, 28002}, {28, 81368}};
const M kN{{1, 1}, {2, 2}, {3, 2}, {4, 4}, {5, 6}, {6, 8}, {7, 16}, {8, 24}, {9, 40}, {10, 64}};
const M kR{{4, 1}, {6, 1}, {8, 4}, {10, 9}, {12, 26}, {14, 75}, {16, 215}, {18, 649}, {20, 1943}};
const M kQ{{3, 1}, {5, 2}, {7, 7}, {9, 20}, {11, 64}, {13, 202}, {15, 647}, {17, 2094}, {19, 6803}};
const M kC{{3, 4}, {4, 9}, {5, 13}, {6, 42}, {7, 88}};

}  // namespace

TEST_CASE("printed one-dimensional tables") {
    CHECK(loops_through_edge_table(28).as_map() == kLoops);
    CHECK(walks_to_boundary_table(10).as_map() == kN);
    CHECK(r_table(20).as_map() == kR);
    CHECK(q_table(19).as_map() == kQ);
    CHECK(square_cn_table(7).as_map() == kC);
}

TEST_CASE("S table: first column and the inner-boundary loop rows") {
    auto s = s_table(20);
    const std::vector<std::int64_t> w3{1, 2, 2, 2, 6, 8, 14, 18, 38, 52, 106, 150, 296, 428, 868, 1284, 2530, 3818};
    for (int lp = 3; lp <= 20; ++lp) {
        CAPTURE(lp);
        CHECK(s.at(lp, "w3", "S") == w3[lp - 3]);
    }
    CHECK(s.at(6, "w3", "M") == 1);
    CHECK(s.at(10, "w3", "M") == 3);
    CHECK(s.at(6, "w5", "M") == 3);
    CHECK(s.at(10, "w5", "M") == 11);
    CHECK(s.at(6, "l6", "M") == 7);
    CHECK(s.at(10, "l6", "M") == 30);
}

TEST_CASE("S table: even rows of the (w,4) column agree with print") {
    auto s = s_table(20);
    const M even{{4, 2}, {6, 2}, {8, 9}, {10, 22}, {12, 70}, {14, 224}, {16, 655}, {18, 2084}, {20, 6504}};
    for (const auto& [lp, v] : even) {
        CAPTURE(lp);
        CHECK(s.at(lp, "w4", "S") == v);
    }
}

TEST_CASE("S cumulative sums are non-decreasing") {
    auto s = s_table(20);
    for (const char* col : {"w3", "w4", "w5", "w6", "l6"}) {
        std::int64_t cum = 0;
        for (int lp = 3; lp <= 20; ++lp) {
            auto v = s.at(lp, col, "S");
            REQUIRE(v);
            CHECK(*v >= 0);
            CHECK(cum + *v >= cum);
            cum += *v;
        }
    }
}

TEST_CASE("window saturation") {
    auto r12 = r_table(12).as_map();
    auto r14 = r_table(14).as_map();
    for (const auto& [l, v] : r12) CHECK(r14.at(l) == v);
    auto q11 = q_table(11).as_map();
    auto q13 = q_table(13).as_map();
    for (const auto& [l, v] : q11) CHECK(q13.at(l) == v);
    auto n8 = walks_to_boundary_table(8).as_map();
    auto n10 = walks_to_boundary_table(10).as_map();
    for (const auto& [l, v] : n8) CHECK(n10.at(l) == v);
}

TEST_CASE("range validation") {
    CHECK(check_range(TableId::LoopsThroughEdge, 7));
    CHECK(check_range(TableId::LoopsThroughEdge, 4));
    CHECK_FALSE(check_range(TableId::LoopsThroughEdge, 28));
    CHECK(check_range(TableId::OddCornerQ, 10));
    CHECK(check_range(TableId::RightEndpointR, 9));
    CHECK(check_range(TableId::SupTableS, 21));
    CHECK(check_range(TableId::SquareCn, 2));
    CHECK_THROWS_AS(loops_through_edge_table(7), std::invalid_argument);
}

TEST_CASE("table ids") {
    for (auto id : {TableId::LoopsThroughEdge, TableId::WalksToBoundaryN, TableId::SupTableS, TableId::RightEndpointR,
                    TableId::OddCornerQ, TableId::SquareCn}) {
        CHECK(parse_table_id(short_name(id)) == id);
        CHECK(parse_table_id(to_string(id)) == id);
    }
    CHECK_FALSE(parse_table_id("nope"));
}

TEST_CASE("serialization round-trips") {
    for (auto t : {r_table(12), s_table(8)}) {
        auto j = to_json(t);
        auto back = table_from_json(nlohmann::json::parse(j.dump()));
        CHECK(to_json(back) == j);
        CHECK(back.rows.size() == t.rows.size());
    }
    auto csv = to_csv(r_table(20));
    std::istringstream in(csv);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 10);  // header + 9 rows
}

TEST_CASE("table cache") {
    auto dir = std::filesystem::temp_directory_path() / "aklt-test-cache";
    std::filesystem::remove_all(dir);
    TableCache cache(dir);
    CHECK_FALSE(cache.load(TableId::OddCornerQ, 9, false));
    auto t = cache.get_or_compute(TableId::OddCornerQ, 9);
    auto again = cache.load(TableId::OddCornerQ, 9, false);
    REQUIRE(again);
    CHECK(again->as_map() == t.as_map());
    CHECK(again->generator_version == kGeneratorVersion);
    CHECK(cache.path_for(TableId::OddCornerQ, 9, true) != cache.path_for(TableId::OddCornerQ, 9, false));
    std::filesystem::remove_all(dir);
}

TEST_CASE("golden comparison") {
    CHECK(compare_with_golden(loops_through_edge_table(20)).empty());
    CHECK(compare_with_golden(q_table(19)).empty());
    auto bad = compare_with_golden(s_table(20));
    for (const auto& m : bad) {
        CHECK(m.index.column != "w3");
        CHECK_FALSE(m.cite.empty());
    }
    TableResult fake = r_table(8);
    fake.rows.back().value += 1;
    auto mm = compare_with_golden(fake);
    REQUIRE(mm.size() == 1);
    CHECK(mm[0].index.l == 8);
    CHECK(mm[0].expected == 4);
}
