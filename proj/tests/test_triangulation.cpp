#include <doctest.h>

#include <random>
#include <sstream>

#include "flipgraph/errors.hpp"
#include "flipgraph/flip_graph.hpp"
#include "helpers.hpp"

using namespace flipgraph;

namespace {

PointConfig from_text(const std::string& s) {
    std::istringstream in(s);
    return parse_config(in);
}

const char* kPunctured = "corner 0 0\ncorner 10 0\ncorner 12 7\ncorner 5 12\ncorner -2 7\npuncture 4 5\npuncture 7 3\n";

}  // namespace

TEST_CASE("is_triangulation") {
    auto c = convex_polygon(6);
    CHECK(is_triangulation(c, comb(c, 0)));
    Triangulation t = comb(c, 0);
    t.erase(c.arc_id(0, 3));
    CHECK_FALSE(is_triangulation(c, t));
    t.insert(c.arc_id(1, 4));
    std::string why;
    CHECK_FALSE(is_triangulation(c, t, &why));
    CHECK(why == "crossing arcs");
    Triangulation u = comb(c, 0);
    u.erase(c.arc_id(0, 1));
    CHECK_FALSE(is_triangulation(c, u));
}

TEST_CASE("every triangulation of a convex polygon has n-3 flippable diagonals and flips are involutions") {
    for (int n = 4; n <= 8; ++n) {
        auto c = convex_polygon(n);
        for (const auto& d : oracle::convex_triangulations(n)) {
            auto t = testutil::from_diags(c, d);
            REQUIRE(is_triangulation(c, t));
            int flippable = 0;
            t.for_each([&](int id) {
                auto f = flip(c, t, id);
                if (c.is_boundary_arc(id)) {
                    CHECK_FALSE(f);
                    return;
                }
                REQUIRE(f);
                ++flippable;
                CHECK(is_triangulation(c, *f));
                CHECK(difference_count(*f, t) == 1);
                int inserted = -1;
                f->for_each([&](int j) {
                    if (!t.contains(j)) inserted = j;
                });
                CHECK(c.crosses(id, inserted));
                CHECK(*flip(c, *f, inserted) == t);
            });
            CHECK(flippable == n - 3);
        }
    }
}

TEST_CASE("flip of an arc not in the triangulation is none") {
    auto c = convex_polygon(6);
    auto t = comb(c, 0);
    CHECK_FALSE(flip(c, t, c.arc_id(1, 4)));
    CHECK_FALSE(flip(c, t, -1));
}

TEST_CASE("flip returns none when the other diagonal would contain a flat vertex") {
    auto c = from_text("corner 0 0\nflat 2 0\ncorner 4 0\ncorner 5 3\ncorner 2 5\ncorner -1 3\n");
    // triangles (0,1,4) and (1,2,4) share arc 1-4, the flat vertex 1 is between 0 and 2
    auto t = from_arcs(c, {{1, 4}, {0, 4}, {2, 4}});
    REQUIRE(is_triangulation(c, t));
    CHECK_FALSE(flip(c, t, c.arc_id(1, 4)));
    CHECK(flip(c, t, c.arc_id(2, 4)));
}

TEST_CASE("triangles_of") {
    auto c = convex_polygon(7);
    auto tris = triangles_of(c, comb(c, 3));
    CHECK(static_cast<int>(tris.size()) == c.triangle_count());
    for (const auto& tr : tris) {
        CHECK(tr.has(3));
        CHECK(orientation(c.point(tr.v[0]), c.point(tr.v[1]), c.point(tr.v[2])) > 0);
    }
    auto p = from_text(kPunctured);
    auto t = greedy_triangulation(p);
    REQUIRE(is_triangulation(p, t));
    auto pt = triangles_of(p, t);
    CHECK(static_cast<int>(pt.size()) == p.triangle_count());
    for (const auto& tr : pt)
        for (int i = 0; i < 3; ++i) CHECK(t.contains(p.arc_id(tr.v[i], tr.v[(i + 1) % 3])));
}

TEST_CASE("punctured configurations: flips stay triangulations and are involutions") {
    auto p = from_text(kPunctured);
    auto all = reachable_set(p, greedy_triangulation(p));
    CHECK(all.size() > 10);
    for (const auto& t : all) {
        CHECK(t.count() == p.triangulation_arc_count());
        t.for_each([&](int id) {
            auto f = flip(p, t, id);
            if (!f) return;
            CHECK(is_triangulation(p, *f));
            int ins = -1;
            f->for_each([&](int j) {
                if (!t.contains(j)) ins = j;
            });
            CHECK(*flip(p, *f, ins) == t);
        });
    }
}

TEST_CASE("comb") {
    auto c = convex_polygon(6);
    auto t = comb(c, 2);
    CHECK(degree(c, t, 2) == 5);
    auto flat = from_text("corner 0 0\nflat 2 0\ncorner 4 0\ncorner 4 4\ncorner 0 4\n");
    CHECK_THROWS_AS(comb(flat, 0), ObstructionError);
    CHECK_THROWS_AS(comb(flat, 2), ObstructionError);
    CHECK(is_triangulation(flat, comb(flat, 1)));
    CHECK(is_triangulation(flat, comb(flat, 3)));
    CHECK_THROWS_AS(comb(from_text(kPunctured), 0), PreconditionError);
}

TEST_CASE("zigzag") {
    auto c = convex_polygon(8);
    auto sq = zigzag_arcs(c, {0, 1, 2, 3}, 0, 1);
    REQUIRE(sq.size() == 1);
    CHECK(sq[0] == Arc(0, 2));
    auto pent = zigzag_arcs(c, {0, 1, 2, 3, 4}, 0, 1);
    REQUIRE(pent.size() == 2);
    CHECK(pent[0] == Arc(0, 2));
    CHECK(pent[1] == Arc(4, 2));
    auto oct = zigzag_arcs(c, {0, 1, 2, 3, 4, 5, 6, 7}, 3, 2);
    REQUIRE(oct.size() == 5);
    // consecutive diagonals share one endpoint and the shared endpoint alternates sides
    for (std::size_t i = 0; i + 1 < oct.size(); ++i) {
        int shared = oct[i].has(oct[i + 1].a) ? oct[i + 1].a : oct[i + 1].b;
        CHECK(oct[i].has(shared));
        if (i + 2 < oct.size()) CHECK_FALSE(oct[i + 2].has(shared));
    }
    CHECK(is_triangulation(c, from_arcs(c, oct)));
    CHECK_THROWS_AS(zigzag_arcs(c, {0, 1, 2, 3}, 0, 2), PreconditionError);
}

TEST_CASE("contraction") {
    auto c = convex_polygon(7);
    std::mt19937_64 rng(3);
    for (const auto& d : oracle::convex_triangulations(7)) {
        auto t = testutil::from_diags(c, d);
        auto r = contract_edge(c, t, 3, 4);
        CHECK(r.config.size() == 6);
        CHECK(is_triangulation(r.config, r.triangulation));
        CHECK(r.vertex_map[4] == r.vertex_map[3]);
    }
    CHECK_THROWS_AS(contract_edge(c, comb(c, 0), 0, 3), PreconditionError);

    // vertex 1 is flat between 0 and 2; contracting 2-3 onto 2 turns 0-3 into 0-2
    auto f = from_text("corner 0 0\nflat 2 0\ncorner 4 0\ncorner 5 2\ncorner 3 5\ncorner -1 3\n");
    auto t = from_arcs(f, {{0, 3}, {1, 3}, {0, 4}});
    REQUIRE(is_triangulation(f, t));
    CHECK_THROWS_AS(contract_edge(f, t, 2, 3), ObstructionError);
    auto ok = from_arcs(f, {{1, 3}, {1, 4}, {1, 5}});
    REQUIRE(is_triangulation(f, ok));
    CHECK(is_triangulation(contract_edge(f, ok, 2, 3).config, contract_edge(f, ok, 2, 3).triangulation));
}

TEST_CASE("triangulation text form") {
    auto c = convex_polygon(6);
    auto t = comb(c, 4);
    auto s = format_triangulation(c, t);
    CHECK(s == "0-1,0-4,0-5,1-2,1-4,2-3,2-4,3-4,4-5");
    CHECK(parse_triangulation(c, s) == t);
    CHECK(parse_triangulation(c, "1-4, 2-4, 4-0") == t);
    CHECK(parse_triangulation(c, "comb:4") == t);
    CHECK_THROWS_AS(parse_triangulation(c, "1-4,2-4"), PreconditionError);
    CHECK_THROWS_AS(parse_triangulation(c, "1:4"), ParseError);
    CHECK_THROWS_AS(parse_triangulation(c, "1-9"), ParseError);
}

TEST_CASE("contraction examples") {
    auto sq = convex_polygon(4);
    auto r = contract_edge(sq, from_arcs(sq, {{0, 2}}), 0, 1);
    CHECK(r.config.size() == 3);
    CHECK(r.triangulation.count() == 3);
    auto h = convex_polygon(6);
    auto p = contract_edge(h, comb(h, 0), 3, 4);
    CHECK(p.config.size() == 5);
    CHECK(p.vertex_map[0] == 0);
    CHECK(p.triangulation == comb(p.config, 0));
}
