#include <doctest.h>

#include <random>
#include <set>

#include "flipgraph/errors.hpp"
#include "flipgraph/flip_graph.hpp"
#include "helpers.hpp"

using namespace flipgraph;

TEST_CASE("reachable set sizes are Catalan numbers") {
    for (int n = 3; n <= 10; ++n) {
        auto c = convex_polygon(n);
        auto all = reachable_set(c, comb(c, 0));
        CHECK(all.size() == oracle::catalan(n - 2));
        std::set<oracle::Diags> seen;
        for (const auto& t : all) seen.insert(testutil::to_diags(c, t));
        CHECK(seen.size() == all.size());
    }
}

TEST_CASE("flip graph matches the oracle graph") {
    for (int n = 5; n <= 7; ++n) {
        auto c = convex_polygon(n);
        oracle::ConvexGraph og(n);
        auto g = FlipGraph::build(c, comb(c, 0));
        REQUIRE(g.size() == static_cast<int>(og.nodes.size()));
        std::size_t oracle_edges = 0;
        for (const auto& a : og.adj) oracle_edges += a.size();
        CHECK(g.edge_count() * 2 == oracle_edges);
        for (int i = 0; i < g.size(); ++i) CHECK(g.end(i) - g.begin(i) == n - 3);
    }
}

TEST_CASE("distances agree with oracle BFS") {
    for (int n = 5; n <= 7; ++n) {
        auto c = convex_polygon(n);
        oracle::ConvexGraph og(n);
        std::mt19937_64 rng(n);
        for (int k = 0; k < 25; ++k) {
            int s = static_cast<int>(rng() % og.nodes.size());
            int t = static_cast<int>(rng() % og.nodes.size());
            int expect = og.bfs(s)[t];
            auto ts = testutil::from_diags(c, og.nodes[s]);
            auto tt = testutil::from_diags(c, og.nodes[t]);
            CHECK(distance(c, ts, tt) == expect);
            CHECK(distance(c, tt, ts) == expect);
            auto dag = geodesic_dag(c, ts, tt);
            CHECK(dag.length() == expect);
            CHECK(dag.geodesic_count() == doctest::Approx(static_cast<double>(og.geodesic_count(s, t))));
        }
    }
}

TEST_CASE("small examples") {
    auto p = convex_polygon(5);
    CHECK(distance(p, comb(p, 0), comb(p, 1)) == 2);
    auto dag = geodesic_dag(p, comb(p, 0), comb(p, 1));
    CHECK(dag.geodesic_count() == 1.0);
    auto h = convex_polygon(6);
    CHECK(distance(h, comb(h, 0), comb(h, 3)) == 2);
    CHECK(distance(h, comb(h, 0), comb(h, 0)) == 0);
    CHECK(diameter(h).diameter == 4);
}

TEST_CASE("geodesic enumeration") {
    auto c = convex_polygon(7);
    oracle::ConvexGraph og(7);
    auto s = comb(c, 0), t = comb(c, 3);
    auto dag = geodesic_dag(c, s, t);
    int si = og.index.at(testutil::to_diags(c, s)), ti = og.index.at(testutil::to_diags(c, t));
    long long expect = og.geodesic_count(si, ti);
    bool trunc = true;
    auto all = enumerate_geodesics(c, dag, 1'000'000, &trunc);
    CHECK_FALSE(trunc);
    CHECK(static_cast<long long>(all.size()) == expect);
    std::set<std::vector<Triangulation>> distinct;
    for (const auto& g : all) {
        CHECK(is_valid_path(c, g));
        CHECK(g.length() == dag.length());
        CHECK(g.snapshots.front() == s);
        CHECK(g.snapshots.back() == t);
        distinct.insert(g.snapshots);
    }
    CHECK(static_cast<long long>(distinct.size()) == expect);
    REQUIRE(expect > 2);
    auto capped = enumerate_geodesics(c, dag, 2, &trunc);
    CHECK(trunc);
    CHECK(capped.size() == 2);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        auto g = sample_geodesic(c, dag, rng);
        CHECK(is_valid_path(c, g));
        CHECK(distinct.count(g.snapshots) == 1);
    }
}

TEST_CASE("constrained distance") {
    auto c = convex_polygon(7);
    std::mt19937_64 rng(5);
    auto all = reachable_set(c, comb(c, 0));
    int checked = 0;
    for (int k = 0; k < 200 && checked < 30; ++k) {
        const auto& a = all[rng() % all.size()];
        const auto& b = all[rng() % all.size()];
        Frozen common;
        a.for_each([&](int id) {
            if (b.contains(id) && !c.is_boundary_arc(id)) common.push_back(id);
        });
        if (common.empty()) continue;
        ++checked;
        CHECK(distance(c, a, b, common) >= distance(c, a, b));
    }
    CHECK(checked > 0);
    Frozen f{c.arc_id(0, 3)};
    CHECK_THROWS_AS(distance(c, comb(c, 1), comb(c, 0), f), PreconditionError);
}

TEST_CASE("comb upper bound path") {
    for (int n = 5; n <= 8; ++n) {
        auto c = convex_polygon(n);
        std::mt19937_64 rng(n);
        auto all = reachable_set(c, comb(c, 0));
        for (int k = 0; k < 20; ++k) {
            const auto& a = all[rng() % all.size()];
            const auto& b = all[rng() % all.size()];
            int x = static_cast<int>(rng() % n);
            auto p = comb_upper_bound_path(c, a, b, x);
            CHECK(is_valid_path(c, p));
            CHECK(p.snapshots.front() == a);
            CHECK(p.snapshots.back() == b);
            CHECK(p.length() == 2 * (n - 1) - degree(c, a, x) - degree(c, b, x));
            CHECK(p.length() >= distance(c, a, b));
        }
    }
    auto h = convex_polygon(6);
    CHECK(comb_upper_bound_path(h, comb(h, 0), comb(h, 3), 0).length() == 2);
}

TEST_CASE("diameter of small polygons") {
    const int expect[] = {1, 2, 4, 5, 7, 9};
    for (int n = 4; n <= 9; ++n) {
        auto c = convex_polygon(n);
        auto sym = diameter(c);
        CHECK(sym.diameter == expect[n - 4]);
        CHECK(distance(c, sym.from, sym.to) == sym.diameter);
        if (n <= 8) CHECK(diameter(c, Limits{}, false).diameter == sym.diameter);
    }
}

TEST_CASE("resource cap") {
    auto c = convex_polygon(10);
    CHECK_THROWS_AS(reachable_set(c, comb(c, 0), Limits{100}), ResourceError);
    CHECK_THROWS_AS(distance(c, comb(c, 0), comb(c, 5), {}, Limits{10}), ResourceError);
}

TEST_CASE("paths") {
    auto c = convex_polygon(6);
    std::mt19937_64 rng(2);
    auto w = testutil::random_walk(c, comb(c, 0), 10, rng);
    CHECK(is_valid_path(c, w));
    auto r = reversed(w);
    CHECK(is_valid_path(c, r));
    CHECK(r.snapshots.front() == w.snapshots.back());
    CHECK(make_path(c, w.snapshots).length() == w.length());
    std::vector<int> rem;
    for (const auto& f : w.flips) rem.push_back(f.removed);
    CHECK(path_from_removals(c, w.snapshots.front(), rem).snapshots == w.snapshots);
    CHECK_THROWS_AS(make_path(c, {comb(c, 0), comb(c, 3)}), PreconditionError);
}

TEST_CASE("contracted paths lose exactly the flips on the contracted edge") {
    std::mt19937_64 rng(12);
    for (int n = 5; n <= 8; ++n) {
        auto c = convex_polygon(n);
        for (int k = 0; k < 40; ++k) {
            auto w = testutil::random_walk(c, comb(c, static_cast<int>(rng() % n)), 1 + static_cast<int>(rng() % 12), rng);
            int x = static_cast<int>(rng() % n);
            int y = (rng() % 2) ? c.next_boundary(x) : c.prev_boundary(x);
            auto r = contract_path(c, w, x, y);
            CHECK(r.config.size() == n - 1);
            CHECK(is_valid_path(r.config, r.path));
            CHECK(r.path.length() == w.length() - r.collapsed);
        }
    }
    auto c = convex_polygon(6);
    CHECK_THROWS_AS(contract_path(c, path_to_comb(c, comb(c, 0), 2), 0, 2), PreconditionError);
}
