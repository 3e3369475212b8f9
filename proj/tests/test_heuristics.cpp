#include <doctest.h>

#include <random>

#include "flipgraph/errors.hpp"
#include "flipgraph/heuristics.hpp"
#include "helpers.hpp"

using namespace flipgraph;

namespace {

long long brute_crossings(const PointConfig& c, const Triangulation& a, const Triangulation& b) {
    long long k = 0;
    a.for_each([&](int i) {
        b.for_each([&](int j) {
            const auto &x = c.arc(i), &y = c.arc(j);
            if (oracle::segments_cross(c.point(x.a), c.point(x.b), c.point(y.a), c.point(y.b))) ++k;
        });
    });
    return k;
}

}  // namespace

TEST_CASE("crossing number") {
    auto h = convex_polygon(6);
    CHECK(crossing_number(h, comb(h, 0), comb(h, 2)) == 3);
    CHECK(crossing_number(h, comb(h, 0), comb(h, 0)) == 0);
    auto c = convex_polygon(9);
    auto all = reachable_set(c, comb(c, 0));
    std::mt19937_64 rng(9);
    for (int k = 0; k < 200; ++k) {
        const auto& a = all[rng() % all.size()];
        const auto& b = all[rng() % all.size()];
        long long x = crossing_number(c, a, b);
        CHECK(x == crossing_number(c, b, a));
        CHECK(x == brute_crossings(c, a, b));
        CHECK((x == 0) == (a == b));
    }
}

TEST_CASE("greedy picks a flip of maximal decrease") {
    auto c = convex_polygon(9);
    auto all = reachable_set(c, comb(c, 0));
    std::mt19937_64 rng(4);
    for (int k = 0; k < 100; ++k) {
        const auto& a = all[rng() % all.size()];
        const auto& b = all[rng() % all.size()];
        if (a == b) continue;
        long long before = crossing_number(c, a, b);
        long long best = 0;
        a.for_each([&](int id) {
            if (auto f = flip(c, a, id)) best = std::max(best, before - crossing_number(c, *f, b));
        });
        for (auto rule : all_tie_rules()) {
            auto s = greedy_step(c, a, b, rule);
            CHECK(s.decrease == best);
            CHECK(before - crossing_number(c, *flip(c, a, s.flip.removed), b) == best);
        }
    }
}

TEST_CASE("greedy paths reach the target with strictly decreasing crossings") {
    auto c = convex_polygon(8);
    auto all = reachable_set(c, comb(c, 0));
    std::mt19937_64 rng(8);
    for (int k = 0; k < 50; ++k) {
        const auto& a = all[rng() % all.size()];
        const auto& b = all[rng() % all.size()];
        for (auto rule : all_tie_rules()) {
            auto p = greedy_path(c, a, b, rule);
            CHECK(is_valid_path(c, p));
            CHECK(p.snapshots.back() == b);
            for (std::size_t i = 0; i + 1 < p.snapshots.size(); ++i)
                CHECK(crossing_number(c, p.snapshots[i + 1], b) < crossing_number(c, p.snapshots[i], b));
            CHECK(p.length() >= distance(c, a, b));
            CHECK(greedy_length(c, a, b, rule) == p.length());
        }
    }
}

TEST_CASE("greedy is optimal on the pentagon and not in general") {
    auto p = convex_polygon(5);
    auto all = reachable_set(p, comb(p, 0));
    for (const auto& a : all)
        for (const auto& b : all) CHECK(greedy_length(p, a, b) == distance(p, a, b));

    bool found = false;
    for (int n = 6; n <= 8 && !found; ++n) {
        auto c = convex_polygon(n);
        auto g = FlipGraph::build(c, comb(c, 0));
        for (int s = 0; s < g.size() && !found; ++s) {
            auto d = g.bfs(s);
            for (int t = 0; t < g.size() && !found; ++t)
                if (greedy_length(c, g.node(s), g.node(t)) > d[t]) found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("tie rule names") {
    for (auto r : all_tie_rules()) CHECK(parse_tie_rule(tie_rule_name(r)) == r);
    CHECK_THROWS_AS(parse_tie_rule("random"), ParseError);
}

TEST_CASE("incremental counts match recomputation") {
    auto c = convex_polygon(10);
    std::mt19937_64 rng(10);
    auto a = testutil::random_walk(c, comb(c, 0), 40, rng).snapshots.back();
    auto b = testutil::random_walk(c, comb(c, 5), 40, rng).snapshots.back();
    CrossingGreedy g(c, a, b);
    while (!g.done()) {
        CHECK(g.crossings() == crossing_number(c, g.current(), b));
        g.step();
    }
    CHECK(g.current() == b);
}
