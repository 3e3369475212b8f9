#pragma once

#include <random>
#include <vector>

#include "flipgraph/flip_graph.hpp"
#include "oracles.hpp"

namespace testutil {

inline flipgraph::Triangulation from_diags(const flipgraph::PointConfig& cfg, const oracle::Diags& d) {
    std::vector<flipgraph::Arc> arcs;
    for (auto [u, v] : d) arcs.emplace_back(u, v);
    return flipgraph::from_arcs(cfg, arcs);
}

inline oracle::Diags to_diags(const flipgraph::PointConfig& cfg, const flipgraph::Triangulation& t) {
    oracle::Diags d;
    t.for_each([&](int id) {
        if (!cfg.is_boundary_arc(id)) d.push_back({cfg.arc(id).a, cfg.arc(id).b});
    });
    return d;
}

// Random walk of the given length in the flip-graph.
inline flipgraph::FlipPath random_walk(const flipgraph::PointConfig& cfg, const flipgraph::Triangulation& start,
                                       int length, std::mt19937_64& rng) {
    flipgraph::Mesh m(cfg, start);
    flipgraph::FlipPath p;
    p.snapshots.push_back(start);
    for (int i = 0; i < length; ++i) {
        std::vector<int> options;
        m.triangulation().for_each([&](int id) {
            if (m.flip_info(id)) options.push_back(id);
        });
        if (options.empty()) break;
        p.flips.push_back(m.flip(options[rng() % options.size()]));
        p.snapshots.push_back(m.triangulation());
    }
    return p;
}

}  // namespace testutil
