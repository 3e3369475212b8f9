#pragma once

#include <string>
#include <vector>

#include "flipgraph/flip_graph.hpp"

namespace flipgraph {

enum class TieRule { LexRemoved, LexInserted, FirstFound };

TieRule parse_tie_rule(const std::string& s);
std::string tie_rule_name(TieRule r);
std::vector<TieRule> all_tie_rules();

// Number of crossing pairs (a, b), a in t1, b in t2.
long long crossing_number(const PointConfig& cfg, const Triangulation& t1, const Triangulation& t2);

struct GreedyStep {
    FlipResult flip;
    int decrease = 0;
};

// Greedy crossing reducer towards a fixed target. Crossing counts of arcs
// against the target are cached per arc id.
class CrossingGreedy {
public:
    CrossingGreedy(const PointConfig& cfg, const Triangulation& start, const Triangulation& target,
                   TieRule rule = TieRule::LexRemoved);

    long long crossings() const { return total_; }
    const Triangulation& current() const { return mesh_.triangulation(); }
    bool done() const { return total_ == 0; }
    // Crossings of arc id with the target.
    int arc_crossings(int id);
    // Best flip without applying it; throws InvariantError when none decreases.
    GreedyStep choose();
    GreedyStep step();

private:
    const PointConfig* cfg_;
    Triangulation target_;
    std::vector<int> target_ids_;
    Mesh mesh_;
    TieRule rule_;
    std::vector<int> cache_;
    long long total_ = 0;
};

GreedyStep greedy_step(const PointConfig& cfg, const Triangulation& t, const Triangulation& target,
                       TieRule rule = TieRule::LexRemoved);

// Greedy path until the target is reached.
FlipPath greedy_path(const PointConfig& cfg, const Triangulation& start, const Triangulation& target,
                     TieRule rule = TieRule::LexRemoved);
// Length only, without storing snapshots.
int greedy_length(const PointConfig& cfg, const Triangulation& start, const Triangulation& target,
                  TieRule rule = TieRule::LexRemoved, std::vector<int>* removed = nullptr);

}  // namespace flipgraph
