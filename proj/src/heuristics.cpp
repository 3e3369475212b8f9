#include "flipgraph/heuristics.hpp"

#include "flipgraph/errors.hpp"

namespace flipgraph {

TieRule parse_tie_rule(const std::string& s) {
    if (s == "lexicographic-removed" || s == "lexicographic-removed-arc" || s == "lex-removed") return TieRule::LexRemoved;
    if (s == "lexicographic-inserted" || s == "lexicographic-inserted-arc" || s == "lex-inserted")
        return TieRule::LexInserted;
    if (s == "first-found") return TieRule::FirstFound;
    throw ParseError("unknown tie rule " + s);
}

std::string tie_rule_name(TieRule r) {
    switch (r) {
        case TieRule::LexRemoved: return "lexicographic-removed";
        case TieRule::LexInserted: return "lexicographic-inserted";
        case TieRule::FirstFound: return "first-found";
    }
    return "?";
}

std::vector<TieRule> all_tie_rules() { return {TieRule::LexRemoved, TieRule::LexInserted, TieRule::FirstFound}; }

long long crossing_number(const PointConfig& cfg, const Triangulation& t1, const Triangulation& t2) {
    std::vector<int> a, b;
    t1.for_each([&](int id) {
        if (!cfg.is_boundary_arc(id)) a.push_back(id);
    });
    t2.for_each([&](int id) {
        if (!cfg.is_boundary_arc(id)) b.push_back(id);
    });
    long long c = 0;
    for (int x : a)
        for (int y : b)
            if (cfg.crosses(x, y)) ++c;
    return c;
}

CrossingGreedy::CrossingGreedy(const PointConfig& cfg, const Triangulation& start, const Triangulation& target,
                               TieRule rule)
    : cfg_(&cfg), target_(target), mesh_(cfg, start), rule_(rule), cache_(cfg.arc_count(), -1) {
    require_triangulation(cfg, start, "start");
    require_triangulation(cfg, target, "target");
    target.for_each([&](int id) {
        if (!cfg.is_boundary_arc(id)) target_ids_.push_back(id);
    });
    start.for_each([&](int id) { total_ += arc_crossings(id); });
}

int CrossingGreedy::arc_crossings(int id) {
    if (cache_[id] >= 0) return cache_[id];
    int c = 0;
    if (!cfg_->is_boundary_arc(id))
        for (int t : target_ids_)
            if (cfg_->crosses(id, t)) ++c;
    return cache_[id] = c;
}

GreedyStep CrossingGreedy::choose() {
    if (done()) throw PreconditionError("greedy step requested at the target");
    GreedyStep best;
    bool have = false;
    auto consider = [&](int id) {
        if (cfg_->is_boundary_arc(id)) return;
        int before = arc_crossings(id);
        if (before == 0) return;
        auto f = mesh_.flip_info(id);
        if (!f) return;
        int dec = before - arc_crossings(f->inserted);
        if (dec <= 0) return;
        bool better = !have || dec > best.decrease;
        if (have && dec == best.decrease) {
            if (rule_ == TieRule::LexRemoved) better = f->removed < best.flip.removed;
            else if (rule_ == TieRule::LexInserted) better = f->inserted < best.flip.inserted;
        }
        if (better) {
            best.flip = *f;
            best.decrease = dec;
            have = true;
        }
    };
    if (rule_ == TieRule::FirstFound) {
        // vertex order, then counterclockwise around each vertex
        std::vector<char> seen(cfg_->arc_count(), 0);
        for (int v = 0; v < cfg_->size(); ++v)
            for (int u : mesh_.neighbors(v)) {
                int id = cfg_->arc_id(u, v);
                if (seen[id]) continue;
                seen[id] = 1;
                consider(id);
            }
    } else {
        mesh_.triangulation().for_each(consider);
    }
    if (!have) throw InvariantError("no flip decreases the crossing number");
    return best;
}

GreedyStep CrossingGreedy::step() {
    GreedyStep s = choose();
    mesh_.flip(s.flip.removed);
    total_ -= s.decrease;
    return s;
}

GreedyStep greedy_step(const PointConfig& cfg, const Triangulation& t, const Triangulation& target, TieRule rule) {
    CrossingGreedy g(cfg, t, target, rule);
    return g.choose();
}

namespace {

template <class F>
void run_greedy(const PointConfig& cfg, const Triangulation& start, const Triangulation& target, TieRule rule, F&& f) {
    CrossingGreedy g(cfg, start, target, rule);
    const long long budget = static_cast<long long>(cfg.size()) * 3 * cfg.size();
    long long steps = 0;
    while (!g.done()) {
        if (++steps > budget) throw InvariantError("greedy step budget exceeded");
        f(g.step(), g.current());
    }
    if (!(g.current() == target)) throw InvariantError("zero crossings but target not reached");
}

}  // namespace

FlipPath greedy_path(const PointConfig& cfg, const Triangulation& start, const Triangulation& target, TieRule rule) {
    FlipPath p;
    p.snapshots.push_back(start);
    run_greedy(cfg, start, target, rule, [&](const GreedyStep& s, const Triangulation& cur) {
        p.flips.push_back(s.flip);
        p.snapshots.push_back(cur);
    });
    return p;
}

int greedy_length(const PointConfig& cfg, const Triangulation& start, const Triangulation& target, TieRule rule,
                  std::vector<int>* removed) {
    int len = 0;
    run_greedy(cfg, start, target, rule, [&](const GreedyStep& s, const Triangulation&) {
        ++len;
        if (removed) removed->push_back(s.flip.removed);
    });
    return len;
}

}  // namespace flipgraph
