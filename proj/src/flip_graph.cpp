#include "flipgraph/flip_graph.hpp"

#include <algorithm>
#include <limits>

#include "flipgraph/errors.hpp"

namespace flipgraph {

namespace {

int single_difference(const Triangulation& a, const Triangulation& b) {
    int found = -1;
    for (std::size_t w = 0; w < a.words().size(); ++w) {
        std::uint64_t d = a.words()[w] & ~b.words()[w];
        while (d) {
            if (found >= 0) return -2;
            found = static_cast<int>(w * 64 + __builtin_ctzll(d));
            d &= d - 1;
        }
    }
    return found;
}

void check_limit(std::size_t n, const Limits& lim) {
    if (n > lim.max_nodes) throw ResourceError("node cap of " + std::to_string(lim.max_nodes) + " exceeded");
}

}  // namespace

FlipPath make_path(const PointConfig& cfg, const std::vector<Triangulation>& snapshots) {
    FlipPath p;
    p.snapshots = snapshots;
    for (std::size_t i = 0; i + 1 < snapshots.size(); ++i) {
        int r = single_difference(snapshots[i], snapshots[i + 1]);
        int s = single_difference(snapshots[i + 1], snapshots[i]);
        if (r < 0 || s < 0) throw PreconditionError("step " + std::to_string(i) + " is not a single flip");
        auto f = Mesh(cfg, snapshots[i]).flip_info(r);
        if (!f || f->inserted != s) throw PreconditionError("step " + std::to_string(i) + " is not a flip");
        p.flips.push_back(*f);
    }
    return p;
}

FlipPath path_from_removals(const PointConfig& cfg, const Triangulation& start, const std::vector<int>& removed) {
    FlipPath p;
    Mesh m(cfg, start);
    p.snapshots.push_back(start);
    for (int id : removed) {
        p.flips.push_back(m.flip(id));
        p.snapshots.push_back(m.triangulation());
    }
    return p;
}

FlipPath reversed(const FlipPath& p) {
    FlipPath r;
    r.snapshots.assign(p.snapshots.rbegin(), p.snapshots.rend());
    for (auto it = p.flips.rbegin(); it != p.flips.rend(); ++it) {
        FlipResult f;
        f.removed = it->inserted;
        f.inserted = it->removed;
        f.quad[0] = it->quad[1];
        f.quad[1] = it->quad[2];
        f.quad[2] = it->quad[3];
        f.quad[3] = it->quad[0];
        r.flips.push_back(f);
    }
    return r;
}

bool is_valid_path(const PointConfig& cfg, const FlipPath& p) {
    if (p.snapshots.empty() || p.flips.size() + 1 != p.snapshots.size()) return false;
    for (const auto& t : p.snapshots)
        if (!is_triangulation(cfg, t)) return false;
    try {
        FlipPath q = make_path(cfg, p.snapshots);
        for (std::size_t i = 0; i < q.flips.size(); ++i)
            if (q.flips[i].removed != p.flips[i].removed || q.flips[i].inserted != p.flips[i].inserted) return false;
    } catch (const PreconditionError&) {
        return false;
    }
    return true;
}

std::vector<char> frozen_mask(const PointConfig& cfg, const Frozen& frozen) {
    std::vector<char> mask(cfg.arc_count(), 0);
    for (int id : frozen) {
        if (id < 0 || id >= cfg.arc_count()) throw PreconditionError("frozen arc id out of range");
        mask[id] = 1;
    }
    return mask;
}

void for_each_flip(const PointConfig& cfg, const Triangulation& t, const std::vector<char>& frozen_mask,
                   const std::function<void(const Triangulation&, const FlipResult&)>& f) {
    Mesh m(cfg, t);
    Triangulation next = t;
    t.for_each([&](int id) {
        if (cfg.is_boundary_arc(id) || (!frozen_mask.empty() && frozen_mask[id])) return;
        auto r = m.flip_info(id);
        if (!r) return;
        next.erase(r->removed);
        next.insert(r->inserted);
        f(next, *r);
        next.erase(r->inserted);
        next.insert(r->removed);
    });
}

std::vector<Triangulation> reachable_set(const PointConfig& cfg, const Triangulation& start, const Limits& lim) {
    require_triangulation(cfg, start, "start");
    std::unordered_map<Triangulation, int, TriangulationHash> seen;
    std::vector<Triangulation> order{start};
    seen.emplace(start, 0);
    std::vector<char> none;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Triangulation cur = order[i];
        for_each_flip(cfg, cur, none, [&](const Triangulation& nb, const FlipResult&) {
            if (seen.emplace(nb, static_cast<int>(order.size())).second) {
                order.push_back(nb);
                check_limit(order.size(), lim);
            }
        });
    }
    return order;
}

FlipGraph FlipGraph::build(const PointConfig& cfg, const Triangulation& start, const Limits& lim) {
    FlipGraph g;
    g.nodes_ = reachable_set(cfg, start, lim);
    g.index_.reserve(g.nodes_.size() * 2);
    for (std::size_t i = 0; i < g.nodes_.size(); ++i) g.index_.emplace(g.nodes_[i], static_cast<int>(i));
    g.offset_.push_back(0);
    std::vector<char> none;
    for (std::size_t i = 0; i < g.nodes_.size(); ++i) {
        for_each_flip(cfg, g.nodes_[i], none, [&](const Triangulation& nb, const FlipResult& f) {
            g.target_.push_back(g.index_.at(nb));
            g.removed_.push_back(f.removed);
        });
        g.offset_.push_back(static_cast<int>(g.target_.size()));
    }
    return g;
}

int FlipGraph::find(const Triangulation& t) const {
    auto it = index_.find(t);
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> FlipGraph::bfs(int source, const std::vector<char>* frozen) const {
    std::vector<int> dist(nodes_.size(), -1);
    std::vector<int> queue{source};
    dist[source] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        for (int k = offset_[u]; k < offset_[u + 1]; ++k) {
            if (frozen && (*frozen)[removed_[k]]) continue;
            int v = target_[k];
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

namespace {

void require_frozen(const Triangulation& t, const Frozen& frozen, const char* what) {
    for (int id : frozen)
        if (!t.contains(id)) throw PreconditionError(std::string(what) + " does not contain the constraint set");
}

}  // namespace

int distance(const PointConfig& cfg, const Triangulation& t1, const Triangulation& t2, const Frozen& frozen,
             const Limits& lim) {
    require_triangulation(cfg, t1, "source");
    require_triangulation(cfg, t2, "target");
    require_frozen(t1, frozen, "source");
    require_frozen(t2, frozen, "target");
    if (t1 == t2) return 0;
    auto mask = frozen_mask(cfg, frozen);
    using Map = std::unordered_map<Triangulation, int, TriangulationHash>;
    Map seen[2];
    std::vector<Triangulation> frontier[2] = {{t1}, {t2}};
    seen[0].emplace(t1, 0);
    seen[1].emplace(t2, 0);
    int depth[2] = {0, 0};
    while (!frontier[0].empty() && !frontier[1].empty()) {
        int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        Map& own = seen[s];
        const Map& other = seen[1 - s];
        int best = std::numeric_limits<int>::max();
        std::vector<Triangulation> next;
        for (const auto& u : frontier[s]) {
            for_each_flip(cfg, u, mask, [&](const Triangulation& v, const FlipResult&) {
                auto it = other.find(v);
                if (it != other.end()) best = std::min(best, depth[s] + 1 + it->second);
                if (own.emplace(v, depth[s] + 1).second) next.push_back(v);
            });
        }
        check_limit(seen[0].size() + seen[1].size(), lim);
        if (best != std::numeric_limits<int>::max()) return best;
        frontier[s] = std::move(next);
        ++depth[s];
    }
    return -1;
}

GeodesicDag geodesic_dag(const PointConfig& cfg, const Triangulation& t1, const Triangulation& t2,
                         const Frozen& frozen, const Limits& lim) {
    require_triangulation(cfg, t1, "source");
    require_triangulation(cfg, t2, "target");
    require_frozen(t1, frozen, "source");
    require_frozen(t2, frozen, "target");
    auto mask = frozen_mask(cfg, frozen);
    std::unordered_map<Triangulation, int, TriangulationHash> dist;
    dist.emplace(t1, 0);
    std::vector<Triangulation> frontier{t1};
    int k = 0;
    while (!dist.count(t2)) {
        if (frontier.empty()) throw PreconditionError("target unreachable");
        std::vector<Triangulation> next;
        for (const auto& u : frontier)
            for_each_flip(cfg, u, mask, [&](const Triangulation& v, const FlipResult&) {
                if (dist.emplace(v, k + 1).second) next.push_back(v);
            });
        check_limit(dist.size(), lim);
        frontier = std::move(next);
        ++k;
    }
    GeodesicDag dag;
    dag.layers.assign(k + 1, {});
    dag.succ.assign(k + 1, {});
    dag.layers[k] = {t2};
    dag.succ[k] = {{}};
    for (int j = k - 1; j >= 0; --j) {
        std::unordered_map<Triangulation, int, TriangulationHash> idx;
        for (int iu = 0; iu < static_cast<int>(dag.layers[j + 1].size()); ++iu) {
            for_each_flip(cfg, dag.layers[j + 1][iu], mask, [&](const Triangulation& v, const FlipResult&) {
                auto it = dist.find(v);
                if (it == dist.end() || it->second != j) return;
                auto [pos, added] = idx.emplace(v, static_cast<int>(dag.layers[j].size()));
                if (added) {
                    dag.layers[j].push_back(v);
                    dag.succ[j].emplace_back();
                }
                dag.succ[j][pos->second].push_back(iu);
            });
        }
    }
    dag.paths_to_end.assign(k + 1, {});
    dag.paths_to_end[k] = {1.0};
    for (int j = k - 1; j >= 0; --j) {
        dag.paths_to_end[j].assign(dag.layers[j].size(), 0.0);
        for (std::size_t i = 0; i < dag.layers[j].size(); ++i)
            for (int s : dag.succ[j][i]) dag.paths_to_end[j][i] += dag.paths_to_end[j + 1][s];
    }
    return dag;
}

EnumerationStats for_each_geodesic(const PointConfig& cfg, const GeodesicDag& dag, std::uint64_t cap,
                                   const std::function<void(const FlipPath&)>& f) {
    EnumerationStats st;
    const int k = dag.length();
    std::vector<int> choice(k + 1, 0), node(k + 1, 0);
    std::vector<Triangulation> snaps(k + 1);
    snaps[0] = dag.layers[0][0];
    // iterative DFS over successor choices
    int depth = 0;
    std::vector<std::size_t> next(k + 1, 0);
    while (true) {
        if (depth == k) {
            if (st.produced >= cap) {
                st.truncated = true;
                return st;
            }
            f(make_path(cfg, snaps));
            ++st.produced;
            --depth;
            if (depth < 0) return st;
            continue;
        }
        const auto& s = dag.succ[depth][node[depth]];
        if (next[depth] >= s.size()) {
            next[depth] = 0;
            if (depth == 0) return st;
            --depth;
            continue;
        }
        int child = s[next[depth]++];
        node[depth + 1] = child;
        snaps[depth + 1] = dag.layers[depth + 1][child];
        ++depth;
    }
}

std::vector<FlipPath> enumerate_geodesics(const PointConfig& cfg, const GeodesicDag& dag, std::uint64_t cap,
                                          bool* truncated) {
    std::vector<FlipPath> out;
    auto st = for_each_geodesic(cfg, dag, cap, [&](const FlipPath& p) { out.push_back(p); });
    if (truncated) *truncated = st.truncated;
    return out;
}

FlipPath sample_geodesic(const PointConfig& cfg, const GeodesicDag& dag, std::mt19937_64& rng) {
    std::vector<Triangulation> snaps{dag.layers[0][0]};
    int cur = 0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int j = 0; j < dag.length(); ++j) {
        const auto& s = dag.succ[j][cur];
        double r = unit(rng) * dag.paths_to_end[j][cur];
        int pick = s.back();
        for (int c : s) {
            r -= dag.paths_to_end[j + 1][c];
            if (r < 0) {
                pick = c;
                break;
            }
        }
        cur = pick;
        snaps.push_back(dag.layers[j + 1][cur]);
    }
    return make_path(cfg, snaps);
}

DiameterResult diameter(const PointConfig& cfg, const Limits& lim, bool use_symmetry) {
    return diameter(cfg, FlipGraph::build(cfg, greedy_triangulation(cfg), lim), use_symmetry);
}

DiameterResult diameter(const PointConfig& cfg, const FlipGraph& g, bool use_symmetry) {
    const int n = g.size();
    std::vector<int> sources;
    if (use_symmetry && cfg.is_convex_polygon()) {
        const int b = cfg.boundary_size();
        std::vector<std::vector<int>> perms;
        for (int refl = 0; refl < 2; ++refl)
            for (int k = 0; k < b; ++k) {
                std::vector<int> p(cfg.arc_count());
                for (int id = 0; id < cfg.arc_count(); ++id) {
                    const Arc& e = cfg.arc(id);
                    auto map = [&](int v) { return refl ? ((k - v) % b + b) % b : (v + k) % b; };
                    p[id] = cfg.arc_id(map(e.a), map(e.b));
                }
                perms.push_back(std::move(p));
            }
        std::vector<char> marked(n, 0);
        for (int i = 0; i < n; ++i) {
            if (marked[i]) continue;
            sources.push_back(i);
            for (const auto& p : perms) {
                Triangulation img(cfg.arc_count());
                g.node(i).for_each([&](int id) { img.insert(p[id]); });
                int j = g.find(img);
                if (j < 0) throw InvariantError("symmetry image outside the flip-graph");
                marked[j] = 1;
            }
        }
    } else {
        for (int i = 0; i < n; ++i) sources.push_back(i);
    }
    DiameterResult res;
    res.nodes = n;
    res.sources = static_cast<int>(sources.size());
    res.from = res.to = g.node(0);
    std::vector<int> dist(n), queue(n);
    for (int s : sources) {
        std::fill(dist.begin(), dist.end(), -1);
        int head = 0, tail = 0;
        queue[tail++] = s;
        dist[s] = 0;
        while (head < tail) {
            int u = queue[head++];
            for (int k = g.begin(u); k < g.end(u); ++k) {
                int v = g.target(k);
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue[tail++] = v;
                }
            }
        }
        int far = queue[tail - 1];
        if (dist[far] > res.diameter) {
            res.diameter = dist[far];
            res.from = g.node(s);
            res.to = g.node(far);
        }
    }
    return res;
}

FlipPath path_to_comb(const PointConfig& cfg, const Triangulation& t, int x) {
    if (x < 0 || x >= cfg.boundary_size()) throw PreconditionError("comb apex must be a boundary vertex");
    Mesh m(cfg, t);
    FlipPath p;
    p.snapshots.push_back(t);
    while (true) {
        const auto& l = m.neighbors(x);
        int target = -1;
        for (std::size_t i = 0; i + 1 < l.size(); ++i) {
            int id = cfg.arc_id(l[i], l[i + 1]);
            if (id >= 0 && !cfg.is_boundary_arc(id)) {
                target = id;
                break;
            }
        }
        if (target < 0) break;
        auto f = m.flip_info(target);
        if (!f || !cfg.arc(f->inserted).has(x))
            throw ObstructionError("comb at " + std::to_string(x) + " blocked by a flat vertex");
        m.flip(target);
        p.flips.push_back(*f);
        p.snapshots.push_back(m.triangulation());
    }
    return p;
}

FlipPath comb_upper_bound_path(const PointConfig& cfg, const Triangulation& t1, const Triangulation& t2, int x) {
    require_triangulation(cfg, t1, "source");
    require_triangulation(cfg, t2, "target");
    FlipPath a = path_to_comb(cfg, t1, x);
    FlipPath b = reversed(path_to_comb(cfg, t2, x));
    if (!(a.snapshots.back() == b.snapshots.front())) throw InvariantError("comb paths end at different triangulations");
    for (std::size_t i = 1; i < b.snapshots.size(); ++i) a.snapshots.push_back(b.snapshots[i]);
    for (const auto& f : b.flips) a.flips.push_back(f);
    return a;
}

ContractedPath contract_path(const PointConfig& cfg, const FlipPath& path, int x, int y) {
    int id = cfg.arc_id(x, y);
    if (id < 0 || !cfg.is_boundary_arc(id)) throw PreconditionError("contraction needs a boundary edge");
    ContractedPath out{contract_config(cfg, y), {}, contraction_map(cfg, x, y), 0};
    std::vector<Triangulation> snaps;
    for (const auto& t : path.snapshots) {
        Triangulation c = contract_triangulation(cfg, out.config, out.vertex_map, t, x, y);
        if (snaps.empty() || !(snaps.back() == c)) snaps.push_back(std::move(c));
    }
    for (const auto& f : path.flips)
        for (int s = 0; s < 4; ++s)
            if (Arc(f.quad[s], f.quad[(s + 1) % 4]) == Arc(x, y)) ++out.collapsed;
    out.path = make_path(out.config, snaps);
    return out;
}

}  // namespace flipgraph
