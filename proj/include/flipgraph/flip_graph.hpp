#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <unordered_map>
#include <vector>

#include "flipgraph/triangulation.hpp"

namespace flipgraph {

// Sequence of triangulations, consecutive ones differing by one flip.
struct FlipPath {
    std::vector<Triangulation> snapshots;
    std::vector<FlipResult> flips;  // flips[i] turns snapshots[i] into snapshots[i+1]
    int length() const { return static_cast<int>(flips.size()); }
};

// Recomputes flips; throws PreconditionError when a step is not a flip.
FlipPath make_path(const PointConfig& cfg, const std::vector<Triangulation>& snapshots);
// Applies the listed arc removals in order.
FlipPath path_from_removals(const PointConfig& cfg, const Triangulation& start, const std::vector<int>& removed);
FlipPath reversed(const FlipPath& p);
bool is_valid_path(const PointConfig& cfg, const FlipPath& p);

struct Limits {
    std::size_t max_nodes = 20'000'000;
};

// Arc ids that may not be removed; empty means the whole flip-graph.
using Frozen = std::vector<int>;

// Calls f(neighbor, flip) for each flip of t that keeps the frozen arcs.
void for_each_flip(const PointConfig& cfg, const Triangulation& t, const std::vector<char>& frozen_mask,
                   const std::function<void(const Triangulation&, const FlipResult&)>& f);
std::vector<char> frozen_mask(const PointConfig& cfg, const Frozen& frozen);

// All triangulations reachable from start, in BFS order; throws ResourceError.
std::vector<Triangulation> reachable_set(const PointConfig& cfg, const Triangulation& start, const Limits& lim = {});

// Explicit flip-graph with compressed adjacency.
class FlipGraph {
public:
    static FlipGraph build(const PointConfig& cfg, const Triangulation& start, const Limits& lim = {});

    int size() const { return static_cast<int>(nodes_.size()); }
    const Triangulation& node(int i) const { return nodes_[i]; }
    int find(const Triangulation& t) const;
    // Neighbors j of i in [begin, end) with the arc removed when going i -> j.
    int begin(int i) const { return offset_[i]; }
    int end(int i) const { return offset_[i + 1]; }
    int target(int k) const { return target_[k]; }
    int removed(int k) const { return removed_[k]; }
    std::size_t edge_count() const { return target_.size() / 2; }

    // BFS distances from source; -1 for unreachable. Edges removing a frozen
    // arc are skipped and nodes missing a frozen arc are never entered.
    std::vector<int> bfs(int source, const std::vector<char>* frozen = nullptr) const;

private:
    std::vector<Triangulation> nodes_;
    std::unordered_map<Triangulation, int, TriangulationHash> index_;
    std::vector<int> offset_, target_, removed_;
};

// Exact flip distance inside the subgraph of triangulations containing frozen.
// Throws PreconditionError when an endpoint misses a frozen arc.
int distance(const PointConfig& cfg, const Triangulation& t1, const Triangulation& t2, const Frozen& frozen = {},
             const Limits& lim = {});

// All geodesics from first to last, layered by distance from first.
struct GeodesicDag {
    std::vector<std::vector<Triangulation>> layers;
    std::vector<std::vector<std::vector<int>>> succ;  // succ[i][j]: indices into layers[i+1]
    std::vector<std::vector<double>> paths_to_end;
    int length() const { return static_cast<int>(layers.size()) - 1; }
    double geodesic_count() const { return paths_to_end.empty() ? 0.0 : paths_to_end[0][0]; }
};

GeodesicDag geodesic_dag(const PointConfig& cfg, const Triangulation& t1, const Triangulation& t2,
                         const Frozen& frozen = {}, const Limits& lim = {});

struct EnumerationStats {
    std::uint64_t produced = 0;
    bool truncated = false;
};

// Visits geodesics in lexicographic order of node indices until cap.
EnumerationStats for_each_geodesic(const PointConfig& cfg, const GeodesicDag& dag, std::uint64_t cap,
                                   const std::function<void(const FlipPath&)>& f);
std::vector<FlipPath> enumerate_geodesics(const PointConfig& cfg, const GeodesicDag& dag,
                                          std::uint64_t cap = 1'000'000, bool* truncated = nullptr);
// Uniformly random geodesic.
FlipPath sample_geodesic(const PointConfig& cfg, const GeodesicDag& dag, std::mt19937_64& rng);

struct DiameterResult {
    int diameter = 0;
    Triangulation from, to;
    int nodes = 0;
    int sources = 0;  // BFS runs performed
};

// Exact diameter of the connected flip-graph; for convex polygons BFS runs
// only from one triangulation per dihedral orbit.
DiameterResult diameter(const PointConfig& cfg, const Limits& lim = {}, bool use_symmetry = true);
DiameterResult diameter(const PointConfig& cfg, const FlipGraph& g, bool use_symmetry = true);

// Path through the comb at boundary vertex x; its length is
// 2(N-1) - deg_T1(x) - deg_T2(x) when no flat vertex blocks the comb.
FlipPath comb_upper_bound_path(const PointConfig& cfg, const Triangulation& t1, const Triangulation& t2, int x);
// Flips of t towards the comb at x.
FlipPath path_to_comb(const PointConfig& cfg, const Triangulation& t, int x);

struct ContractedPath {
    PointConfig config;
    FlipPath path;
    std::vector<int> vertex_map;
    int collapsed = 0;  // flips whose quadrilateral has (x, y) as a side
};

// Contracts boundary edge (x, y) onto x in every snapshot and removes
// consecutive duplicates; throws ObstructionError like contract_edge.
ContractedPath contract_path(const PointConfig& cfg, const FlipPath& path, int x, int y);

}  // namespace flipgraph
