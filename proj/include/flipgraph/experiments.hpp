#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flipgraph/heuristics.hpp"

namespace flipgraph {

struct Report {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, bool>> checks;
    bool truncated = false;
    double runtime_sec = 0.0;
};

std::string to_csv(const Report& r);
std::string to_json(const Report& r);
std::string format_ratio(double v);

Report run_enumerate(const PointConfig& cfg, const Limits& lim = {});
Report run_distance(const PointConfig& cfg, const Triangulation& t1, const Triangulation& t2, const Frozen& frozen,
                    const Limits& lim = {});
Report run_diameter(const PointConfig& cfg, const Limits& lim = {});
Report run_heuristic(const PointConfig& cfg, const Triangulation& t1, const Triangulation& t2, TieRule rule);

struct FlagAuditOptions {
    bool all_pairs = true;
    int samples = 0;  // random pairs when not all_pairs
    std::uint64_t seed = 0;
    std::uint64_t max_paths = 1'000'000;  // geodesics enumerated per pair
    Limits limits;
};

struct FlagAuditSummary {
    long long pairs = 0;
    long long geodesics = 0;
    long long flag_failures = 0;
    long long triangle_failures = 0;
    bool truncated = false;
};

// Every geodesic of each pair, or one uniform geodesic per sampled pair.
FlagAuditSummary flag_audit(const PointConfig& cfg, const FlagAuditOptions& opt);
Report run_flag_audit(const PointConfig& cfg, const FlagAuditOptions& opt);

struct ConvexityRow {
    int eps = -1;
    long long pairs = 0;
    long long violations = 0;
    int max_gap = 0;
};

// Constrained vs unconstrained distance for every pair of triangulations
// containing eps (every interior arc when eps is empty).
std::vector<ConvexityRow> convexity_audit(const PointConfig& cfg, std::optional<int> eps, const Limits& lim = {});
Report run_convexity_audit(const PointConfig& cfg, std::optional<int> eps, const Limits& lim = {});
// Single pair through eps with a node cap; reports cap exhaustion as a finding.
Report run_convexity_pair(const PointConfig& cfg, const Triangulation& t1, const Triangulation& t2, int eps,
                          std::optional<int> known_upper_bound, const Limits& lim);

struct ProjectionLawSummary {
    long long arc_checks = 0, arc_violations = 0;
    long long region_checks = 0, region_violations = 0;
    long long path_checks = 0, path_violations = 0;
    long long violations() const { return arc_violations + region_violations + path_violations; }
};

// Every flip-graph edge against every (eps, x) arc projection and every
// (eps, side, fixed_inner, x) region projection; plus random walks per
// projector for non-expansion and endpoints. Boundary-only configurations.
ProjectionLawSummary projection_law_audit(const PointConfig& cfg, int walks_per_projector = 4, int walk_length = 12,
                                          std::uint64_t seed = 0, const Limits& lim = {});

struct RatioRow {
    int m = 0, n = 0, points = 0, d_formula = 0, h = 0;
    double ratio = 0, bound = 0;
    TieRule rule = TieRule::LexRemoved;
    int symmetric_difference = 0;
    int a_prefix = 0;  // leading greedy flips removing an A_f or A_p arc
};

std::vector<RatioRow> ratio_sweep(const std::vector<int>& ms, const std::vector<TieRule>& rules);
Report run_ratio(const std::vector<int>& ms, const std::vector<TieRule>& rules);

// Writes config.txt, t_minus.txt, t_plus.txt, labels.txt (and path.txt,
// eta.txt for family 6) into dir.
Report run_construct(int family, int n, int m, std::optional<int> flats_kept, const std::string& dir);

}  // namespace flipgraph
