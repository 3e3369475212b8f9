#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "flipgraph/flip_graph.hpp"

namespace flipgraph {

// Vertices (in counterclockwise order) of the union of the triangles of t
// whose interior meets the arc eps. Boundary-only configurations.
std::vector<int> crossed_region(const PointConfig& cfg, const Triangulation& t, int eps);

// Replaces the crossed region by its comb at x, an endpoint of eps.
Triangulation project_arc(const PointConfig& cfg, const Triangulation& t, int eps, int x);

// Pulls the part of the crossed region on each side of eps to one endpoint:
// by default the left side (of a->b, a < b) to a and the right side to b,
// switched on a side where a flat boundary neighbor of an endpoint lies.
Triangulation project_arc_two_sided(const PointConfig& cfg, const Triangulation& t, int eps);

// Closed half of the polygon cut off by eps, with an optional triangulation.
struct RegionSpec {
    int eps = -1;
    bool left = true;               // the half left of eps.a -> eps.b
    std::vector<int> fixed_inner;   // diagonal arc ids triangulating the half
    bool has_fixed_inner = false;
};

// Counterclockwise vertices of the half polygon.
std::vector<int> region_vertices(const PointConfig& cfg, const RegionSpec& r);
// Throws PreconditionError when fixed_inner does not triangulate the half.
void validate_region(const PointConfig& cfg, const RegionSpec& r);
// All triangulations of the half polygon, as diagonal id lists.
std::vector<std::vector<int>> region_triangulations(const PointConfig& cfg, const RegionSpec& r);

// Installs fixed_inner and combs the rest of the leaking region at x.
Triangulation project_region(const PointConfig& cfg, const Triangulation& t, const RegionSpec& r, int x);

using Projector = std::function<Triangulation(const Triangulation&)>;

// Projects each snapshot and removes consecutive duplicates.
FlipPath project_path(const PointConfig& cfg, const FlipPath& path, const Projector& proj);

// Predicted equality of projections of a flip: both exchanged arcs cross eps,
// or one crosses eps and the other is incident to x.
bool arc_projection_collapses(const PointConfig& cfg, const FlipResult& f, int eps, int x);
// Predicted equality for the region projection: both exchanged arcs meet the
// half polygon away from the endpoint y of eps other than x.
bool region_projection_collapses(const PointConfig& cfg, const FlipResult& f, const RegionSpec& r, int x);

}  // namespace flipgraph
