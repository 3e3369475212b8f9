#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flipgraph/flip_graph.hpp"

namespace flipgraph {

struct ArcOccurrence {
    int arc = -1;
    int birth = 0, death = 0;  // arc in T_i exactly for birth <= i <= death
};

struct TriangleOccurrence {
    Triangle tri;
    int birth = 0, death = 0;
    int edges[3] = {-1, -1, -1};  // arc occurrences of sides (v0v1, v1v2, v2v0)
};

struct Tetra {
    int time = 0;  // flip from T_{time-1} to T_time
    int quad[4] = {0, 0, 0, 0};
    int removed = -1, inserted = -1;
};

// Face of the complex: an arc or triangle occurrence.
struct OccRef {
    bool triangle = false;
    int index = -1;
};

struct Circle {
    Triangle tri;
    int occ[3] = {-1, -1, -1};  // arc occurrences of the sides (v0v1, v1v2, v2v0)
};

class BlowUpComplex {
public:
    BlowUpComplex(const PointConfig& cfg, const FlipPath& path);

    const PointConfig& config() const { return *cfg_; }
    const FlipPath& path() const { return path_; }
    const std::vector<ArcOccurrence>& arcs() const { return arcs_; }
    const std::vector<TriangleOccurrence>& triangles() const { return tris_; }
    const std::vector<Tetra>& tetras() const { return tetras_; }
    // Occurrence of arc id alive at time i, or -1.
    int occurrence_at(int arc, int time) const;
    const std::vector<int>& occurrences_of(int arc) const { return by_arc_[arc]; }
    // The six edge occurrences of the tetrahedron at index k (time k+1).
    std::vector<int> tetra_edges(int k) const;

    std::string dump() const;

private:
    const PointConfig* cfg_;
    FlipPath path_;
    std::vector<ArcOccurrence> arcs_;
    std::vector<TriangleOccurrence> tris_;
    std::vector<Tetra> tetras_;
    std::vector<std::vector<int>> by_arc_;
};

// Interiors of the projections overlap and f ends before g begins.
bool below(const BlowUpComplex& k, const OccRef& f, const OccRef& g);
inline bool arc_below(const BlowUpComplex& k, int f, int g) { return below(k, {false, f}, {false, g}); }

std::vector<Circle> circles3(const BlowUpComplex& k);
// Triangle occurrence whose edge occurrences are exactly the circle's.
std::optional<int> bounds_triangle(const BlowUpComplex& k, const Circle& c);
// Arc occurrence above one circle arc and below another.
std::optional<int> penetration_witness(const BlowUpComplex& k, const Circle& c);

struct FlagResult {
    bool pass = true;
    std::optional<Circle> counterexample;
};
FlagResult flag_check(const BlowUpComplex& k);

struct Theorem1Result {
    bool pass = true;
    std::optional<Triangle> counterexample;
};
// Throws PreconditionError unless the path is a geodesic.
Theorem1Result theorem1_check(const PointConfig& cfg, const FlipPath& geodesic, const Limits& lim = {});
// Same check without verifying geodesicity.
Theorem1Result theorem1_scan(const PointConfig& cfg, const FlipPath& path);

}  // namespace flipgraph
