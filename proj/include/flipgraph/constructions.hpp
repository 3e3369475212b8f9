#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flipgraph/flip_graph.hpp"

namespace flipgraph {

using Labels = std::map<std::string, int>;

// Triangulation of a sub-polygon: a comb at a labeled apex, or explicit diagonals.
struct InnerChoice {
    std::string comb_apex;
    std::vector<std::pair<std::string, std::string>> diagonals;

    static InnerChoice comb_at(std::string apex) { return {std::move(apex), {}}; }
    static InnerChoice explicit_arcs(std::vector<std::pair<std::string, std::string>> d) { return {"", std::move(d)}; }
};

// Counterclockwise labels o, d, d1..dn, e, e1..em, f, f1..f(m+1), g, g1..gm,
// h, h1..hn, p. T^- combs Sigma_d at o, contains (o,e), (e,p), (f,p), (f,h),
// the chosen triangulations of Sigma_e = (e..f, p) and Sigma_h = (f, h..p),
// and the zigzag of Sigma_f = (f..h) starting at f(m+1) away from g.
// T^+ is the image under the reflection fixing o.
struct Family8Instance {
    int n = 0, m = 0;
    PointConfig config;
    Triangulation t_minus, t_plus;
    Labels labels;

    int at(const std::string& label) const;
    int arc(const std::string& u, const std::string& v) const;
    int mirror(int v) const { return (config.size() - v) % config.size(); }
    // Upper bound 2n+6m+8 through the comb at o.
    int distance_formula() const { return 2 * n + 6 * m + 8; }
};

Family8Instance build_family8(int n, int m, const InnerChoice& inner_e = InnerChoice::comb_at("p"),
                              const InnerChoice& inner_h = InnerChoice::comb_at("f"));

struct ASets {
    std::vector<int> a_f;  // arcs f-h_i
    std::vector<int> a_p;  // arcs p-e_i
};
ASets a_sets(const Family8Instance& inst, const Triangulation& t);

// Counterclockwise labels o, a, b, c, d, d1..dn, e, e1..em, f, f1..f(m+1), g,
// g1..gm, h, h1..hn, p, q, r, s with b, r flat (midpoints of a-c and q-s):
// 2n+3m+14 boundary points. eta = (a, s) lies in T^- and T^+.
struct Family6Instance {
    int n = 0, m = 0;
    PointConfig config;
    Triangulation t_minus, t_plus;
    int eta = -1;
    Labels labels;
    // First half ends at a reflection-symmetric triangulation; the second half
    // is the mirrored first half, reversed.
    FlipPath first_half, second_half;

    int at(const std::string& label) const;
    int arc(const std::string& u, const std::string& v) const;
    int mirror(int v) const { return (config.size() - v) % config.size(); }
    int half_length_formula() const { return n + 3 * m + 12; }
    int upper_bound() const { return 2 * n + 6 * m + 24; }
    FlipPath full_path() const;
};

Family6Instance build_family6(int n, int m);

// Image of t under a vertex map into another (or the same) configuration.
Triangulation map_triangulation(const PointConfig& from, const PointConfig& to, const Triangulation& t,
                                const std::vector<int>& vmap);
// Reflection k -> -k mod N of a boundary-only configuration.
std::vector<int> reflection_map(const PointConfig& cfg);

struct PuncturedInstance {
    PointConfig config;
    Triangulation t_minus, t_plus;
    int eta = -1;
    std::vector<int> vertex_map;      // family6 index -> new index
    std::vector<int> arc_map;         // family6 arc id -> new arc id
    std::vector<int> new_hull_edges;  // arcs present in every triangulation of the new config
    int punctures = 0;

    Triangulation transport(const Triangulation& t) const;
};

// Moves 2 - flats_kept of the flat points b, r slightly inwards; verifies the
// valid-arc and crossing correspondence. Throws ResourceError when no
// perturbation within budget works.
PuncturedInstance perturb_flats_to_punctures(const Family6Instance& inst, int flats_kept);

}  // namespace flipgraph
