#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace flipgraph {

enum class PointKind { Corner, Flat, Puncture };

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    PointKind kind = PointKind::Corner;
};

// Unordered pair of point indices, stored with a < b.
struct Arc {
    int a = 0;
    int b = 0;
    Arc() = default;
    Arc(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}
    bool operator==(const Arc&) const = default;
    auto operator<=>(const Arc&) const = default;
    int other(int v) const { return v == a ? b : a; }
    bool has(int v) const { return v == a || v == b; }
};

// Three point indices in counterclockwise order, smallest first.
struct Triangle {
    int v[3] = {0, 0, 0};
    bool operator==(const Triangle&) const = default;
    auto operator<=>(const Triangle&) const = default;
    bool has(int p) const { return v[0] == p || v[1] == p || v[2] == p; }
};

// Sign of the cross product (q - p) x (r - p).
int orientation(const Point& p, const Point& q, const Point& r);

// True when r lies in the open segment pq.
bool in_open_segment(const Point& p, const Point& q, const Point& r);

struct ConfigOptions {
    // Reject punctures lying on a segment between two other points.
    bool general_position = true;
};

// A point set: boundary points first in counterclockwise order, then punctures.
class PointConfig {
public:
    PointConfig() = default;
    // Validates; throws ConfigError.
    explicit PointConfig(std::vector<Point> points, ConfigOptions opt = {});

    int size() const { return static_cast<int>(pts_.size()); }
    int boundary_size() const { return boundary_; }
    const Point& point(int i) const { return pts_[i]; }
    const std::vector<Point>& points() const { return pts_; }
    PointKind kind(int i) const { return pts_[i].kind; }
    bool is_boundary(int i) const { return i < boundary_; }

    int next_boundary(int i) const { return (i + 1) % boundary_; }
    int prev_boundary(int i) const { return (i + boundary_ - 1) % boundary_; }

    // Valid arcs in lexicographic order.
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const Arc& arc(int id) const { return arcs_[id]; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    // -1 when the segment uv is not a valid arc.
    int arc_id(int u, int v) const;
    int arc_id(const Arc& e) const { return arc_id(e.a, e.b); }
    bool is_valid_arc(int u, int v) const { return arc_id(u, v) >= 0; }
    bool is_boundary_arc(int id) const { return boundary_arc_[id]; }
    const std::vector<int>& boundary_arc_ids() const { return boundary_ids_; }

    // Open segments of two valid arcs intersect.
    bool crosses(int id1, int id2) const;
    bool crosses_segment(int id, int u, int v) const;

    // Triangulation size: 3N - 3 - B arcs, 2N - 2 - B triangles.
    int triangulation_arc_count() const { return 3 * size() - 3 - boundary_; }
    int triangle_count() const { return 2 * size() - 2 - boundary_; }

    bool has_flats() const;
    bool has_punctures() const { return boundary_ < size(); }
    // All boundary points are corners and there are no punctures.
    bool is_convex_polygon() const { return !has_flats() && !has_punctures(); }

    // Triangle with counterclockwise vertex order, validating that it is empty
    // and that all three sides are valid arcs; false otherwise.
    bool make_triangle(int u, int v, int w, Triangle& out) const;

private:
    void validate(const ConfigOptions& opt) const;
    void build_arcs();

    std::vector<Point> pts_;
    int boundary_ = 0;
    std::vector<Arc> arcs_;
    std::vector<int> index_;
    std::vector<char> boundary_arc_;
    std::vector<int> boundary_ids_;
    std::vector<std::uint64_t> cross_;  // row-major bit matrix when small
    int cross_words_ = 0;
};

// Regular convex n-gon with integer coordinates on a large circle.
PointConfig convex_polygon(int n);

// Integer coordinates on a circle, strictly convex, counterclockwise.
std::vector<Point> circle_points(int n, double radius);

PointConfig parse_config(std::istream& in, ConfigOptions opt = {});
PointConfig load_config(const std::string& path, ConfigOptions opt = {});
std::string format_config(const PointConfig& cfg);

const char* kind_name(PointKind k);

}  // namespace flipgraph
