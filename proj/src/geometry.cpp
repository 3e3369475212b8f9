#include "flipgraph/geometry.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

#include "flipgraph/errors.hpp"

namespace flipgraph {

namespace {

constexpr int kCrossTableLimit = 4096;

using i128 = __int128;

}  // namespace

int orientation(const Point& p, const Point& q, const Point& r) {
    i128 v = static_cast<i128>(q.x - p.x) * (r.y - p.y) - static_cast<i128>(q.y - p.y) * (r.x - p.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool in_open_segment(const Point& p, const Point& q, const Point& r) {
    if (orientation(p, q, r) != 0) return false;
    i128 d1 = static_cast<i128>(r.x - p.x) * (q.x - p.x) + static_cast<i128>(r.y - p.y) * (q.y - p.y);
    i128 len = static_cast<i128>(q.x - p.x) * (q.x - p.x) + static_cast<i128>(q.y - p.y) * (q.y - p.y);
    return d1 > 0 && d1 < len;
}

const char* kind_name(PointKind k) {
    switch (k) {
        case PointKind::Corner: return "corner";
        case PointKind::Flat: return "flat";
        case PointKind::Puncture: return "puncture";
    }
    return "?";
}

PointConfig::PointConfig(std::vector<Point> points, ConfigOptions opt) : pts_(std::move(points)) {
    boundary_ = 0;
    while (boundary_ < size() && pts_[boundary_].kind != PointKind::Puncture) ++boundary_;
    for (int i = boundary_; i < size(); ++i)
        if (pts_[i].kind != PointKind::Puncture)
            throw ConfigError("boundary point listed after a puncture at index " + std::to_string(i));
    validate(opt);
    build_arcs();
}

void PointConfig::validate(const ConfigOptions& opt) const {
    std::vector<int> corners;
    for (int i = 0; i < boundary_; ++i)
        if (pts_[i].kind == PointKind::Corner) corners.push_back(i);
    if (corners.size() < 3) throw ConfigError("need at least three corners");
    const int c = static_cast<int>(corners.size());
    for (int k = 0; k < c; ++k) {
        const Point& p = pts_[corners[k]];
        const Point& q = pts_[corners[(k + 1) % c]];
        for (int j = 0; j < c; ++j) {
            if (j == k || j == (k + 1) % c) continue;
            if (orientation(p, q, pts_[corners[j]]) <= 0)
                throw ConfigError("non-convex boundary at corner " + std::to_string(corners[k]));
        }
    }
    for (int i = 0; i < boundary_; ++i) {
        if (pts_[i].kind != PointKind::Flat) continue;
        if (!in_open_segment(pts_[prev_boundary(i)], pts_[next_boundary(i)], pts_[i]))
            throw ConfigError("flat point " + std::to_string(i) + " not between its neighbors");
    }
    for (int i = boundary_; i < size(); ++i) {
        for (int k = 0; k < c; ++k)
            if (orientation(pts_[corners[k]], pts_[corners[(k + 1) % c]], pts_[i]) <= 0)
                throw ConfigError("puncture " + std::to_string(i) + " outside the hull");
        for (int u = 0; u < size(); ++u) {
            if (u == i) continue;
            if (pts_[u].x == pts_[i].x && pts_[u].y == pts_[i].y)
                throw ConfigError("duplicate point " + std::to_string(i));
            for (int v = u + 1; v < size() && opt.general_position; ++v) {
                if (v == i) continue;
                if (in_open_segment(pts_[u], pts_[v], pts_[i]))
                    throw ConfigError("puncture " + std::to_string(i) + " on a segment between two points");
            }
        }
    }
}

void PointConfig::build_arcs() {
    const int n = size();
    std::vector<int> blockers;
    for (int i = 0; i < n; ++i)
        if (pts_[i].kind != PointKind::Corner) blockers.push_back(i);
    index_.assign(static_cast<std::size_t>(n) * n, -1);
    arcs_.clear();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool ok = true;
            for (int w : blockers) {
                if (w != u && w != v && in_open_segment(pts_[u], pts_[v], pts_[w])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            int id = static_cast<int>(arcs_.size());
            arcs_.emplace_back(u, v);
            index_[static_cast<std::size_t>(u) * n + v] = id;
            index_[static_cast<std::size_t>(v) * n + u] = id;
        }
    }
    boundary_arc_.assign(arcs_.size(), 0);
    boundary_ids_.clear();
    for (int i = 0; i < boundary_; ++i) {
        int id = arc_id(i, next_boundary(i));
        if (id < 0) throw ConfigError("boundary edge is not a valid arc");
        boundary_arc_[id] = 1;
        boundary_ids_.push_back(id);
    }
    cross_.clear();
    cross_words_ = 0;
    if (arc_count() <= kCrossTableLimit) {
        const int a = arc_count();
        cross_words_ = (a + 63) / 64;
        cross_.assign(static_cast<std::size_t>(a) * cross_words_, 0);
        for (int i = 0; i < a; ++i)
            for (int j = i + 1; j < a; ++j)
                if (crosses_segment(i, arcs_[j].a, arcs_[j].b)) {
                    cross_[static_cast<std::size_t>(i) * cross_words_ + j / 64] |= 1ULL << (j % 64);
                    cross_[static_cast<std::size_t>(j) * cross_words_ + i / 64] |= 1ULL << (i % 64);
                }
    }
}

int PointConfig::arc_id(int u, int v) const {
    if (u < 0 || v < 0 || u >= size() || v >= size() || u == v) return -1;
    return index_[static_cast<std::size_t>(u) * size() + v];
}

bool PointConfig::crosses_segment(int id, int u, int v) const {
    const Arc& e = arcs_[id];
    if (e.has(u) || e.has(v)) return false;
    const Point &p = pts_[e.a], &q = pts_[e.b], &r = pts_[u], &s = pts_[v];
    int o1 = orientation(p, q, r), o2 = orientation(p, q, s);
    int o3 = orientation(r, s, p), o4 = orientation(r, s, q);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool PointConfig::crosses(int id1, int id2) const {
    if (cross_words_ > 0)
        return (cross_[static_cast<std::size_t>(id1) * cross_words_ + id2 / 64] >> (id2 % 64)) & 1ULL;
    return crosses_segment(id1, arcs_[id2].a, arcs_[id2].b);
}

bool PointConfig::has_flats() const {
    for (int i = 0; i < boundary_; ++i)
        if (pts_[i].kind == PointKind::Flat) return true;
    return false;
}

bool PointConfig::make_triangle(int u, int v, int w, Triangle& out) const {
    if (u == v || v == w || u == w) return false;
    if (arc_id(u, v) < 0 || arc_id(v, w) < 0 || arc_id(u, w) < 0) return false;
    int o = orientation(pts_[u], pts_[v], pts_[w]);
    if (o == 0) return false;
    if (o < 0) std::swap(v, w);
    for (int k = 0; k < size(); ++k) {
        if (k == u || k == v || k == w) continue;
        if (orientation(pts_[u], pts_[v], pts_[k]) > 0 && orientation(pts_[v], pts_[w], pts_[k]) > 0 &&
            orientation(pts_[w], pts_[u], pts_[k]) > 0)
            return false;
    }
    int t[3] = {u, v, w};
    int s = 0;
    for (int i = 1; i < 3; ++i)
        if (t[i] < t[s]) s = i;
    out.v[0] = t[s];
    out.v[1] = t[(s + 1) % 3];
    out.v[2] = t[(s + 2) % 3];
    return true;
}

std::vector<Point> circle_points(int n, double radius) {
    std::vector<Point> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        double t = 2.0 * std::numbers::pi * i / n;
        pts.push_back({std::llround(radius * std::cos(t)), std::llround(radius * std::sin(t)), PointKind::Corner});
    }
    return pts;
}

PointConfig convex_polygon(int n) {
    if (n < 3) throw ConfigError("polygon needs at least three corners");
    return PointConfig(circle_points(n, 1.0e7));
}

PointConfig parse_config(std::istream& in, ConfigOptions opt) {
    std::vector<Point> pts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string kind;
        if (!(ss >> kind)) continue;
        Point p;
        if (!(ss >> p.x >> p.y)) throw ParseError("line " + std::to_string(lineno) + ": expected `kind x y`");
        if (kind == "corner") p.kind = PointKind::Corner;
        else if (kind == "flat") p.kind = PointKind::Flat;
        else if (kind == "puncture") p.kind = PointKind::Puncture;
        else throw ParseError("line " + std::to_string(lineno) + ": unknown kind " + kind);
        pts.push_back(p);
    }
    return PointConfig(std::move(pts), opt);
}

PointConfig load_config(const std::string& path, ConfigOptions opt) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_config(in, opt);
}

std::string format_config(const PointConfig& cfg) {
    std::ostringstream os;
    for (const auto& p : cfg.points()) os << kind_name(p.kind) << ' ' << p.x << ' ' << p.y << '\n';
    return os.str();
}

}  // namespace flipgraph
