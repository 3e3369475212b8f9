#include "flipgraph/blowup.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "flipgraph/errors.hpp"

namespace flipgraph {

namespace {

int side(const PointConfig& cfg, const Triangle& t, int i) { return cfg.arc_id(t.v[i], t.v[(i + 1) % 3]); }

}  // namespace

BlowUpComplex::BlowUpComplex(const PointConfig& cfg, const FlipPath& path)
    : cfg_(&cfg), path_(path), by_arc_(cfg.arc_count()) {
    if (!is_valid_path(cfg, path)) throw PreconditionError("blow-up needs a valid flip path");
    const int k = path.length();
    std::vector<int> open(cfg.arc_count(), -1);
    auto start_arc = [&](int id, int t) {
        open[id] = static_cast<int>(arcs_.size());
        by_arc_[id].push_back(open[id]);
        arcs_.push_back({id, t, k});
    };
    path.snapshots[0].for_each([&](int id) { start_arc(id, 0); });
    std::map<Triangle, int> open_tri;
    auto start_tri = [&](const Triangle& tr, int t) {
        open_tri[tr] = static_cast<int>(tris_.size());
        tris_.push_back({tr, t, k, {-1, -1, -1}});
    };
    for (const Triangle& tr : triangles_of(cfg, path.snapshots[0])) start_tri(tr, 0);
    for (int i = 1; i <= k; ++i) {
        const FlipResult& f = path.flips[i - 1];
        arcs_[open[f.removed]].death = i - 1;
        open[f.removed] = -1;
        start_arc(f.inserted, i);
        Tetra te;
        te.time = i;
        std::copy(std::begin(f.quad), std::end(f.quad), te.quad);
        te.removed = f.removed;
        te.inserted = f.inserted;
        tetras_.push_back(te);
        // the two triangles on the removed diagonal die, two new ones are born
        const int* q = f.quad;
        Triangle old1, old2, new1, new2;
        if (!cfg.make_triangle(q[0], q[1], q[2], old1) || !cfg.make_triangle(q[0], q[2], q[3], old2) ||
            !cfg.make_triangle(q[1], q[2], q[3], new1) || !cfg.make_triangle(q[1], q[3], q[0], new2))
            throw InvariantError("flip quadrilateral does not split into empty triangles");
        for (const Triangle& tr : {old1, old2}) {
            auto it = open_tri.find(tr);
            if (it == open_tri.end()) throw InvariantError("dying triangle was not alive");
            tris_[it->second].death = i - 1;
            open_tri.erase(it);
        }
        start_tri(new1, i);
        start_tri(new2, i);
    }
    for (auto& t : tris_)
        for (int s = 0; s < 3; ++s) t.edges[s] = occurrence_at(side(cfg, t.tri, s), t.birth);
}

int BlowUpComplex::occurrence_at(int arc, int time) const {
    for (int o : by_arc_[arc])
        if (arcs_[o].birth <= time && time <= arcs_[o].death) return o;
    return -1;
}

std::vector<int> BlowUpComplex::tetra_edges(int k) const {
    const Tetra& t = tetras_[k];
    std::vector<int> out;
    for (int s = 0; s < 4; ++s) out.push_back(occurrence_at(cfg_->arc_id(t.quad[s], t.quad[(s + 1) % 4]), t.time));
    out.push_back(occurrence_at(t.removed, t.time - 1));
    out.push_back(occurrence_at(t.inserted, t.time));
    return out;
}

std::string BlowUpComplex::dump() const {
    std::ostringstream os;
    os << "arcs " << arcs_.size() << '\n';
    for (const auto& a : arcs_)
        os << "  " << cfg_->arc(a.arc).a << '-' << cfg_->arc(a.arc).b << " [" << a.birth << ',' << a.death << "]\n";
    os << "triangles " << tris_.size() << '\n';
    for (const auto& t : tris_)
        os << "  " << t.tri.v[0] << ' ' << t.tri.v[1] << ' ' << t.tri.v[2] << " [" << t.birth << ',' << t.death << "]\n";
    os << "tetrahedra " << tetras_.size() << '\n';
    for (const auto& t : tetras_)
        os << "  t=" << t.time << " quad " << t.quad[0] << ' ' << t.quad[1] << ' ' << t.quad[2] << ' ' << t.quad[3]
           << " out " << cfg_->arc(t.removed).a << '-' << cfg_->arc(t.removed).b << " in " << cfg_->arc(t.inserted).a
           << '-' << cfg_->arc(t.inserted).b << '\n';
    return os.str();
}

namespace {

struct Shape {
    int arc = -1;
    int sides[3] = {-1, -1, -1};
    Triangle tri;
};

Shape shape_of(const BlowUpComplex& k, const OccRef& r) {
    Shape s;
    if (r.triangle) {
        s.tri = k.triangles()[r.index].tri;
        for (int i = 0; i < 3; ++i) s.sides[i] = side(k.config(), s.tri, i);
    } else {
        s.arc = k.arcs()[r.index].arc;
    }
    return s;
}

bool interiors_overlap(const PointConfig& cfg, const Shape& a, const Shape& b) {
    if (a.arc >= 0 && b.arc >= 0) return a.arc == b.arc || cfg.crosses(a.arc, b.arc);
    if (a.arc >= 0 || b.arc >= 0) {
        const Shape& seg = a.arc >= 0 ? a : b;
        const Shape& tri = a.arc >= 0 ? b : a;
        for (int s : tri.sides)
            if (cfg.crosses(seg.arc, s)) return true;
        return false;
    }
    if (a.tri == b.tri) return true;
    for (int s : a.sides)
        for (int t : b.sides)
            if (cfg.crosses(s, t)) return true;
    return false;
}

std::pair<int, int> interval(const BlowUpComplex& k, const OccRef& r) {
    if (r.triangle) return {k.triangles()[r.index].birth, k.triangles()[r.index].death};
    return {k.arcs()[r.index].birth, k.arcs()[r.index].death};
}

}  // namespace

bool below(const BlowUpComplex& k, const OccRef& f, const OccRef& g) {
    if (interval(k, f).second >= interval(k, g).first) return false;
    return interiors_overlap(k.config(), shape_of(k, f), shape_of(k, g));
}

std::vector<Circle> circles3(const BlowUpComplex& k) {
    const PointConfig& cfg = k.config();
    std::vector<char> present(cfg.arc_count(), 0);
    for (const auto& a : k.arcs()) present[a.arc] = 1;
    std::vector<Circle> out;
    const int n = cfg.size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int uv = cfg.arc_id(u, v);
            if (uv < 0 || !present[uv]) continue;
            for (int w = v + 1; w < n; ++w) {
                int vw = cfg.arc_id(v, w), uw = cfg.arc_id(u, w);
                if (vw < 0 || uw < 0 || !present[vw] || !present[uw]) continue;
                Triangle tr;
                if (!cfg.make_triangle(u, v, w, tr)) continue;
                int s0 = side(cfg, tr, 0), s1 = side(cfg, tr, 1), s2 = side(cfg, tr, 2);
                for (int a : k.occurrences_of(s0))
                    for (int b : k.occurrences_of(s1))
                        for (int c : k.occurrences_of(s2)) {
                            Circle ci;
                            ci.tri = tr;
                            ci.occ[0] = a;
                            ci.occ[1] = b;
                            ci.occ[2] = c;
                            out.push_back(ci);
                        }
            }
        }
    return out;
}

std::optional<int> bounds_triangle(const BlowUpComplex& k, const Circle& c) {
    for (std::size_t i = 0; i < k.triangles().size(); ++i) {
        const auto& t = k.triangles()[i];
        if (t.tri == c.tri && t.edges[0] == c.occ[0] && t.edges[1] == c.occ[1] && t.edges[2] == c.occ[2])
            return static_cast<int>(i);
    }
    return std::nullopt;
}

std::optional<int> penetration_witness(const BlowUpComplex& k, const Circle& c) {
    for (std::size_t o = 0; o < k.arcs().size(); ++o) {
        int oi = static_cast<int>(o);
        bool above_one = false, below_one = false;
        for (int a : c.occ) {
            if (arc_below(k, a, oi)) above_one = true;
            if (arc_below(k, oi, a)) below_one = true;
        }
        // an arc below a and above b must differ from both, and a != b is
        // automatic since below is irreflexive
        if (above_one && below_one) return oi;
    }
    return std::nullopt;
}

FlagResult flag_check(const BlowUpComplex& k) {
    FlagResult r;
    for (const Circle& c : circles3(k)) {
        if (!bounds_triangle(k, c)) {
            r.pass = false;
            r.counterexample = c;
            return r;
        }
    }
    return r;
}

Theorem1Result theorem1_scan(const PointConfig& cfg, const FlipPath& path) {
    Theorem1Result r;
    std::vector<char> seen(cfg.arc_count(), 0);
    for (const auto& t : path.snapshots) t.for_each([&](int id) { seen[id] = 1; });
    std::vector<Triangle> faces;
    for (const auto& t : path.snapshots)
        for (const Triangle& tr : triangles_of(cfg, t)) faces.push_back(tr);
    std::sort(faces.begin(), faces.end());
    const int n = cfg.size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int uv = cfg.arc_id(u, v);
            if (uv < 0 || !seen[uv]) continue;
            for (int w = v + 1; w < n; ++w) {
                int vw = cfg.arc_id(v, w), uw = cfg.arc_id(u, w);
                if (vw < 0 || uw < 0 || !seen[vw] || !seen[uw]) continue;
                Triangle tr;
                if (!cfg.make_triangle(u, v, w, tr)) continue;
                if (!std::binary_search(faces.begin(), faces.end(), tr)) {
                    r.pass = false;
                    r.counterexample = tr;
                    return r;
                }
            }
        }
    return r;
}

Theorem1Result theorem1_check(const PointConfig& cfg, const FlipPath& geodesic, const Limits& lim) {
    int d = distance(cfg, geodesic.snapshots.front(), geodesic.snapshots.back(), {}, lim);
    if (d != geodesic.length()) throw PreconditionError("path is not a geodesic");
    return theorem1_scan(cfg, geodesic);
}

}  // namespace flipgraph
