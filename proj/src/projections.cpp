#include "flipgraph/projections.hpp"

#include <algorithm>

#include "flipgraph/errors.hpp"

namespace flipgraph {

namespace {

void require_boundary_only(const PointConfig& cfg) {
    if (cfg.has_punctures()) throw PreconditionError("projections need a configuration without punctures");
}

void require_eps(const PointConfig& cfg, int eps) {
    if (eps < 0 || eps >= cfg.arc_count()) throw PreconditionError("invalid cut arc");
}

int side_of(const PointConfig& cfg, int eps, int v) {
    const Arc& e = cfg.arc(eps);
    return orientation(cfg.point(e.a), cfg.point(e.b), cfg.point(v));
}

std::vector<int> crossing_arcs(const PointConfig& cfg, const Triangulation& t, int eps) {
    std::vector<int> out;
    t.for_each([&](int id) {
        if (cfg.crosses(id, eps)) out.push_back(id);
    });
    return out;
}

Triangulation checked(const PointConfig& cfg, Triangulation t, const char* what) {
    std::string why;
    if (!is_triangulation(cfg, t, &why)) throw ObstructionError(std::string(what) + " failed: " + why);
    return t;
}

}  // namespace

std::vector<int> crossed_region(const PointConfig& cfg, const Triangulation& t, int eps) {
    require_boundary_only(cfg);
    require_eps(cfg, eps);
    std::vector<int> vs{cfg.arc(eps).a, cfg.arc(eps).b};
    for (int id : crossing_arcs(cfg, t, eps)) {
        vs.push_back(cfg.arc(id).a);
        vs.push_back(cfg.arc(id).b);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

Triangulation project_arc(const PointConfig& cfg, const Triangulation& t, int eps, int x) {
    require_eps(cfg, eps);
    if (!cfg.arc(eps).has(x)) throw PreconditionError("projection vertex is not an endpoint of the arc");
    if (t.contains(eps)) return t;
    auto region = crossed_region(cfg, t, eps);
    Triangulation out = t;
    for (int id : crossing_arcs(cfg, t, eps)) out.erase(id);
    for (const Arc& e : comb_arcs(cfg, region, x)) out.insert(cfg.arc_id(e));
    return checked(cfg, std::move(out), "arc projection");
}

Triangulation project_arc_two_sided(const PointConfig& cfg, const Triangulation& t, int eps) {
    require_eps(cfg, eps);
    if (t.contains(eps)) return t;
    auto region = crossed_region(cfg, t, eps);
    const Arc& e = cfg.arc(eps);
    Triangulation out = t;
    for (int id : crossing_arcs(cfg, t, eps)) out.erase(id);
    out.insert(eps);
    for (int s : {1, -1}) {
        auto flat_neighbor = [&](int v) {
            if (!cfg.is_boundary(v)) return false;
            for (int w : {cfg.next_boundary(v), cfg.prev_boundary(v)})
                if (cfg.kind(w) == PointKind::Flat && side_of(cfg, eps, w) == s) return true;
            return false;
        };
        bool fa = flat_neighbor(e.a), fb = flat_neighbor(e.b);
        if (fa && fb)
            throw PreconditionError("two flat vertices on the same side of the arc, adjacent to both endpoints");
        int apex = fa ? e.b : fb ? e.a : (s == 1 ? e.a : e.b);
        std::vector<int> half;
        for (int v : region)
            if (v == e.a || v == e.b || side_of(cfg, eps, v) == s) half.push_back(v);
        if (half.size() < 4) continue;
        for (const Arc& d : comb_arcs(cfg, half, apex)) out.insert(cfg.arc_id(d));
    }
    return checked(cfg, std::move(out), "two-sided projection");
}

std::vector<int> region_vertices(const PointConfig& cfg, const RegionSpec& r) {
    require_boundary_only(cfg);
    require_eps(cfg, r.eps);
    const Arc& e = cfg.arc(r.eps);
    std::vector<int> vs;
    int want = r.left ? 1 : -1;
    for (int v = 0; v < cfg.size(); ++v)
        if (v == e.a || v == e.b || side_of(cfg, r.eps, v) == want) vs.push_back(v);
    return vs;
}

void validate_region(const PointConfig& cfg, const RegionSpec& r) {
    auto vs = region_vertices(cfg, r);
    if (!r.has_fixed_inner) throw PreconditionError("region projection needs fixed_inner");
    const int k = static_cast<int>(vs.size());
    if (static_cast<int>(r.fixed_inner.size()) != k - 3)
        throw PreconditionError("fixed_inner has the wrong number of arcs");
    auto pos = [&](int v) { return static_cast<int>(std::find(vs.begin(), vs.end(), v) - vs.begin()); };
    for (std::size_t i = 0; i < r.fixed_inner.size(); ++i) {
        int id = r.fixed_inner[i];
        if (id < 0 || id >= cfg.arc_count()) throw PreconditionError("fixed_inner arc out of range");
        int pa = pos(cfg.arc(id).a), pb = pos(cfg.arc(id).b);
        if (pa == k || pb == k) throw PreconditionError("fixed_inner arc leaves the half polygon");
        int gap = std::abs(pa - pb);
        if (gap == 1 || gap == k - 1) throw PreconditionError("fixed_inner contains a side of the half polygon");
        for (std::size_t j = 0; j < i; ++j)
            if (cfg.crosses(id, r.fixed_inner[j])) throw PreconditionError("fixed_inner arcs cross");
    }
}

std::vector<std::vector<int>> region_triangulations(const PointConfig& cfg, const RegionSpec& r) {
    auto vs = region_vertices(cfg, r);
    const int k = static_cast<int>(vs.size());
    std::vector<std::vector<int>> out;
    if (k < 4) return {{}};
    // triangulations of the sub-polygon of positions [i, j]
    std::function<std::vector<std::vector<int>>(int, int)> rec = [&](int i, int j) -> std::vector<std::vector<int>> {
        if (j - i < 2) return {{}};
        std::vector<std::vector<int>> res;
        for (int m = i + 1; m < j; ++m) {
            auto left = rec(i, m), right = rec(m, j);
            for (const auto& a : left)
                for (const auto& b : right) {
                    std::vector<int> t = a;
                    t.insert(t.end(), b.begin(), b.end());
                    bool ok = true;
                    for (auto [u, v] : {std::pair{i, m}, {m, j}}) {
                        if (v - u < 2 || (u == 0 && v == k - 1)) continue;
                        int id = cfg.arc_id(vs[u], vs[v]);
                        if (id < 0) ok = false;
                        else t.push_back(id);
                    }
                    if (ok) res.push_back(std::move(t));
                }
        }
        return res;
    };
    for (auto& t : rec(0, k - 1)) {
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
    }
    return out;
}

Triangulation project_region(const PointConfig& cfg, const Triangulation& t, const RegionSpec& r, int x) {
    validate_region(cfg, r);
    const Arc& e = cfg.arc(r.eps);
    if (!e.has(x)) throw PreconditionError("projection vertex is not an endpoint of the arc");
    const int want = r.left ? 1 : -1;
    std::vector<int> count(cfg.arc_count(), 0);
    std::vector<char> in_sigma(cfg.size(), 0);
    for (const Triangle& tr : triangles_of(cfg, t)) {
        bool leaks = false;
        for (int v : tr.v)
            if (side_of(cfg, r.eps, v) == want) leaks = true;
        if (!leaks) continue;
        for (int i = 0; i < 3; ++i) {
            in_sigma[tr.v[i]] = 1;
            ++count[cfg.arc_id(tr.v[i], tr.v[(i + 1) % 3])];
        }
    }
    Triangulation out = t;
    for (int id = 0; id < cfg.arc_count(); ++id)
        if (count[id] == 2) out.erase(id);
    for (int id : r.fixed_inner) out.insert(id);
    out.insert(r.eps);
    std::vector<int> w;
    for (int v = 0; v < cfg.size(); ++v)
        if (in_sigma[v] && (v == e.a || v == e.b || side_of(cfg, r.eps, v) == -want)) w.push_back(v);
    if (w.size() >= 4)
        for (const Arc& d : comb_arcs(cfg, w, x)) out.insert(cfg.arc_id(d));
    return checked(cfg, std::move(out), "region projection");
}

FlipPath project_path(const PointConfig& cfg, const FlipPath& path, const Projector& proj) {
    std::vector<Triangulation> snaps;
    for (const auto& t : path.snapshots) {
        Triangulation p = proj(t);
        if (snaps.empty() || !(snaps.back() == p)) snaps.push_back(std::move(p));
    }
    return make_path(cfg, snaps);
}

bool arc_projection_collapses(const PointConfig& cfg, const FlipResult& f, int eps, int x) {
    bool cr = cfg.crosses(f.removed, eps), ci = cfg.crosses(f.inserted, eps);
    bool xr = cfg.arc(f.removed).has(x), xi = cfg.arc(f.inserted).has(x);
    return (cr && ci) || (cr && xi) || (ci && xr);
}

bool region_projection_collapses(const PointConfig& cfg, const FlipResult& f, const RegionSpec& r, int x) {
    const Arc& e = cfg.arc(r.eps);
    const int y = e.other(x);
    const int want = r.left ? 1 : -1;
    auto meets = [&](int id) {
        const Arc& a = cfg.arc(id);
        for (int v : {a.a, a.b})
            if (v != y && (v == x || side_of(cfg, r.eps, v) == want)) return true;
        return cfg.crosses(id, r.eps);
    };
    return meets(f.removed) && meets(f.inserted);
}

}  // namespace flipgraph
