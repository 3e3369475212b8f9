#include "flipgraph/constructions.hpp"

#include <algorithm>
#include <cmath>

#include "flipgraph/errors.hpp"

namespace flipgraph {

namespace {

constexpr double kRadius = 1.0e7;

int label_at(const Labels& labels, const std::string& l) {
    auto it = labels.find(l);
    if (it == labels.end()) throw PreconditionError("unknown label " + l);
    return it->second;
}

std::string idx(const std::string& base, int i) { return base + std::to_string(i); }

void push_labels(std::vector<std::string>& order, const std::string& base, int count) {
    order.push_back(base);
    for (int i = 1; i <= count; ++i) order.push_back(idx(base, i));
}

Labels make_labels(const std::vector<std::string>& order) {
    Labels l;
    for (std::size_t i = 0; i < order.size(); ++i) l[order[i]] = static_cast<int>(i);
    return l;
}

// Labels first..last in cyclic order (inclusive), followed by extra.
std::vector<int> block(const Labels& labels, int n_points, const std::string& first, const std::string& last,
                       const std::vector<std::string>& extra = {}) {
    std::vector<int> out;
    int a = label_at(labels, first), b = label_at(labels, last);
    for (int i = a;; i = (i + 1) % n_points) {
        out.push_back(i);
        if (i == b) break;
    }
    for (const auto& s : extra) out.push_back(label_at(labels, s));
    return out;
}

std::vector<Arc> inner_arcs(const PointConfig& cfg, const Labels& labels, const std::vector<int>& reg,
                            const InnerChoice& choice) {
    if (!choice.comb_apex.empty()) return comb_arcs(cfg, reg, label_at(labels, choice.comb_apex));
    std::vector<Arc> out;
    for (const auto& [u, v] : choice.diagonals) {
        int a = label_at(labels, u), b = label_at(labels, v);
        if (std::find(reg.begin(), reg.end(), a) == reg.end() || std::find(reg.begin(), reg.end(), b) == reg.end())
            throw PreconditionError("inner diagonal " + u + "-" + v + " leaves its sub-polygon");
        out.emplace_back(a, b);
    }
    if (static_cast<int>(out.size()) != static_cast<int>(reg.size()) - 3)
        throw PreconditionError("inner choice does not triangulate its sub-polygon");
    return out;
}

Triangulation require_built(const PointConfig& cfg, const std::vector<Arc>& arcs, const char* what) {
    Triangulation t = from_arcs(cfg, arcs);
    std::string why;
    if (!is_triangulation(cfg, t, &why)) throw InvariantError(std::string(what) + ": " + why);
    return t;
}

}  // namespace

Triangulation map_triangulation(const PointConfig& from, const PointConfig& to, const Triangulation& t,
                                const std::vector<int>& vmap) {
    Triangulation out(to.arc_count());
    t.for_each([&](int id) {
        const Arc& e = from.arc(id);
        int nid = to.arc_id(vmap[e.a], vmap[e.b]);
        if (nid < 0) throw PreconditionError("mapped arc is invalid");
        out.insert(nid);
    });
    return out;
}

std::vector<int> reflection_map(const PointConfig& cfg) {
    if (cfg.has_punctures()) throw PreconditionError("reflection needs a boundary-only configuration");
    std::vector<int> v(cfg.size());
    for (int i = 0; i < cfg.size(); ++i) v[i] = (cfg.size() - i) % cfg.size();
    return v;
}

int Family8Instance::at(const std::string& l) const { return label_at(labels, l); }
int Family8Instance::arc(const std::string& u, const std::string& v) const { return config.arc_id(at(u), at(v)); }
int Family6Instance::at(const std::string& l) const { return label_at(labels, l); }
int Family6Instance::arc(const std::string& u, const std::string& v) const { return config.arc_id(at(u), at(v)); }

Family8Instance build_family8(int n, int m, const InnerChoice& inner_e, const InnerChoice& inner_h) {
    if (n < 1 || m < 1) throw PreconditionError("family8 needs n >= 1 and m >= 1");
    std::vector<std::string> order{"o"};
    push_labels(order, "d", n);
    push_labels(order, "e", m);
    push_labels(order, "f", m + 1);
    push_labels(order, "g", m);
    push_labels(order, "h", n);
    order.push_back("p");
    const int N = static_cast<int>(order.size());

    Family8Instance inst;
    inst.n = n;
    inst.m = m;
    inst.labels = make_labels(order);
    inst.config = PointConfig(circle_points(N, kRadius));
    const auto& L = inst.labels;
    const auto& cfg = inst.config;

    std::vector<Arc> arcs;
    auto add = [&](const std::vector<Arc>& v) { arcs.insert(arcs.end(), v.begin(), v.end()); };
    add(comb_arcs(cfg, block(L, N, "o", "e"), L.at("o")));
    for (auto [u, v] : {std::pair{"o", "e"}, {"e", "p"}, {"f", "p"}, {"f", "h"}}) arcs.emplace_back(L.at(u), L.at(v));
    add(inner_arcs(cfg, L, block(L, N, "e", "f", {"p"}), inner_e));
    std::vector<int> sigma_h{L.at("f")};
    for (int v : block(L, N, "h", "p")) sigma_h.push_back(v);
    add(inner_arcs(cfg, L, sigma_h, inner_h));
    add(zigzag_arcs(cfg, block(L, N, "f", "h"), L.at(idx("f", m + 1)), L.at("g")));

    inst.t_minus = require_built(cfg, arcs, "family8 T^-");
    inst.t_plus = map_triangulation(cfg, cfg, inst.t_minus, reflection_map(cfg));
    require_triangulation(cfg, inst.t_plus, "family8 T^+");
    return inst;
}

ASets a_sets(const Family8Instance& inst, const Triangulation& t) {
    ASets s;
    for (int i = 1; i <= inst.n; ++i) {
        int id = inst.arc("f", idx("h", i));
        if (t.contains(id)) s.a_f.push_back(id);
    }
    for (int i = 1; i <= inst.m; ++i) {
        int id = inst.arc("p", idx("e", i));
        if (t.contains(id)) s.a_p.push_back(id);
    }
    return s;
}

FlipPath Family6Instance::full_path() const {
    FlipPath p = first_half;
    for (std::size_t i = 1; i < second_half.snapshots.size(); ++i) p.snapshots.push_back(second_half.snapshots[i]);
    for (const auto& f : second_half.flips) p.flips.push_back(f);
    return p;
}

Family6Instance build_family6(int n, int m) {
    if (n < 1 || m < 1) throw PreconditionError("family6 needs n >= 1 and m >= 1");
    std::vector<std::string> order{"o", "a", "b", "c"};
    push_labels(order, "d", n);
    push_labels(order, "e", m);
    push_labels(order, "f", m + 1);
    push_labels(order, "g", m);
    push_labels(order, "h", n);
    for (const char* s : {"p", "q", "r", "s"}) order.push_back(s);
    const int N = static_cast<int>(order.size());

    Family6Instance inst;
    inst.n = n;
    inst.m = m;
    inst.labels = make_labels(order);
    const auto& L = inst.labels;
    const int b = L.at("b"), r = L.at("r");

    auto corners = circle_points(N - 2, kRadius);
    std::vector<Point> pts;
    for (int i = 0, c = 0; i < N; ++i) {
        if (i == b || i == r) {
            pts.push_back({0, 0, PointKind::Flat});
            continue;
        }
        Point p = corners[c++];
        p.x *= 2;
        p.y *= 2;
        pts.push_back(p);
    }
    for (int f : {b, r}) {
        pts[f].x = (pts[f - 1].x + pts[f + 1].x) / 2;
        pts[f].y = (pts[f - 1].y + pts[f + 1].y) / 2;
    }
    inst.config = PointConfig(std::move(pts));
    const auto& cfg = inst.config;

    std::vector<Arc> arcs;
    auto add_pair = [&](const std::string& u, const std::string& v) { arcs.emplace_back(L.at(u), L.at(v)); };
    for (auto [u, v] : {std::pair{"a", "s"}, {"b", "d"}, {"a", "d"}, {"a", "e"}, {"e", "s"}, {"e", "r"}, {"e", "q"},
                        {"f", "q"}, {"f", "h"}})
        add_pair(u, v);
    for (int i = 1; i <= n; ++i) add_pair("a", idx("d", i));
    auto sigma_e = block(L, N, "e", "f", {"q"});
    for (const Arc& e : comb_arcs(cfg, sigma_e, L.at("q"))) arcs.push_back(e);
    std::vector<int> sigma_h{L.at("f")};
    for (int v : block(L, N, "h", "q")) sigma_h.push_back(v);
    for (const Arc& e : comb_arcs(cfg, sigma_h, L.at("f"))) arcs.push_back(e);
    for (const Arc& e : zigzag_arcs(cfg, block(L, N, "f", "h"), L.at(idx("f", m + 1)), L.at("g"))) arcs.push_back(e);

    inst.t_minus = require_built(cfg, arcs, "family6 T^-");
    auto refl = reflection_map(cfg);
    inst.t_plus = map_triangulation(cfg, cfg, inst.t_minus, refl);
    require_triangulation(cfg, inst.t_plus, "family6 T^+");
    inst.eta = inst.arc("a", "s");

    // First half: drive everything between e and h onto o, then rebuild the
    // region around r and s so that the result is reflection symmetric.
    Mesh mesh(cfg, inst.t_minus);
    FlipPath half;
    half.snapshots.push_back(inst.t_minus);
    auto flip_expect = [&](const std::string& u, const std::string& v, const std::string& x, const std::string& y) {
        int id = inst.arc(u, v);
        auto f = mesh.flip_info(id);
        if (!f || f->inserted != inst.arc(x, y))
            throw InvariantError("family6 path: flipping " + u + "-" + v + " does not give " + x + "-" + y);
        mesh.flip(id);
        half.flips.push_back(*f);
        half.snapshots.push_back(mesh.triangulation());
    };
    flip_expect("a", "s", "o", "e");
    flip_expect("e", "s", "o", "r");
    flip_expect("e", "r", "o", "q");
    flip_expect("e", "q", "o", "e1");
    for (int i = 1; i <= m; ++i) flip_expect(idx("e", i), "q", "o", i < m ? idx("e", i + 1) : "f");
    flip_expect("o", "q", "f", "r");
    flip_expect("o", "r", "f", "s");
    flip_expect("f", "q", "p", "r");
    flip_expect("f", "r", "p", "s");
    flip_expect("f", "p", idx("h", n), "s");
    for (int i = n; i >= 1; --i) flip_expect("f", idx("h", i), i > 1 ? idx("h", i - 1) : "h", "s");
    flip_expect("f", "s", "o", "h");
    flip_expect("f", "h", "o", "f1");
    const int lo = L.at("f"), hi = L.at("h"), o = L.at("o");
    for (int k = 0; k < 2 * m + 1; ++k) {
        const auto& l = mesh.neighbors(o);
        int target = -1;
        for (std::size_t i = 0; i + 1 < l.size(); ++i) {
            if (l[i] < lo || l[i] > hi || l[i + 1] < lo || l[i + 1] > hi) continue;
            int id = cfg.arc_id(l[i], l[i + 1]);
            if (id >= 0 && !cfg.is_boundary_arc(id)) {
                target = id;
                break;
            }
        }
        if (target < 0) throw InvariantError("family6 path: zigzag exhausted early");
        auto f = mesh.flip(target);
        if (!cfg.arc(f.inserted).has(o)) throw InvariantError("family6 path: zigzag flip misses o");
        half.flips.push_back(f);
        half.snapshots.push_back(mesh.triangulation());
    }
    const Triangulation& mid = half.snapshots.back();
    if (!(map_triangulation(cfg, cfg, mid, refl) == mid)) throw InvariantError("family6 path: middle is not symmetric");
    if (half.length() != inst.half_length_formula()) throw InvariantError("family6 path: unexpected half length");
    inst.first_half = half;
    std::vector<Triangulation> mirrored;
    for (auto it = half.snapshots.rbegin(); it != half.snapshots.rend(); ++it)
        mirrored.push_back(map_triangulation(cfg, cfg, *it, refl));
    inst.second_half = make_path(cfg, mirrored);
    return inst;
}

Triangulation PuncturedInstance::transport(const Triangulation& t) const {
    Triangulation out(config.arc_count());
    t.for_each([&](int id) { out.insert(arc_map[id]); });
    for (int id : new_hull_edges) out.insert(id);
    return out;
}

namespace {

bool try_perturb(const Family6Instance& inst, const std::vector<Point>& base, const std::vector<int>& moved,
                 const std::vector<Point>& moved_pos, PuncturedInstance& out) {
    const PointConfig& old = inst.config;
    const int N = old.size();
    std::vector<Point> pts;
    std::vector<int> vmap(N, -1);
    for (int i = 0; i < N; ++i) {
        if (std::find(moved.begin(), moved.end(), i) != moved.end()) continue;
        vmap[i] = static_cast<int>(pts.size());
        pts.push_back(base[i]);
    }
    for (std::size_t k = 0; k < moved.size(); ++k) {
        vmap[moved[k]] = static_cast<int>(pts.size());
        pts.push_back(moved_pos[k]);
    }
    PointConfig cfg;
    try {
        cfg = PointConfig(pts);
    } catch (const ConfigError&) {
        return false;
    }
    std::vector<int> amap(old.arc_count());
    std::vector<char> hit(cfg.arc_count(), 0);
    for (int id = 0; id < old.arc_count(); ++id) {
        const Arc& e = old.arc(id);
        int nid = cfg.arc_id(vmap[e.a], vmap[e.b]);
        if (nid < 0) return false;
        amap[id] = nid;
        hit[nid] = 1;
    }
    std::vector<int> hull;
    for (int id = 0; id < cfg.arc_count(); ++id) {
        if (hit[id]) continue;
        if (!cfg.is_boundary_arc(id)) return false;
        hull.push_back(id);
    }
    if (hull.size() != moved.size()) return false;
    for (int i = 0; i < old.arc_count(); ++i)
        for (int j = i + 1; j < old.arc_count(); ++j)
            if (old.crosses(i, j) != cfg.crosses(amap[i], amap[j])) return false;
    out.config = std::move(cfg);
    out.vertex_map = std::move(vmap);
    out.arc_map = std::move(amap);
    out.new_hull_edges = std::move(hull);
    out.punctures = static_cast<int>(moved.size());
    return true;
}

}  // namespace

PuncturedInstance perturb_flats_to_punctures(const Family6Instance& inst, int flats_kept) {
    if (flats_kept < 0 || flats_kept > 2) throw PreconditionError("flats_kept must be 0, 1 or 2");
    std::vector<int> moved;
    if (flats_kept <= 1) moved.push_back(inst.at("b"));
    if (flats_kept == 0) moved.push_back(inst.at("r"));
    std::vector<Point> base = inst.config.points();
    for (int scale = 0; scale < 4; ++scale) {
        for (int step = 1; step <= 64; ++step) {
            std::vector<Point> pos;
            for (int v : moved) {
                const Point& a = base[inst.config.prev_boundary(v)];
                const Point& c = base[inst.config.next_boundary(v)];
                double nx = -static_cast<double>(c.y - a.y), ny = static_cast<double>(c.x - a.x);
                double len = std::hypot(nx, ny);
                pos.push_back({base[v].x + std::llround(nx / len * step), base[v].y + std::llround(ny / len * step),
                               PointKind::Puncture});
            }
            PuncturedInstance out;
            if (!try_perturb(inst, base, moved, pos, out)) continue;
            out.t_minus = out.transport(inst.t_minus);
            out.t_plus = out.transport(inst.t_plus);
            require_triangulation(out.config, out.t_minus, "transported T^-");
            require_triangulation(out.config, out.t_plus, "transported T^+");
            out.eta = out.arc_map[inst.eta];
            return out;
        }
        for (auto& p : base) {
            p.x *= 2;
            p.y *= 2;
        }
    }
    throw ResourceError("no admissible perturbation of the flat points found");
}

}  // namespace flipgraph
