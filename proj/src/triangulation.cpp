#include "flipgraph/triangulation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "flipgraph/errors.hpp"

namespace flipgraph {

int Triangulation::count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
}

std::vector<int> Triangulation::ids() const {
    std::vector<int> out;
    for_each([&](int id) { out.push_back(id); });
    return out;
}

std::size_t Triangulation::hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
}

int difference_count(const Triangulation& a, const Triangulation& b) {
    int c = 0;
    for (std::size_t i = 0; i < a.words().size(); ++i) c += __builtin_popcountll(a.words()[i] & ~b.words()[i]);
    return c;
}

Triangulation from_arcs(const PointConfig& cfg, const std::vector<Arc>& arcs, bool add_boundary) {
    Triangulation t(cfg.arc_count());
    for (const Arc& e : arcs) {
        int id = cfg.arc_id(e);
        if (id < 0) throw PreconditionError("invalid arc " + std::to_string(e.a) + "-" + std::to_string(e.b));
        t.insert(id);
    }
    if (add_boundary)
        for (int id : cfg.boundary_arc_ids()) t.insert(id);
    return t;
}

std::vector<Arc> arcs_of(const PointConfig& cfg, const Triangulation& t) {
    std::vector<Arc> out;
    t.for_each([&](int id) { out.push_back(cfg.arc(id)); });
    return out;
}

bool is_triangulation(const PointConfig& cfg, const Triangulation& t, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (t.universe() != cfg.arc_count()) return fail("arc universe mismatch");
    for (int id : cfg.boundary_arc_ids())
        if (!t.contains(id)) return fail("missing boundary edge");
    if (t.count() != cfg.triangulation_arc_count())
        return fail("expected " + std::to_string(cfg.triangulation_arc_count()) + " arcs, got " +
                    std::to_string(t.count()));
    std::vector<int> ids = t.ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (cfg.is_boundary_arc(ids[i])) continue;
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (cfg.crosses(ids[i], ids[j])) return fail("crossing arcs");
    }
    // a crossing-free set with 3N-3-B arcs is maximal
    return true;
}

void require_triangulation(const PointConfig& cfg, const Triangulation& t, const char* what) {
    std::string why;
    if (!is_triangulation(cfg, t, &why)) throw PreconditionError(std::string(what) + " is not a triangulation: " + why);
}

int degree(const PointConfig& cfg, const Triangulation& t, int v) {
    int d = 0;
    for (int u = 0; u < cfg.size(); ++u) {
        int id = cfg.arc_id(u, v);
        if (id >= 0 && t.contains(id)) ++d;
    }
    return d;
}

namespace {

using i128 = __int128;

i128 cross(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
    return static_cast<i128>(ax) * by - static_cast<i128>(ay) * bx;
}

}  // namespace

bool Mesh::angle_less(int v, int u, int w) const {
    const Point& p = cfg_->point(v);
    std::int64_t rx = 1, ry = 0;
    if (cfg_->is_boundary(v)) {
        const Point& q = cfg_->point(cfg_->next_boundary(v));
        rx = q.x - p.x;
        ry = q.y - p.y;
    }
    auto half = [&](int z) {
        std::int64_t dx = cfg_->point(z).x - p.x, dy = cfg_->point(z).y - p.y;
        i128 c = cross(rx, ry, dx, dy);
        i128 d = static_cast<i128>(rx) * dx + static_cast<i128>(ry) * dy;
        return (c > 0 || (c == 0 && d > 0)) ? 0 : 1;
    };
    int hu = half(u), hw = half(w);
    if (hu != hw) return hu < hw;
    const Point &a = cfg_->point(u), &b = cfg_->point(w);
    return cross(a.x - p.x, a.y - p.y, b.x - p.x, b.y - p.y) > 0;
}

Mesh::Mesh(const PointConfig& cfg, const Triangulation& t) : cfg_(&cfg), t_(t), nbr_(cfg.size()) {
    t.for_each([&](int id) {
        const Arc& e = cfg.arc(id);
        nbr_[e.a].push_back(e.b);
        nbr_[e.b].push_back(e.a);
    });
    for (int v = 0; v < cfg.size(); ++v)
        std::sort(nbr_[v].begin(), nbr_[v].end(), [&](int u, int w) { return angle_less(v, u, w); });
}

int Mesh::position(int v, int u) const {
    const auto& l = nbr_[v];
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] == u) return static_cast<int>(i);
    return -1;
}

void Mesh::insert_neighbor(int v, int u) {
    auto& l = nbr_[v];
    auto it = std::lower_bound(l.begin(), l.end(), u, [&](int a, int b) { return angle_less(v, a, b); });
    l.insert(it, u);
}

void Mesh::erase_neighbor(int v, int u) {
    auto& l = nbr_[v];
    l.erase(std::find(l.begin(), l.end(), u));
}

bool Mesh::apexes(int id, int& left, int& right) const {
    if (cfg_->is_boundary_arc(id) || !t_.contains(id)) return false;
    const Arc& e = cfg_->arc(id);
    const auto& l = nbr_[e.a];
    int i = position(e.a, e.b);
    int k = static_cast<int>(l.size());
    if (i < 0) return false;
    if (cfg_->is_boundary(e.a)) {
        if (i == 0 || i == k - 1) return false;
        left = l[i + 1];
        right = l[i - 1];
    } else {
        left = l[(i + 1) % k];
        right = l[(i + k - 1) % k];
    }
    return true;
}

std::optional<FlipResult> Mesh::flip_info(int id) const {
    int c, d;
    if (!apexes(id, c, d)) return std::nullopt;
    int nid = cfg_->arc_id(c, d);
    if (nid < 0 || !cfg_->crosses(id, nid)) return std::nullopt;
    const Arc& e = cfg_->arc(id);
    FlipResult r;
    r.removed = id;
    r.inserted = nid;
    r.quad[0] = e.a;
    r.quad[1] = d;
    r.quad[2] = e.b;
    r.quad[3] = c;
    return r;
}

FlipResult Mesh::flip(int id) {
    auto r = flip_info(id);
    if (!r) throw PreconditionError("arc " + std::to_string(id) + " is not flippable");
    const Arc& e = cfg_->arc(id);
    erase_neighbor(e.a, e.b);
    erase_neighbor(e.b, e.a);
    insert_neighbor(r->quad[1], r->quad[3]);
    insert_neighbor(r->quad[3], r->quad[1]);
    t_.erase(id);
    t_.insert(r->inserted);
    return *r;
}

std::vector<Triangle> Mesh::triangles() const {
    std::vector<Triangle> out;
    for (int v = 0; v < cfg_->size(); ++v) {
        const auto& l = nbr_[v];
        int k = static_cast<int>(l.size());
        int pairs = cfg_->is_boundary(v) ? k - 1 : k;
        for (int i = 0; i < pairs; ++i) {
            int u = l[i], w = l[(i + 1) % k];
            if (u < v || w < v) continue;
            Triangle t;
            t.v[0] = v;
            t.v[1] = u;
            t.v[2] = w;
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Triangle> triangles_of(const PointConfig& cfg, const Triangulation& t) {
    return Mesh(cfg, t).triangles();
}

std::optional<Triangulation> flip(const PointConfig& cfg, const Triangulation& t, int arc_id) {
    if (arc_id < 0 || arc_id >= cfg.arc_count() || !t.contains(arc_id)) return std::nullopt;
    Mesh m(cfg, t);
    auto r = m.flip_info(arc_id);
    if (!r) return std::nullopt;
    Triangulation out = t;
    out.erase(r->removed);
    out.insert(r->inserted);
    return out;
}

std::optional<Triangulation> flip(const PointConfig& cfg, const Triangulation& t, const Arc& e) {
    return flip(cfg, t, cfg.arc_id(e));
}

std::vector<Arc> comb_arcs(const PointConfig& cfg, const std::vector<int>& region, int apex) {
    const int k = static_cast<int>(region.size());
    auto it = std::find(region.begin(), region.end(), apex);
    if (it == region.end()) throw PreconditionError("apex not in region");
    int p = static_cast<int>(it - region.begin());
    std::vector<Arc> out;
    for (int j = 2; j <= k - 2; ++j) {
        int w = region[(p + j) % k];
        if (!cfg.is_valid_arc(apex, w))
            throw ObstructionError("comb at " + std::to_string(apex) + " needs invalid arc to " + std::to_string(w));
        out.emplace_back(apex, w);
    }
    return out;
}

Triangulation greedy_triangulation(const PointConfig& cfg) {
    Triangulation t(cfg.arc_count());
    std::vector<int> chosen;
    for (int id = 0; id < cfg.arc_count(); ++id) {
        bool ok = true;
        for (int c : chosen)
            if (cfg.crosses(id, c)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(id);
        t.insert(id);
    }
    return t;
}

Triangulation comb(const PointConfig& cfg, int apex) {
    if (cfg.has_punctures()) throw PreconditionError("comb of the whole polygon needs a configuration without punctures");
    if (apex < 0 || apex >= cfg.boundary_size()) throw PreconditionError("apex out of range");
    std::vector<int> region(cfg.boundary_size());
    for (int i = 0; i < cfg.boundary_size(); ++i) region[i] = i;
    return from_arcs(cfg, comb_arcs(cfg, region, apex));
}

std::vector<Arc> zigzag_arcs(const PointConfig& cfg, const std::vector<int>& region, int start, int avoid) {
    const int k = static_cast<int>(region.size());
    auto pos = [&](int v) {
        auto it = std::find(region.begin(), region.end(), v);
        if (it == region.end()) throw PreconditionError("vertex not in region");
        return static_cast<int>(it - region.begin());
    };
    int s = pos(start), a = pos(avoid);
    int dir;
    if ((s + 1) % k == a) dir = 1;
    else if ((s + k - 1) % k == a) dir = -1;
    else throw PreconditionError("zigzag: avoided vertex is not adjacent to the start");
    std::vector<Arc> out;
    if (k < 4) return out;
    auto at = [&](int i) { return region[((i % k) + k) % k]; };
    int left = s, right = s + 2 * dir;
    bool move_left = true;
    while (static_cast<int>(out.size()) < k - 3) {
        int u = at(left), w = at(right);
        if (!cfg.is_valid_arc(u, w))
            throw ObstructionError("zigzag needs invalid arc " + std::to_string(u) + "-" + std::to_string(w));
        out.emplace_back(u, w);
        if (move_left) left -= dir;
        else right += dir;
        move_left = !move_left;
    }
    return out;
}

PointConfig contract_config(const PointConfig& cfg, int y) {
    std::vector<Point> pts;
    for (int i = 0; i < cfg.size(); ++i)
        if (i != y) pts.push_back(cfg.point(i));
    int b = cfg.boundary_size() - 1;
    for (int i = 0; i < b; ++i) {
        const Point& prev = pts[(i + b - 1) % b];
        const Point& next = pts[(i + 1) % b];
        pts[i].kind = in_open_segment(prev, next, pts[i]) ? PointKind::Flat : PointKind::Corner;
    }
    return PointConfig(std::move(pts));
}

std::vector<int> contraction_map(const PointConfig& cfg, int x, int y) {
    std::vector<int> vmap(cfg.size());
    for (int i = 0; i < cfg.size(); ++i) vmap[i] = i < y ? i : i - 1;
    vmap[y] = vmap[x];
    return vmap;
}

Triangulation contract_triangulation(const PointConfig& cfg, const PointConfig& contracted,
                                     const std::vector<int>& vmap, const Triangulation& t, int x, int) {
    Triangulation out(contracted.arc_count());
    bool bad = false;
    t.for_each([&](int id) {
        const Arc& e = cfg.arc(id);
        int u = vmap[e.a], v = vmap[e.b];
        if (u == v) return;
        int nid = contracted.arc_id(u, v);
        if (nid < 0) {
            bad = true;
            return;
        }
        out.insert(nid);
    });
    if (bad) throw ObstructionError("contraction to " + std::to_string(x) + " creates an arc through a flat vertex");
    std::string why;
    if (!is_triangulation(contracted, out, &why)) throw ObstructionError("contracted set is not a triangulation: " + why);
    return out;
}

Contraction contract_edge(const PointConfig& cfg, const Triangulation& t, int x, int y) {
    int id = cfg.arc_id(x, y);
    if (id < 0 || !cfg.is_boundary_arc(id)) throw PreconditionError("contraction needs a boundary edge");
    if (!t.contains(id)) throw PreconditionError("edge not in triangulation");
    PointConfig c = contract_config(cfg, y);
    auto vmap = contraction_map(cfg, x, y);
    Triangulation ct = contract_triangulation(cfg, c, vmap, t, x, y);
    return {std::move(c), std::move(ct), std::move(vmap)};
}

std::string format_triangulation(const PointConfig& cfg, const Triangulation& t) {
    std::ostringstream os;
    bool first = true;
    t.for_each([&](int id) {
        if (!first) os << ',';
        first = false;
        os << cfg.arc(id).a << '-' << cfg.arc(id).b;
    });
    return os.str();
}

Triangulation parse_triangulation(const PointConfig& cfg, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.rfind("comb:", 0) == 0) {
        try {
            return comb(cfg, std::stoi(s.substr(5)));
        } catch (const std::invalid_argument&) {
            throw ParseError("bad comb apex in " + s);
        }
    }
    std::vector<Arc> arcs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto dash = tok.find('-');
        if (dash == std::string::npos) throw ParseError("bad arc token " + tok);
        int a, b;
        try {
            a = std::stoi(tok.substr(0, dash));
            b = std::stoi(tok.substr(dash + 1));
        } catch (const std::exception&) {
            throw ParseError("bad arc token " + tok);
        }
        if (cfg.arc_id(a, b) < 0) throw ParseError("invalid arc " + tok);
        arcs.emplace_back(a, b);
    }
    Triangulation t = from_arcs(cfg, arcs);
    require_triangulation(cfg, t, "parsed set");
    return t;
}

}  // namespace flipgraph
