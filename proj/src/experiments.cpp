#include "flipgraph/experiments.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "flipgraph/blowup.hpp"
#include "flipgraph/constructions.hpp"
#include "flipgraph/errors.hpp"
#include "flipgraph/projections.hpp"

namespace flipgraph {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string str(long long v) { return std::to_string(v); }

}  // namespace

std::string format_ratio(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string to_csv(const Report& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << csv_field(r.columns[i]);
    os << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << '\n';
    }
    return os.str();
}

std::string to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["experiment"] = r.id;
    j["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) j["parameters"][k] = v;
    j["columns"] = r.columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json o;
        for (std::size_t i = 0; i < row.size() && i < r.columns.size(); ++i) o[r.columns[i]] = row[i];
        j["rows"].push_back(o);
    }
    j["checks"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.checks) j["checks"][k] = v;
    j["truncated"] = r.truncated;
    j["runtime_sec"] = r.runtime_sec;
    return j.dump(2) + "\n";
}

Report run_enumerate(const PointConfig& cfg, const Limits& lim) {
    auto t0 = Clock::now();
    Report r;
    r.id = "enumerate";
    r.params = {{"points", str(cfg.size())}, {"boundary", str(cfg.boundary_size())}};
    r.columns = {"points", "valid_arcs", "triangulations"};
    auto all = reachable_set(cfg, greedy_triangulation(cfg), lim);
    r.rows.push_back({str(cfg.size()), str(cfg.arc_count()), str(static_cast<long long>(all.size()))});
    r.runtime_sec = since(t0);
    return r;
}

Report run_distance(const PointConfig& cfg, const Triangulation& t1, const Triangulation& t2, const Frozen& frozen,
                    const Limits& lim) {
    auto t0 = Clock::now();
    Report r;
    r.id = "distance";
    r.params = {{"from", format_triangulation(cfg, t1)}, {"to", format_triangulation(cfg, t2)}};
    std::string req;
    for (int id : frozen) req += (req.empty() ? "" : ",") + str(cfg.arc(id).a) + "-" + str(cfg.arc(id).b);
    r.params.push_back({"require", req});
    r.columns = {"distance", "crossings", "symmetric_difference"};
    int d = distance(cfg, t1, t2, frozen, lim);
    r.rows.push_back({str(d), str(crossing_number(cfg, t1, t2)), str(difference_count(t1, t2))});
    r.runtime_sec = since(t0);
    return r;
}

Report run_diameter(const PointConfig& cfg, const Limits& lim) {
    auto t0 = Clock::now();
    Report r;
    r.id = "diameter";
    r.params = {{"points", str(cfg.size())}};
    r.columns = {"points", "triangulations", "bfs_sources", "diameter", "from", "to"};
    auto d = diameter(cfg, lim);
    r.rows.push_back({str(cfg.size()), str(d.nodes), str(d.sources), str(d.diameter), format_triangulation(cfg, d.from),
                      format_triangulation(cfg, d.to)});
    r.runtime_sec = since(t0);
    return r;
}

Report run_heuristic(const PointConfig& cfg, const Triangulation& t1, const Triangulation& t2, TieRule rule) {
    auto t0 = Clock::now();
    Report r;
    r.id = "heuristic";
    r.params = {{"tie_rule", tie_rule_name(rule)}};
    r.columns = {"step", "removed", "inserted", "decrease", "crossings_after"};
    CrossingGreedy g(cfg, t1, t2, rule);
    r.rows.push_back({"0", "", "", "", str(g.crossings())});
    int step = 0;
    while (!g.done()) {
        auto s = g.step();
        const Arc &a = cfg.arc(s.flip.removed), &b = cfg.arc(s.flip.inserted);
        r.rows.push_back({str(++step), str(a.a) + "-" + str(a.b), str(b.a) + "-" + str(b.b), str(s.decrease),
                          str(g.crossings())});
    }
    r.params.push_back({"length", str(step)});
    r.runtime_sec = since(t0);
    return r;
}

namespace {

struct GraphGeodesics {
    const PointConfig& cfg;
    const FlipGraph& g;

    // Geodesics from s to t as node sequences, given BFS distances to t.
    template <class F>
    std::uint64_t each(int s, const std::vector<int>& dt, std::uint64_t cap, bool& truncated, F&& f) const {
        std::vector<int> nodes{s};
        std::uint64_t produced = 0;
        std::function<bool(int)> rec = [&](int u) {
            if (dt[u] == 0) {
                if (produced >= cap) {
                    truncated = true;
                    return false;
                }
                ++produced;
                f(nodes);
                return true;
            }
            for (int k = g.begin(u); k < g.end(u); ++k) {
                int v = g.target(k);
                if (dt[v] != dt[u] - 1) continue;
                nodes.push_back(v);
                bool go = rec(v);
                nodes.pop_back();
                if (!go) return false;
            }
            return true;
        };
        rec(s);
        return produced;
    }

    FlipPath to_path(const std::vector<int>& nodes) const {
        std::vector<Triangulation> snaps;
        for (int v : nodes) snaps.push_back(g.node(v));
        return make_path(cfg, snaps);
    }
};

void audit_path(const PointConfig& cfg, const FlipPath& p, FlagAuditSummary& s) {
    ++s.geodesics;
    BlowUpComplex k(cfg, p);
    if (!flag_check(k).pass) ++s.flag_failures;
    if (!theorem1_scan(cfg, p).pass) ++s.triangle_failures;
}

}  // namespace

FlagAuditSummary flag_audit(const PointConfig& cfg, const FlagAuditOptions& opt) {
    FlagAuditSummary s;
    FlipGraph g = FlipGraph::build(cfg, greedy_triangulation(cfg), opt.limits);
    GraphGeodesics geo{cfg, g};
    if (opt.all_pairs) {
        for (int t = 0; t < g.size(); ++t) {
            auto dt = g.bfs(t);
            for (int src = 0; src <= t; ++src) {
                ++s.pairs;
                bool trunc = false;
                geo.each(src, dt, opt.max_paths, trunc,
                         [&](const std::vector<int>& nodes) { audit_path(cfg, geo.to_path(nodes), s); });
                s.truncated = s.truncated || trunc;
            }
        }
        return s;
    }
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < opt.samples; ++i) {
        int src = static_cast<int>(rng() % g.size()), t = static_cast<int>(rng() % g.size());
        auto dt = g.bfs(t);
        // path counts to t over the geodesic subgraph
        std::vector<double> cnt(g.size(), 0.0);
        std::vector<int> order;
        for (int v = 0; v < g.size(); ++v) order.push_back(v);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return dt[a] < dt[b]; });
        for (int v : order) {
            if (dt[v] == 0) {
                cnt[v] = 1.0;
                continue;
            }
            for (int k = g.begin(v); k < g.end(v); ++k)
                if (dt[g.target(k)] == dt[v] - 1) cnt[v] += cnt[g.target(k)];
        }
        std::vector<int> nodes{src};
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        while (dt[nodes.back()] > 0) {
            int u = nodes.back();
            double x = unit(rng) * cnt[u];
            int pick = -1;
            for (int k = g.begin(u); k < g.end(u); ++k) {
                int v = g.target(k);
                if (dt[v] != dt[u] - 1) continue;
                pick = v;
                x -= cnt[v];
                if (x < 0) break;
            }
            nodes.push_back(pick);
        }
        ++s.pairs;
        audit_path(cfg, geo.to_path(nodes), s);
    }
    return s;
}

Report run_flag_audit(const PointConfig& cfg, const FlagAuditOptions& opt) {
    auto t0 = Clock::now();
    Report r;
    r.id = "flag-audit";
    r.params = {{"pairs", opt.all_pairs ? "all" : "sample"},
                {"samples", str(opt.samples)},
                {"seed", std::to_string(opt.seed)},
                {"max_paths", std::to_string(opt.max_paths)}};
    r.columns = {"points", "pairs", "geodesics", "flag_failures", "triangle_failures", "truncated"};
    auto s = flag_audit(cfg, opt);
    r.rows.push_back({str(cfg.size()), str(s.pairs), str(s.geodesics), str(s.flag_failures), str(s.triangle_failures),
                      s.truncated ? "true" : "false"});
    r.truncated = s.truncated;
    r.checks.push_back({"no_counterexamples", s.flag_failures == 0 && s.triangle_failures == 0});
    r.runtime_sec = since(t0);
    return r;
}

std::vector<ConvexityRow> convexity_audit(const PointConfig& cfg, std::optional<int> eps, const Limits& lim) {
    FlipGraph g = FlipGraph::build(cfg, greedy_triangulation(cfg), lim);
    std::vector<ConvexityRow> rows;
    for (int e = 0; e < cfg.arc_count(); ++e) {
        if (cfg.is_boundary_arc(e)) continue;
        if (eps && *eps != e) continue;
        ConvexityRow row;
        row.eps = e;
        std::vector<char> mask(cfg.arc_count(), 0);
        mask[e] = 1;
        std::vector<int> members;
        for (int v = 0; v < g.size(); ++v)
            if (g.node(v).contains(e)) members.push_back(v);
        for (std::size_t i = 0; i < members.size(); ++i) {
            auto full = g.bfs(members[i]);
            auto con = g.bfs(members[i], &mask);
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                int t = members[j];
                ++row.pairs;
                int gap = con[t] < 0 ? -1 : con[t] - full[t];
                if (gap != 0) {
                    ++row.violations;
                    row.max_gap = std::max(row.max_gap, gap);
                }
            }
        }
        rows.push_back(row);
    }
    return rows;
}

Report run_convexity_audit(const PointConfig& cfg, std::optional<int> eps, const Limits& lim) {
    auto t0 = Clock::now();
    Report r;
    r.id = "convexity-audit";
    r.params = {{"eps", eps ? str(cfg.arc(*eps).a) + "-" + str(cfg.arc(*eps).b) : "all"}};
    r.columns = {"eps", "pairs", "violations", "max_gap"};
    long long total = 0;
    try {
        for (const auto& row : convexity_audit(cfg, eps, lim)) {
            r.rows.push_back({str(cfg.arc(row.eps).a) + "-" + str(cfg.arc(row.eps).b), str(row.pairs),
                              str(row.violations), str(row.max_gap)});
            total += row.violations;
        }
    } catch (const ResourceError& e) {
        r.truncated = true;
        r.rows.push_back({"cap-exceeded", "0", "0", "0"});
    }
    r.params.push_back({"total_violations", str(total)});
    r.runtime_sec = since(t0);
    return r;
}

ProjectionLawSummary projection_law_audit(const PointConfig& cfg, int walks_per_projector, int walk_length,
                                          std::uint64_t seed, const Limits& lim) {
    ProjectionLawSummary s;
    auto g = FlipGraph::build(cfg, greedy_triangulation(cfg), lim);
    std::vector<std::vector<FlipResult>> flips(g.size());
    for (int i = 0; i < g.size(); ++i) {
        Mesh m(cfg, g.node(i));
        for (int k = g.begin(i); k < g.end(i); ++k) flips[i].push_back(*m.flip_info(g.removed(k)));
    }
    std::mt19937_64 rng(seed);
    auto walk = [&](int len) {
        std::vector<int> nodes{static_cast<int>(rng() % g.size())};
        for (int i = 0; i < len; ++i) {
            int u = nodes.back();
            nodes.push_back(g.target(g.begin(u) + static_cast<int>(rng() % (g.end(u) - g.begin(u)))));
        }
        std::vector<Triangulation> snaps;
        for (int v : nodes) snaps.push_back(g.node(v));
        return make_path(cfg, snaps);
    };
    auto check_paths = [&](const Projector& proj) {
        for (int w = 0; w < walks_per_projector; ++w) {
            auto p = walk(walk_length);
            auto q = project_path(cfg, p, proj);
            ++s.path_checks;
            if (q.length() > p.length() || !(q.snapshots.front() == proj(p.snapshots.front())) ||
                !(q.snapshots.back() == proj(p.snapshots.back())))
                ++s.path_violations;
        }
    };
    auto check_edges = [&](const Projector& proj, const std::function<bool(const FlipResult&)>& collapses,
                           long long& checks, long long& violations) {
        std::vector<Triangulation> image;
        image.reserve(g.size());
        for (int i = 0; i < g.size(); ++i) image.push_back(proj(g.node(i)));
        for (int i = 0; i < g.size(); ++i)
            for (int k = g.begin(i); k < g.end(i); ++k) {
                int j = g.target(k);
                if (j < i) continue;
                bool eq = image[i] == image[j];
                bool adjacent = !eq && difference_count(image[i], image[j]) == 1;
                ++checks;
                if (!(eq || adjacent) || eq != collapses(flips[i][k - g.begin(i)])) ++violations;
            }
    };
    for (int eps = 0; eps < cfg.arc_count(); ++eps) {
        if (cfg.is_boundary_arc(eps)) continue;
        for (int x : {cfg.arc(eps).a, cfg.arc(eps).b}) {
            Projector pa = [&, eps, x](const Triangulation& t) { return project_arc(cfg, t, eps, x); };
            check_edges(pa, [&](const FlipResult& f) { return arc_projection_collapses(cfg, f, eps, x); },
                        s.arc_checks, s.arc_violations);
            check_paths(pa);
            for (bool left : {true, false}) {
                RegionSpec r;
                r.eps = eps;
                r.left = left;
                r.has_fixed_inner = true;
                for (auto& fi : region_triangulations(cfg, r)) {
                    r.fixed_inner = fi;
                    Projector pr = [&, r, x](const Triangulation& t) { return project_region(cfg, t, r, x); };
                    check_edges(pr, [&](const FlipResult& f) { return region_projection_collapses(cfg, f, r, x); },
                                s.region_checks, s.region_violations);
                    check_paths(pr);
                }
            }
        }
    }
    return s;
}

Report run_convexity_pair(const PointConfig& cfg, const Triangulation& t1, const Triangulation& t2, int eps,
                          std::optional<int> known_upper_bound, const Limits& lim) {
    auto t0 = Clock::now();
    Report r;
    r.id = "convexity-pair";
    r.params = {{"eps", str(cfg.arc(eps).a) + "-" + str(cfg.arc(eps).b)},
                {"max_nodes", std::to_string(lim.max_nodes)}};
    r.columns = {"quantity", "value", "status"};
    if (known_upper_bound) r.rows.push_back({"constrained_upper_bound", str(*known_upper_bound), "constructive"});
    r.rows.push_back({"symmetric_difference", str(difference_count(t1, t2)), "exact"});
    for (bool constrained : {false, true}) {
        const char* name = constrained ? "constrained_distance" : "distance";
        try {
            Frozen f;
            if (constrained) f.push_back(eps);
            r.rows.push_back({name, str(distance(cfg, t1, t2, f, lim)), "exact"});
        } catch (const ResourceError&) {
            r.truncated = true;
            r.rows.push_back({name, "", "cap-exceeded"});
        }
    }
    r.runtime_sec = since(t0);
    return r;
}

std::vector<RatioRow> ratio_sweep(const std::vector<int>& ms, const std::vector<TieRule>& rules) {
    std::vector<RatioRow> out;
    for (int m : ms) {
        if (m < 1) throw PreconditionError("ratio sweep needs m >= 1");
        const int n = m * (7 * m + 5);
        Family8Instance inst = build_family8(n, m);
        auto a = a_sets(inst, inst.t_minus);
        std::vector<char> in_a(inst.config.arc_count(), 0);
        for (int id : a.a_f) in_a[id] = 1;
        for (int id : a.a_p) in_a[id] = 1;
        for (TieRule rule : rules) {
            RatioRow row;
            row.m = m;
            row.n = n;
            row.points = inst.config.size();
            row.d_formula = inst.distance_formula();
            std::vector<int> removed;
            row.h = greedy_length(inst.config, inst.t_minus, inst.t_plus, rule, &removed);
            while (row.a_prefix < static_cast<int>(removed.size()) && in_a[removed[row.a_prefix]]) ++row.a_prefix;
            row.ratio = static_cast<double>(row.h) / row.d_formula;
            row.bound = 1.0 + static_cast<double>(n - 7 * m - 5) / row.d_formula;
            row.rule = rule;
            row.symmetric_difference = difference_count(inst.t_minus, inst.t_plus);
            out.push_back(row);
        }
    }
    return out;
}

Report run_ratio(const std::vector<int>& ms, const std::vector<TieRule>& rules) {
    auto t0 = Clock::now();
    Report r;
    r.id = "ratio";
    std::string ml, rl;
    for (int m : ms) ml += (ml.empty() ? "" : ",") + str(m);
    for (TieRule t : rules) rl += (rl.empty() ? "" : ",") + tie_rule_name(t);
    r.params = {{"family", "8"}, {"m_list", ml}, {"tie", rl}};
    r.columns = {"m", "n", "N", "D_formula", "H", "ratio", "paper_lower_bound_ratio", "tie_rule"};
    bool consistent = true, meets = true;
    for (const auto& row : ratio_sweep(ms, rules)) {
        r.rows.push_back({str(row.m), str(row.n), str(row.points), str(row.d_formula), str(row.h), format_ratio(row.ratio),
                          format_ratio(row.bound), tie_rule_name(row.rule)});
        consistent = consistent && row.h >= row.symmetric_difference;
        // H / D >= 1 + (n - 7m - 5) / D in integers
        meets = meets && row.h >= row.d_formula + row.n - 7 * row.m - 5;
    }
    r.checks.push_back({"H_at_least_symmetric_difference", consistent});
    r.checks.push_back({"ratio_at_least_bound", meets});
    r.runtime_sec = since(t0);
    return r;
}

namespace {

void write_file(const std::filesystem::path& p, const std::string& s) {
    std::ofstream out(p);
    if (!out) throw Error("cannot write " + p.string());
    out << s;
}

std::string labels_text(const Labels& labels, const std::vector<int>* vmap = nullptr) {
    std::vector<std::pair<int, std::string>> v;
    for (const auto& [k, i] : labels) v.push_back({vmap ? (*vmap)[i] : i, k});
    std::sort(v.begin(), v.end());
    std::string s;
    for (const auto& [i, k] : v) s += k + " " + std::to_string(i) + "\n";
    return s;
}

}  // namespace

Report run_construct(int family, int n, int m, std::optional<int> flats_kept, const std::string& dir) {
    auto t0 = Clock::now();
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    Report r;
    r.id = "construct";
    r.params = {{"family", str(family)}, {"n", str(n)}, {"m", str(m)}};
    r.columns = {"file", "content"};
    auto emit = [&](const std::string& name, const std::string& text, const std::string& what) {
        write_file(fs::path(dir) / name, text);
        r.rows.push_back({name, what});
    };
    if (family == 8) {
        if (flats_kept) throw PreconditionError("punctures apply to family 6 only");
        auto inst = build_family8(n, m);
        emit("config.txt", format_config(inst.config), str(inst.config.size()) + " points");
        emit("t_minus.txt", format_triangulation(inst.config, inst.t_minus) + "\n", "T^-");
        emit("t_plus.txt", format_triangulation(inst.config, inst.t_plus) + "\n", "T^+");
        emit("labels.txt", labels_text(inst.labels), "vertex labels");
    } else if (family == 6) {
        auto inst = build_family6(n, m);
        const Arc& eta = inst.config.arc(inst.eta);
        if (!flats_kept || *flats_kept == 2) {
            emit("config.txt", format_config(inst.config), str(inst.config.size()) + " points");
            emit("t_minus.txt", format_triangulation(inst.config, inst.t_minus) + "\n", "T^-");
            emit("t_plus.txt", format_triangulation(inst.config, inst.t_plus) + "\n", "T^+");
            emit("labels.txt", labels_text(inst.labels), "vertex labels");
            emit("eta.txt", str(eta.a) + "-" + str(eta.b) + "\n", "eta");
            std::string path;
            for (const auto& t : inst.full_path().snapshots) path += format_triangulation(inst.config, t) + "\n";
            emit("path.txt", path, "constructive path of length " + str(inst.full_path().length()));
        } else {
            auto p = perturb_flats_to_punctures(inst, *flats_kept);
            r.params.push_back({"punctures", str(p.punctures)});
            const Arc& e = p.config.arc(p.eta);
            emit("config.txt", format_config(p.config), str(p.config.size()) + " points");
            emit("t_minus.txt", format_triangulation(p.config, p.t_minus) + "\n", "T^-");
            emit("t_plus.txt", format_triangulation(p.config, p.t_plus) + "\n", "T^+");
            emit("labels.txt", labels_text(inst.labels, &p.vertex_map), "vertex labels");
            emit("eta.txt", str(e.a) + "-" + str(e.b) + "\n", "eta");
            std::string path;
            for (const auto& t : inst.full_path().snapshots) path += format_triangulation(p.config, p.transport(t)) + "\n";
            emit("path.txt", path, "transported constructive path");
        }
    } else {
        throw PreconditionError("family must be 6 or 8");
    }
    r.runtime_sec = since(t0);
    return r;
}

}  // namespace flipgraph
