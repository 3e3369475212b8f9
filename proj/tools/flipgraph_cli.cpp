#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flipgraph/constructions.hpp"
#include "flipgraph/errors.hpp"
#include "flipgraph/experiments.hpp"

using namespace flipgraph;

namespace {

std::string read_or_inline(const std::string& s) {
    std::ifstream in(s);
    if (!in) return s;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int parse_arc(const PointConfig& cfg, const std::string& s) {
    auto dash = s.find('-');
    if (dash == std::string::npos) throw ParseError("arc must look like a-b: " + s);
    int id = cfg.arc_id(std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1)));
    if (id < 0) throw ParseError("invalid arc " + s);
    return id;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

void emit(const Report& r, const std::string& format, const std::string& out) {
    std::string body = format == "json" ? to_json(r) : to_csv(r);
    if (out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(out);
        if (!f) throw Error("cannot write " + out);
        f << body;
    }
    std::cerr << r.id << ": " << r.rows.size() << " rows, " << format_ratio(r.runtime_sec) << " s";
    if (r.truncated) std::cerr << ", TRUNCATED";
    std::cerr << '\n';
    for (const auto& [name, ok] : r.checks) std::cerr << "check " << name << ": " << (ok ? "ok" : "FAILED") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flip-graphs of polygon triangulations: exact distances, heuristics, audits and constructions"};
    app.require_subcommand(1);
    std::string format = "csv", out, config_path, from, to, require, tie = "lexicographic-removed", pairs = "all",
                eps = "all", m_list = "2,3,4,5";
    std::uint64_t seed = 0, max_paths = 1'000'000;
    std::size_t max_nodes = Limits{}.max_nodes;
    int samples = 1000, family = 8, n = 1, m = 1, punctures = -1;
    auto common = [&](CLI::App* sc, bool needs_config) {
        sc->add_option("--format", format, "csv (default) or json")->check(CLI::IsMember({"csv", "json"}));
        sc->add_option("--out", out, "output file (default stdout)");
        sc->add_option("--max-nodes", max_nodes, "node cap for flip-graph searches");
        if (needs_config) sc->add_option("--config", config_path, "point configuration file")->required();
    };

    auto* en = app.add_subcommand("enumerate", "count triangulations; columns: points,valid_arcs,triangulations");
    common(en, true);
    auto* di = app.add_subcommand("distance", "exact flip distance; columns: distance,crossings,symmetric_difference");
    common(di, true);
    for (auto* sc : {di}) {
        sc->add_option("--from", from, "triangulation text, file, or comb:<apex>")->required();
        sc->add_option("--to", to, "triangulation text, file, or comb:<apex>")->required();
        sc->add_option("--require", require, "comma-separated arcs that may not be flipped");
    }
    auto* dm = app.add_subcommand("diameter", "exact diameter; columns: points,triangulations,bfs_sources,diameter,from,to");
    common(dm, true);
    auto* he = app.add_subcommand("heuristic",
                                  "greedy crossing heuristic; columns: step,removed,inserted,decrease,crossings_after");
    common(he, true);
    he->add_option("--from", from)->required();
    he->add_option("--to", to)->required();
    he->add_option("--tie", tie, "lexicographic-removed | lexicographic-inserted | first-found");
    auto* fa = app.add_subcommand(
        "flag-audit", "flag and triangle-persistence checks over geodesics; columns: points,pairs,geodesics,flag_failures,"
                      "triangle_failures,truncated");
    common(fa, true);
    std::vector<std::string> pairs_args;
    fa->add_option("--pairs", pairs_args, "all | sample [N]")->expected(1, 2);
    fa->add_option("--samples", samples, "number of sampled pairs with --pairs sample");
    fa->add_option("--seed", seed, "random seed (default 0)");
    fa->add_option("--max-paths", max_paths, "geodesics enumerated per pair");
    auto* ca = app.add_subcommand("convexity-audit",
                                  "constrained vs unconstrained distances; columns: eps,pairs,violations,max_gap "
                                  "(with --from/--to: quantity,value,status)");
    common(ca, true);
    ca->add_option("--eps", eps, "arc a-b or all");
    ca->add_option("--from", from, "single pair mode: first triangulation");
    ca->add_option("--to", to, "single pair mode: second triangulation");
    auto* co = app.add_subcommand("construct", "write a family instance; columns: file,content");
    co->add_option("--family", family, "6 or 8")->required()->check(CLI::IsMember({6, 8}));
    co->add_option("--n", n)->required();
    co->add_option("--m", m)->required();
    co->add_option("--punctures", punctures, "family 6: number of flats kept (0, 1 or 2)");
    std::string dir;
    co->add_option("--out", dir, "output directory")->required();
    co->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    auto* ra = app.add_subcommand(
        "ratio", "heuristic overestimate on family 8 with n = m(7m+5); columns: m,n,N,D_formula,H,ratio,"
                 "paper_lower_bound_ratio,tie_rule");
    ra->add_option("--family", family)->check(CLI::IsMember({8}));
    ra->add_option("--m-list", m_list, "comma-separated m values");
    ra->add_option("--tie", tie, "tie rule or all");
    ra->add_option("--out", out, "output file (default stdout)");
    ra->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        Limits lim;
        lim.max_nodes = max_nodes;
        if (*co) {
            std::optional<int> kept;
            if (punctures >= 0) kept = punctures;
            emit(run_construct(family, n, m, kept, dir), format, "");
            return 0;
        }
        if (*ra) {
            std::vector<int> ms;
            for (const auto& s : split(m_list, ',')) ms.push_back(std::stoi(s));
            std::vector<TieRule> rules = tie == "all" ? all_tie_rules() : std::vector<TieRule>{parse_tie_rule(tie)};
            emit(run_ratio(ms, rules), format, out);
            return 0;
        }
        PointConfig cfg = load_config(config_path);
        auto tri = [&](const std::string& s) { return parse_triangulation(cfg, read_or_inline(s)); };
        if (*en) emit(run_enumerate(cfg, lim), format, out);
        else if (*di) {
            Frozen frozen;
            for (const auto& a : split(require, ',')) frozen.push_back(parse_arc(cfg, a));
            emit(run_distance(cfg, tri(from), tri(to), frozen, lim), format, out);
        } else if (*dm) emit(run_diameter(cfg, lim), format, out);
        else if (*he) emit(run_heuristic(cfg, tri(from), tri(to), parse_tie_rule(tie)), format, out);
        else if (*fa) {
            FlagAuditOptions opt;
            if (!pairs_args.empty()) pairs = pairs_args[0];
            if (pairs_args.size() == 2) {
                if (pairs != "sample") throw ParseError("a count is only allowed after --pairs sample");
                try {
                    samples = std::stoi(pairs_args[1]);
                } catch (const std::exception&) {
                    throw ParseError("bad sample count " + pairs_args[1]);
                }
            }
            opt.all_pairs = pairs == "all";
            if (!opt.all_pairs && pairs != "sample") throw ParseError("--pairs must be all or sample");
            opt.samples = samples;
            opt.seed = seed;
            opt.max_paths = max_paths;
            opt.limits = lim;
            Report r = run_flag_audit(cfg, opt);
            emit(r, format, out);
            for (const auto& c : r.checks)
                if (!c.second) return 3;
        } else if (*ca) {
            if (!from.empty() || !to.empty()) {
                if (from.empty() || to.empty() || eps == "all")
                    throw ParseError("single pair mode needs --from, --to and --eps");
                emit(run_convexity_pair(cfg, tri(from), tri(to), parse_arc(cfg, eps), std::nullopt, lim), format, out);
            } else {
                std::optional<int> e;
                if (eps != "all") e = parse_arc(cfg, eps);
                emit(run_convexity_audit(cfg, e, lim), format, out);
            }
        }
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
