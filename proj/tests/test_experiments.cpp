#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "flipgraph/constructions.hpp"
#include "flipgraph/errors.hpp"
#include "flipgraph/experiments.hpp"

using namespace flipgraph;

TEST_CASE("enumerate report") {
    auto r = run_enumerate(convex_polygon(12));
    REQUIRE(r.rows.size() == 1);
    CHECK(to_csv(r).find("16796") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    auto h = convex_polygon(7);
    FlagAuditOptions opt;
    opt.all_pairs = false;
    opt.samples = 30;
    opt.seed = 42;
    auto a = run_flag_audit(h, opt), b = run_flag_audit(h, opt);
    CHECK(to_csv(a) == to_csv(b));
    opt.seed = 43;
    CHECK(run_flag_audit(h, opt).checks == a.checks);
    CHECK(to_csv(run_ratio({2}, all_tie_rules())) == to_csv(run_ratio({2}, all_tie_rules())));
}

TEST_CASE("ratio row for m = 2") {
    auto r = run_ratio({2}, {TieRule::LexRemoved});
    REQUIRE(r.rows.size() == 1);
    const auto& row = r.rows[0];
    CHECK(r.columns == std::vector<std::string>{"m", "n", "N", "D_formula", "H", "ratio", "paper_lower_bound_ratio",
                                                "tie_rule"});
    CHECK(row[0] == "2");
    CHECK(row[1] == "38");
    CHECK(row[2] == "90");
    CHECK(row[3] == "96");
    CHECK(std::stod(row[6]) == doctest::Approx(115.0 / 96.0).epsilon(1e-6));
    CHECK(std::stoi(row[4]) >= 96 + 19);
    for (const auto& [name, ok] : r.checks) CHECK_MESSAGE(ok, name);
    auto rows = ratio_sweep({2, 3}, {TieRule::LexRemoved});
    CHECK(rows[1].bound > rows[0].bound);
    CHECK(rows[0].a_prefix > 0);
}

TEST_CASE("flag audit on the heptagon") {
    FlagAuditOptions opt;
    auto s = flag_audit(convex_polygon(7), opt);
    CHECK(s.pairs == 42 * 43 / 2);
    CHECK(s.geodesics >= s.pairs);
    CHECK(s.flag_failures == 0);
    CHECK(s.triangle_failures == 0);
    CHECK_FALSE(s.truncated);
}

TEST_CASE("json output") {
    auto r = run_diameter(convex_polygon(7));
    auto j = nlohmann::json::parse(to_json(r));
    CHECK(j["experiment"] == "diameter");
    CHECK(j["rows"].size() == 1);
    CHECK(j.contains("runtime_sec"));
}

TEST_CASE("construct writes parseable files") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "flipgraph_construct_test";
    fs::remove_all(dir);
    run_construct(6, 1, 1, std::nullopt, dir.string());
    auto cfg = load_config((dir / "config.txt").string());
    auto inst = build_family6(1, 1);
    CHECK(cfg.size() == inst.config.size());
    std::ifstream in(dir / "t_minus.txt");
    std::string line;
    std::getline(in, line);
    CHECK(parse_triangulation(cfg, line) == inst.t_minus);
    CHECK(fs::exists(dir / "path.txt"));
    CHECK(fs::exists(dir / "eta.txt"));
    run_construct(6, 1, 1, 0, (dir / "p").string());
    CHECK(load_config((dir / "p" / "config.txt").string()).has_punctures());
    run_construct(8, 2, 1, std::nullopt, (dir / "f8").string());
    CHECK(load_config((dir / "f8" / "config.txt").string()).size() == 15);
    CHECK_THROWS_AS(run_construct(8, 2, 1, 1, (dir / "bad").string()), PreconditionError);
    fs::remove_all(dir);
}

TEST_CASE("convexity pair reports cap exhaustion") {
    auto inst = build_family6(1, 1);
    auto r = run_convexity_pair(inst.config, inst.t_minus, inst.t_plus, inst.eta, inst.upper_bound(), Limits{2000});
    CHECK(r.truncated);
    CHECK_FALSE(r.rows.empty());
}
