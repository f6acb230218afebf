#include <algorithm>
#include <cstdlib>

#include "dimforce/checks.hpp"
#include "dimforce/families.hpp"
#include "dimforce/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace dimforce;

TEST_CASE("caps come from the environment when set") {
    unsetenv("DIMFORCE_CAPS");
    Caps base;
    CHECK(caps_from_env(base).brute == base.brute);

    setenv("DIMFORCE_CAPS", "14", 1);
    CHECK(caps_from_env(base).brute == 14);

    setenv("DIMFORCE_CAPS", "brute=18,pathcover=10,enum=6", 1);
    Caps parsed = caps_from_env(base);
    CHECK(parsed.brute == 18);
    CHECK(parsed.path_cover == 10);
    CHECK(parsed.enumerate_all == 6);

    setenv("DIMFORCE_CAPS", "bogus=3", 1);
    CHECK_THROWS_AS(caps_from_env(base), std::invalid_argument);
    setenv("DIMFORCE_CAPS", "not_a_number", 1);
    CHECK_THROWS_AS(caps_from_env(base), std::invalid_argument);
    unsetenv("DIMFORCE_CAPS");
}

TEST_CASE("compute_report fills parameters and bound checks") {
    ComputeOptions opt;
    opt.with_path_cover = true;
    ParameterReport r = compute_report(grid_graph(3, 3), opt);
    CHECK(r.dim == 2);
    CHECK(r.z == 3);
    CHECK(r.cls.kind == GraphKind::Cyclic);
    CHECK(r.dim_method == "bruteforce");
    REQUIRE(r.path_cover.has_value());
    for (const BoundCheck& b : r.bounds) CHECK(b.holds);
    bool saw_conjecture = false;
    for (const BoundCheck& b : r.bounds) saw_conjecture = saw_conjecture || b.conjecture;
    CHECK(saw_conjecture);
}

TEST_CASE("compute_report method switches") {
    ComputeOptions formula;
    formula.method = DimMethod::Formula;
    ParameterReport r = compute_report(spider({2, 2, 2}), formula);
    CHECK(r.dim == 2);
    CHECK(r.dim_method == "formula");
    CHECK(r.dim_witness == VertexSet{4, 6});
    CHECK_THROWS_AS(compute_report(cycle_graph(5), formula), std::invalid_argument);

    ComputeOptions both;
    both.method = DimMethod::Both;
    ParameterReport rb = compute_report(spider({2, 2, 2}), both);
    CHECK(rb.dim_method == "both");
    bool formula_checked = false;
    for (const BoundCheck& b : rb.bounds)
        if (b.name == "tree_formula") {
            formula_checked = true;
            CHECK(b.holds);
        }
    CHECK(formula_checked);
}

TEST_CASE("report JSON is valid and deterministic without timing") {
    ComputeOptions opt;
    ParameterReport r = compute_report(c4_bouquet(1), opt);
    std::string a = report_to_json(r, false);
    std::string b = report_to_json(compute_report(c4_bouquet(1), opt), false);
    CHECK(a == b);
    nlohmann::json j = nlohmann::json::parse(a);
    CHECK(j["dim"]["value"] == 3);
    CHECK(j["z"]["value"] == 2);
    CHECK(j["class"]["kind"] == "unicyclic");
    CHECK(j["graph"]["graph6"].is_string());
    CHECK_FALSE(j.contains("timing_ms"));
    CHECK(nlohmann::json::parse(report_to_json(r, true)).contains("timing_ms"));
}

TEST_CASE("run_graph_checks finds no violations on small corpora") {
    std::vector<Graph> corpus;
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : all_connected_graphs(n)) corpus.push_back(g);
    Caps caps;
    SweepResult sweep = run_graph_checks(corpus, "small", {}, caps, 2);
    CHECK(sweep.ok());
    CHECK(sweep.graphs == static_cast<long>(corpus.size()));
    for (const CheckOutcome& c : sweep.checks) CHECK(c.violations == 0);
    // every registered check ran on at least one graph
    for (const CheckOutcome& c : sweep.checks)
        if (c.name != "zfs_audit") CHECK(c.checked > 0);

    CHECK_THROWS_WITH_AS(run_graph_checks(corpus, "x", {"no_such_check"}, caps, 1),
                         doctest::Contains("unknown check"), std::invalid_argument);
}

TEST_CASE("sweep JSON and CSV carry the outcome") {
    Caps caps;
    SweepResult sweep = run_graph_checks({cycle_graph(5), star_graph(3)}, "demo",
                                         {"min_degree", "cycle_rank_conjecture"}, caps, 1);
    nlohmann::json j = nlohmann::json::parse(sweep_to_json(sweep, false));
    CHECK(j["ok"] == true);
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][0]["name"] == "min_degree");
    std::string csv = sweep_to_csv(sweep);
    CHECK(csv.find("check,theorem,") == 0);
    CHECK(csv.find("min_degree") != std::string::npos);
}

TEST_CASE("tree-plus-edge sweep holds and is finding-rich") {
    Caps caps;
    SweepResult sweep = t_plus_e_sweep(6, caps, 2);
    CHECK(sweep.ok());
    long constructions = 0;
    bool tight_seen = false;
    for (const CheckOutcome& c : sweep.checks) {
        CHECK(c.violations == 0);
        if (c.name == "construction") constructions = c.checked;
        if (c.name == "cycle_findings") {
            CHECK_FALSE(c.theorem);
            for (const std::string& f : c.findings)
                tight_seen = tight_seen || f.find("dim = Z + 1") != std::string::npos;
        }
    }
    CHECK(constructions > 0);
    CHECK(tight_seen);  // the single four-cycle bouquet minus a cycle edge gives dim = Z + 1 at n = 6
}

TEST_CASE("divergence search reports both directions of the gap") {
    std::vector<Graph> corpus = {grid_graph(3, 3), c4_bouquet(1), path_graph(5), cycle_graph(6)};
    Caps caps;
    SweepResult sweep = divergence_search(corpus, caps, 1);
    REQUIRE(sweep.checks.size() == 1);
    const CheckOutcome& out = sweep.checks[0];
    bool z_gap = false, dim_gap = false;
    for (const std::string& f : out.findings) {
        if (f.find("max Z - dim = 1") != std::string::npos) z_gap = true;   // the 3x3 grid
        if (f.find("max dim - Z = 1") != std::string::npos) dim_gap = true; // the bouquet
    }
    CHECK(z_gap);
    CHECK(dim_gap);
}

TEST_CASE("even cycle detection and rank") {
    CHECK_FALSE(has_even_cycle(cycle_graph(5)));
    CHECK_FALSE(has_even_cycle(complete_graph(3)));
    CHECK_FALSE(has_even_cycle(path_graph(6)));
    CHECK(has_even_cycle(cycle_graph(4)));
    CHECK(has_even_cycle(complete_graph(4)));
    CHECK(has_even_cycle(grid_graph(2, 3)));
    CHECK_THROWS_AS(has_even_cycle(path_graph(11)), std::invalid_argument);

    CHECK(even_cycle_rank(cycle_graph(5), 1000) == 0);
    CHECK(even_cycle_rank(cycle_graph(6), 1000) == 1);
    CHECK(even_cycle_rank(complete_graph(4), 10000) == 2);
    CHECK(even_cycle_rank(c4_bouquet(2), 100000) == 2);
    CHECK_FALSE(even_cycle_rank(c4_bouquet(2), 3).has_value());  // budget exhausted
}

TEST_CASE("fixture table matches fresh computation") {
    Caps caps;
    CHECK(run_fixture_cases(fixture_cases(), caps).empty());

    // negative control: corrupt one expectation and the harness must say so
    std::vector<FixtureCase> broken = fixture_cases();
    broken[0].dim = 4;
    std::vector<std::string> failures = run_fixture_cases(broken, caps);
    REQUIRE(failures.size() == 1);
    CHECK(failures[0].find(broken[0].name) != std::string::npos);
    CHECK(failures[0].find("expected 4") != std::string::npos);
}

TEST_CASE("the clamped verification suite passes end to end") {
    SuiteResult suite = verify_paper_suite(5, 2);
    CHECK(suite.all_pass);
    REQUIRE(suite.checks.size() == 11);
    const std::vector<std::string> expected = {
        "extremal-families",        "tree-dimension-formula", "tree-forcing-path-cover",
        "dim-equals-Z-characterization", "cycle-edge-bounds",  "construction-soundness",
        "deletion-stability",       "bouquet-family",         "grid-divergence",
        "cycle-rank-conjecture",    "property-suites"};
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(suite.checks[i].name == expected[i]);
    for (const SuiteCheck& c : suite.checks) CHECK(c.pass);

    nlohmann::json j = nlohmann::json::parse(suite_to_json(suite, true));
    CHECK(j["all_pass"] == true);
    CHECK(j["checks"].size() == 11);
}
