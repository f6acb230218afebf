#pragma once

#include <optional>

#include "dimforce/families.hpp"
#include "dimforce/forcing.hpp"
#include "dimforce/graph.hpp"
#include "dimforce/resolvability.hpp"
#include "dimforce/tree_theory.hpp"

namespace dimforce {

/// Size ceilings for the expensive operations. Exceeding one raises an error
/// rather than silently running forever.
struct Caps {
    int brute = kDefaultBruteCap;              // dim / Z subset search
    int path_cover = kDefaultPathCoverCap;     // subset DP
    int enumerate_all = kDefaultEnumerateCap;  // all_connected
};

/// Applies DIMFORCE_CAPS on top of `base`. Accepts a bare integer (brute cap)
/// or `brute=N,pathcover=N,enum=N` in any subset/order.
Caps caps_from_env(Caps base);

enum class DimMethod { Bruteforce, Formula, Both };

struct ComputeOptions {
    DimMethod method = DimMethod::Bruteforce;
    bool with_path_cover = false;
    bool with_timing = true;
    Caps caps;
};

struct BoundCheck {
    std::string name;
    std::string detail;
    bool holds = true;
    bool conjecture = false;  // conjectural bounds report but never fail a run
};

/// Everything `compute` reports about one graph.
struct ParameterReport {
    Graph graph;
    std::string graph6;
    GraphClass cls;
    int delta = 0;
    int sigma = 0;
    int ex = 0;
    int dim = 0;
    VertexSet dim_witness;
    std::string dim_method;
    int z = 0;
    VertexSet z_witness;
    std::optional<PathCoverResult> path_cover;
    std::optional<bool> tree_dim_equals_z;      // trees only
    std::optional<bool> even_cycle_free;        // small graphs only
    std::optional<int> even_cycle_rank;         // ditto, and only if cheap
    std::vector<Edge> twin_pairs;
    std::vector<BoundCheck> bounds;
    double ms = 0;
};

ParameterReport compute_report(const Graph& g, const ComputeOptions& opt);
std::string report_to_json(const ParameterReport& r, bool with_timing);

struct CheckOutcome {
    std::string name;
    bool theorem = true;  // false: findings-only, never fails a sweep
    long checked = 0;
    long skipped = 0;     // graphs beyond a cap for this check
    long violations = 0;
    std::vector<std::string> violation_details;  // first few only
    std::vector<std::string> findings;
};

struct SweepResult {
    std::string corpus;
    long graphs = 0;
    int workers = 1;
    Caps caps;
    std::vector<CheckOutcome> checks;
    double ms = 0;

    bool ok() const;  // no theorem check has violations
};

/// Check names usable with run_graph_checks; empty selection means all.
std::vector<std::string> graph_check_names();
std::vector<std::string> pair_check_names();  // for the tree-plus-edge sweep

SweepResult run_graph_checks(const std::vector<Graph>& corpus, const std::string& corpus_name,
                             std::vector<std::string> names, const Caps& caps, int workers);

/// Every tree on 3..n_max vertices with every possible extra edge: dimension
/// bounds against the tree, the Z + 1 bound, construction soundness, plus
/// findings (where the bounds are tight, where ex grows).
SweepResult t_plus_e_sweep(int n_max, const Caps& caps, int workers,
                           std::vector<std::string> names = {});

/// dim <= Z + cycle rank over a corpus; violations are re-derived with an
/// independent subset enumeration order before being reported.
SweepResult cycle_rank_conjecture_check(const std::vector<Graph>& corpus, const Caps& caps,
                                        int workers);

/// Extremes of Z - dim and dim - Z over a corpus, plus any graphs without
/// even cycles where dim exceeds Z.
SweepResult divergence_search(const std::vector<Graph>& corpus, const Caps& caps, int workers);

std::string sweep_to_json(const SweepResult& s, bool with_timing);
std::string sweep_to_csv(const SweepResult& s);

// ---------------- fixed verification suite ----------------

struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0;
};

struct SuiteResult {
    std::vector<SuiteCheck> checks;
    bool all_pass = true;
};

/// The full regression suite: known family values, formula-vs-bruteforce
/// sweeps, bound sweeps, construction soundness, and the property batteries.
/// size_clamp > 0 lowers every corpus ceiling to at most that n (values below
/// 6 can starve the witness-existence sub-checks).
SuiteResult verify_paper_suite(int size_clamp = 0, int workers = 1);
std::string suite_to_json(const SuiteResult& s, bool with_timing);

/// Known (dim, Z) regression values; run_fixture_cases recomputes both by
/// brute force and reports mismatches, so a corrupted table is caught.
struct FixtureCase {
    std::string name;
    Graph graph;
    int dim = 0;
    int z = 0;
};
std::vector<FixtureCase> fixture_cases();
std::vector<std::string> run_fixture_cases(const std::vector<FixtureCase>& cases, const Caps& caps);

// ---------------- even-cycle reporting helpers ----------------

/// Cycle enumeration with early exit; capped at n = 12.
bool has_even_cycle(const Graph& g);

/// Fewest edge deletions leaving no even cycle, by exhaustive subset search.
/// Returns nullopt when the budget (number of subsets tried) runs out.
std::optional<int> even_cycle_rank(const Graph& g, long budget = 2000000);

}  // namespace dimforce
