#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "dimforce/checks.hpp"
#include "dimforce/io.hpp"
#include "dimforce/subsets.hpp"
#include "json.hpp"

namespace dimforce {

namespace {

using nlohmann::json;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

int clamp_to(int wanted, int clamp) { return clamp > 0 ? std::min(wanted, clamp) : wanted; }

struct Tally {
    long pass = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (ok) ++pass;
        else if (failures.size() < 10) failures.push_back(what);
        else if (failures.size() == 10) failures.push_back("...");
    }

    SuiteCheck finish(const std::string& name, double ms, const std::string& extra = "") const {
        SuiteCheck c;
        c.name = name;
        c.pass = failures.empty();
        std::ostringstream d;
        if (c.pass) {
            d << pass << " checks";
            if (!extra.empty()) d << "; " << extra;
        } else {
            d << failures.size() << " failure(s): " << failures.front();
        }
        c.detail = d.str();
        c.ms = ms;
        return c;
    }
};

std::string ids(const VertexSet& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i]);
    }
    return s + "}";
}

// 1. Closed-form dimension and forcing values across the named families,
//    plus the fixture table of individually known graphs.
SuiteCheck crit_extremal_families(const Caps& caps, int clamp) {
    Timer t;
    Tally tally;
    auto both = [&](const Graph& g) {
        return std::pair{metric_dimension_bruteforce(g, caps.brute).dim,
                         zero_forcing_bruteforce(g, caps.brute).z};
    };
    for (int n = 2; n <= clamp_to(9, clamp); ++n) {
        auto [d, z] = both(path_graph(n));
        tally.expect(d == 1 && z == 1, "path n=" + std::to_string(n));
    }
    for (int n = 3; n <= clamp_to(9, clamp); ++n) {
        auto [d, z] = both(cycle_graph(n));
        tally.expect(d == 2 && z == 2, "cycle n=" + std::to_string(n));
    }
    for (int n = 2; n <= clamp_to(7, clamp); ++n) {
        auto [d, z] = both(complete_graph(n));
        tally.expect(d == n - 1 && z == n - 1, "complete n=" + std::to_string(n));
    }
    for (int s = 1; s <= 4; ++s)
        for (int tt = s; s + tt <= clamp_to(8, clamp); ++tt) {
            if (s + tt < 3) continue;
            auto [d, z] = both(complete_bipartite(s, tt));
            tally.expect(d == s + tt - 2 && z == s + tt - 2,
                         "bipartite " + std::to_string(s) + "," + std::to_string(tt));
        }
    long fixture_failures = 0;
    auto fixture = run_fixture_cases(fixture_cases(), caps);
    for (const auto& line : fixture) {
        ++fixture_failures;
        tally.expect(false, line);
    }
    std::string extra = "fixture table clean (" + std::to_string(fixture_cases().size()) + " cases)";
    if (fixture_failures > 0) extra.clear();
    return tally.finish("extremal-families", t.ms(), extra);
}

// 2. The terminal-count formula and the explicit basis construction agree
//    with exhaustive search on every tree up to the size limit.
SuiteCheck crit_tree_dimension_formula(const Caps& caps, int clamp, int workers) {
    Timer t;
    Tally tally;
    int n_max = std::min(clamp_to(12, clamp), caps.brute);
    std::vector<Graph> trees;
    for (int n = 2; n <= n_max; ++n)
        for (const Graph& g : all_free_trees(n)) trees.push_back(g);
    std::vector<std::string> errs(trees.size());
    std::atomic<long> passes{0};
    auto body = [&](std::size_t i) {
        const Graph& g = trees[i];
        DistanceMatrix dm = all_pairs_distances(g);
        StructuralProfile profile = structural_profile(g, dm);
        int formula = tree_metric_dimension(g);
        int brute = metric_dimension_bruteforce(g, caps.brute).dim;
        if (formula != brute) {
            errs[i] = "tree g6:" + write_graph6(g) + " formula " + std::to_string(formula) +
                      " != bruteforce " + std::to_string(brute);
            return;
        }
        if (classify(g).kind == GraphKind::Tree) {
            VertexSet basis = tree_basis_construction(g, profile);
            if (static_cast<int>(basis.size()) != brute ||
                !is_resolving(g, dm, basis).resolving) {
                errs[i] = "tree g6:" + write_graph6(g) + " constructed basis " + ids(basis) +
                          " is not a minimum resolving set";
                return;
            }
        }
        ++passes;
    };
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < std::max(1, workers); ++w)
        pool.emplace_back([&] {
            for (std::size_t i = cursor++; i < trees.size(); i = cursor++) body(i);
        });
    for (auto& th : pool) th.join();
    for (const auto& e : errs)
        if (!e.empty()) tally.expect(false, e);
    tally.pass = passes;
    return tally.finish("tree-dimension-formula", t.ms(),
                        std::to_string(trees.size()) + " trees");
}

// 3. On trees: dim <= Z, the path cover number equals Z, and the
//    endpoint-set construction produces a minimum forcing set.
SuiteCheck crit_tree_forcing(const Caps& caps, int clamp, int workers) {
    Timer t;
    Tally tally;
    int n_max = std::min({clamp_to(10, clamp), caps.brute, caps.path_cover});
    std::vector<Graph> trees;
    for (int n = 2; n <= n_max; ++n)
        for (const Graph& g : all_free_trees(n)) trees.push_back(g);
    std::vector<std::string> errs(trees.size());
    std::atomic<long> passes{0};
    auto body = [&](std::size_t i) {
        const Graph& g = trees[i];
        std::string id = "tree g6:" + write_graph6(g);
        StructuralProfile profile = structural_profile(g, all_pairs_distances(g));
        int dim = metric_dimension_bruteforce(g, caps.brute).dim;
        auto z = zero_forcing_bruteforce(g, caps.brute);
        auto pc = path_cover_bruteforce(g, caps.path_cover);
        if (dim > z.z) {
            errs[i] = id + " has dim > Z";
            return;
        }
        if (pc.p != z.z) {
            errs[i] = id + " has P=" + std::to_string(pc.p) + " != Z=" + std::to_string(z.z);
            return;
        }
        auto built = tree_zero_forcing_construction(g, profile, caps.path_cover);
        if (built.z != z.z || !is_zero_forcing(g, built.witness)) {
            errs[i] = id + " construction gave size " + std::to_string(built.z) +
                      " vs minimum " + std::to_string(z.z);
            return;
        }
        ++passes;
    };
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < std::max(1, workers); ++w)
        pool.emplace_back([&] {
            for (std::size_t i = cursor++; i < trees.size(); i = cursor++) body(i);
        });
    for (auto& th : pool) th.join();
    for (const auto& e : errs)
        if (!e.empty()) tally.expect(false, e);
    tally.pass = passes;
    return tally.finish("tree-forcing-path-cover", t.ms(),
                        std::to_string(trees.size()) + " trees");
}

// 4. The structural predicate (no interior degree-2 vertices and every major
//    vertex has >= 2 terminals; paths count) matches dim == Z exactly, and
//    witnesses from the minimum forcing set omit exactly one terminal path
//    per exterior major when the predicate holds.
SuiteCheck crit_characterization(const Caps& caps, int clamp, int workers) {
    Timer t;
    Tally tally;
    int n_max = std::min({clamp_to(12, clamp), caps.brute, 12});
    std::vector<Graph> trees;
    for (int n = 2; n <= n_max; ++n)
        for (const Graph& g : all_free_trees(n)) trees.push_back(g);
    std::vector<std::string> errs(trees.size());
    std::atomic<long> passes{0};
    std::atomic<long> equal_cases{0};
    auto body = [&](std::size_t i) {
        const Graph& g = trees[i];
        std::string id = "tree g6:" + write_graph6(g);
        DistanceMatrix dm = all_pairs_distances(g);
        StructuralProfile profile = structural_profile(g, dm);
        bool predicted = dim_equals_Z_tree_predicate(g, profile);
        int dim = metric_dimension_bruteforce(g, caps.brute).dim;
        auto z = zero_forcing_bruteforce(g, caps.brute);
        if (predicted != (dim == z.z)) {
            errs[i] = id + " predicate/" + std::string(predicted ? "true" : "false") +
                      " disagrees with dim=" + std::to_string(dim) + ", Z=" + std::to_string(z.z);
            return;
        }
        if (predicted && classify(g).kind == GraphKind::Tree) {
            ++equal_cases;
            auto audit = zfs_structure_audit(g, z.witness);
            if (!audit.ok) {
                errs[i] = id + " minimum forcing set fails the one-omitted-path audit";
                return;
            }
        }
        ++passes;
    };
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < std::max(1, workers); ++w)
        pool.emplace_back([&] {
            for (std::size_t i = cursor++; i < trees.size(); i = cursor++) body(i);
        });
    for (auto& th : pool) th.join();
    for (const auto& e : errs)
        if (!e.empty()) tally.expect(false, e);
    tally.pass = passes;
    return tally.finish("dim-equals-Z-characterization", t.ms(),
                        std::to_string(equal_cases.load()) + " trees with dim = Z audited");
}

// 5 + 6. One pass over every tree plus chord: the dimension stays within
//    [dim-2, dim+1] and never exceeds Z+1 (bounds), and the explicit
//    landmark construction resolves with at most dim(T)+1 vertices
//    (soundness). Both bounds must also be attained somewhere.
std::pair<SuiteCheck, SuiteCheck> crit_cycle_edges(const Caps& caps, int clamp, int workers) {
    Timer t;
    int n_max = std::min(clamp_to(9, clamp), caps.brute);
    SweepResult sweep = n_max >= 3
                            ? t_plus_e_sweep(n_max, caps, workers)
                            : SweepResult{};
    Tally bounds, sound;
    long grew = 0, tight = 0;
    for (const auto& chk : sweep.checks) {
        if (chk.name == "unicyclic_bounds") {
            bounds.pass += chk.checked - chk.violations;
            for (const auto& d : chk.violation_details) bounds.expect(false, d);
        } else if (chk.name == "dimZ_plus1") {
            bounds.pass += chk.checked - chk.violations;
            for (const auto& d : chk.violation_details) bounds.expect(false, d);
        } else if (chk.name == "construction") {
            sound.pass += chk.checked - chk.violations;
            for (const auto& d : chk.violation_details) sound.expect(false, d);
        } else if (chk.name == "cycle_findings") {
            for (const auto& f : chk.findings) {
                if (f.find("dim(T+e) = dim(T) + 1") != std::string::npos) ++grew;
                if (f.find("dim = Z + 1") != std::string::npos) ++tight;
            }
        }
    }
    if (n_max >= 4) bounds.expect(grew > 0, "no chord ever raised the dimension by one");
    if (n_max >= 6) bounds.expect(tight > 0, "dim = Z + 1 never attained");
    double ms = t.ms();
    SuiteCheck b = bounds.finish("cycle-edge-bounds", ms,
                                 std::to_string(sweep.graphs) + " tree+edge pairs; dim growth seen " +
                                     std::to_string(grew) + "x, dim=Z+1 seen " + std::to_string(tight) + "x");
    SuiteCheck c = sound.finish("construction-soundness", ms,
                                std::to_string(sweep.graphs) + " constructions verified");
    return {b, c};
}

// 7. Z moves by at most one under any single edge or vertex deletion.
SuiteCheck crit_deletion(const Caps& caps, int clamp, int workers) {
    Timer t;
    Tally tally;
    int n_max = clamp_to(6, clamp);
    std::vector<Graph> corpus;
    for (int n = 2; n <= n_max; ++n)
        for (const Graph& g : all_connected_graphs(n)) corpus.push_back(g);
    SweepResult sweep = run_graph_checks(corpus, "deletion", {"z_perturbation"}, caps, workers);
    for (const auto& chk : sweep.checks) {
        tally.pass += chk.checked - chk.violations;
        for (const auto& d : chk.violation_details) tally.expect(false, d);
    }
    return tally.finish("deletion-stability", t.ms(),
                        std::to_string(corpus.size()) + " graphs perturbed");
}

// 8. The bouquet of k four-cycles hits dim = 2k+1 and Z = k+1 at rank k.
SuiteCheck crit_bouquet(const Caps& caps, int clamp) {
    Timer t;
    Tally tally;
    for (int k = 1; k <= 3; ++k) {
        Graph g = c4_bouquet(k);
        if (clamp > 0 && g.n > clamp) break;
        if (g.n > caps.brute) break;
        GraphClass cls = classify(g);
        tally.expect(cls.cycle_rank == k, "bouquet k=" + std::to_string(k) + " wrong cycle rank");
        int dim = metric_dimension_bruteforce(g, caps.brute).dim;
        int z = zero_forcing_bruteforce(g, caps.brute).z;
        tally.expect(dim == 2 * k + 1, "bouquet k=" + std::to_string(k) + " dim=" +
                                           std::to_string(dim) + " != " + std::to_string(2 * k + 1));
        tally.expect(z == k + 1, "bouquet k=" + std::to_string(k) + " Z=" + std::to_string(z) +
                                     " != " + std::to_string(k + 1));
    }
    return tally.finish("bouquet-family", t.ms());
}

// 9. Square grids keep dim = 2 while Z grows with the side length.
SuiteCheck crit_grid(const Caps& caps, int clamp) {
    Timer t;
    Tally tally;
    for (int side = 3; side <= 4; ++side) {
        Graph g = grid_graph(side, side);
        if (clamp > 0 && g.n > clamp) break;
        if (g.n > caps.brute) break;
        int dim = metric_dimension_bruteforce(g, caps.brute).dim;
        int z = zero_forcing_bruteforce(g, caps.brute).z;
        tally.expect(dim == 2, "grid " + std::to_string(side) + "x" + std::to_string(side) +
                                   " dim=" + std::to_string(dim));
        tally.expect(z == side, "grid " + std::to_string(side) + "x" + std::to_string(side) +
                                    " Z=" + std::to_string(z));
    }
    return tally.finish("grid-divergence", t.ms());
}

// 10. dim <= Z + cycle rank across every connected graph up to the cap.
SuiteCheck crit_conjecture(const Caps& caps, int clamp, int workers) {
    Timer t;
    Tally tally;
    int n_max = clamp_to(std::min(7, caps.enumerate_all), clamp);
    std::vector<Graph> corpus;
    for (int n = 2; n <= n_max; ++n)
        for (const Graph& g : all_connected_graphs(n)) corpus.push_back(g);
    SweepResult sweep = cycle_rank_conjecture_check(corpus, caps, workers);
    long equality = 0;
    for (const auto& chk : sweep.checks) {
        tally.pass += chk.checked - chk.violations;
        for (const auto& d : chk.violation_details) tally.expect(false, d);
        for (const auto& f : chk.findings)
            if (f.find("meets dim = Z + r") != std::string::npos) ++equality;
    }
    return tally.finish("cycle-rank-conjecture", t.ms(),
                        "equality met " + std::to_string(equality) + "x");
}

// 11. Engine-level properties: closure is order independent, supersets of
//    resolving/forcing sets keep the property, every resolving set covers
//    every twin pair, and one-step global forcing implies resolving.
SuiteCheck crit_properties(const Caps& caps, int clamp, int workers) {
    Timer t;
    Tally tally;

    // (a) order independence of the forcing closure on random graphs
    {
        std::mt19937 seed_rng(12345);
        std::vector<std::pair<Graph, VertexSet>> samples;
        for (int i = 0; i < 200; ++i) {
            int n = 4 + static_cast<int>(seed_rng() % 9);
            std::vector<Edge> edges;
            for (int v = 1; v < n; ++v) {
                int parent = static_cast<int>(seed_rng() % v);
                edges.push_back({parent, v});
            }
            Graph tree = build_graph(n, edges);
            for (const Edge& e : complement_edges(tree))
                if (seed_rng() % 100 < 15) edges.push_back(e);
            Graph g = build_graph(n, edges);
            VertexSet s;
            for (int v = 0; v < n; ++v)
                if (seed_rng() % 100 < 30) s.push_back(v);
            samples.push_back({std::move(g), std::move(s)});
        }
        std::vector<std::string> errs(samples.size());
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < std::max(1, workers); ++w)
            pool.emplace_back([&] {
                for (std::size_t i = cursor++; i < samples.size(); i = cursor++) {
                    const auto& [g, s] = samples[i];
                    VertexSet reference = forcing_closure(g, s).final_black;
                    std::mt19937 rng(static_cast<unsigned>(1000 + i));
                    for (int round = 0; round < 100; ++round) {
                        VertexSet shuffled = forcing_closure_random_order(g, s, rng);
                        if (shuffled != reference) {
                            errs[i] = "closure of " + ids(s) + " on g6:" + write_graph6(g) +
                                      " depends on firing order";
                            return;
                        }
                    }
                }
            });
        for (auto& th : pool) th.join();
        long ok = 0;
        for (const auto& e : errs) {
            if (e.empty()) ++ok;
            else tally.expect(false, e);
        }
        tally.pass += ok;
    }

    // (b) supersets preserve both properties
    {
        int n_max = clamp_to(std::min(7, caps.enumerate_all), clamp);
        std::mt19937 rng(777);
        for (int n = 2; n <= n_max; ++n)
            for (const Graph& g : all_connected_graphs(n)) {
                DistanceMatrix dm = all_pairs_distances(g);
                VertexSet basis = metric_dimension_bruteforce(g, caps.brute).basis;
                VertexSet zset = zero_forcing_bruteforce(g, caps.brute).witness;
                bool good = true;
                for (int trial = 0; trial < 5 && good; ++trial) {
                    VertexSet wider = basis, zwider = zset;
                    for (int v = 0; v < g.n; ++v) {
                        if (rng() % 2 &&
                            std::find(wider.begin(), wider.end(), v) == wider.end())
                            wider.push_back(v);
                        if (rng() % 2 &&
                            std::find(zwider.begin(), zwider.end(), v) == zwider.end())
                            zwider.push_back(v);
                    }
                    std::sort(wider.begin(), wider.end());
                    std::sort(zwider.begin(), zwider.end());
                    if (!is_resolving(g, dm, wider).resolving) {
                        tally.expect(false, "superset " + ids(wider) + " of a basis stopped resolving on g6:" +
                                                write_graph6(g));
                        good = false;
                    }
                    if (good && !is_zero_forcing(g, zwider)) {
                        tally.expect(false, "superset " + ids(zwider) +
                                                " of a forcing set stopped forcing on g6:" + write_graph6(g));
                        good = false;
                    }
                }
                if (good) ++tally.pass;
            }
    }

    // (c) every resolving set covers every twin pair (exhaustive, small n)
    // (d) one-step global forcing implies resolving (exhaustive, small n)
    {
        int n_max = clamp_to(6, clamp);
        std::vector<Graph> corpus;
        for (int n = 2; n <= n_max; ++n)
            for (const Graph& g : all_connected_graphs(n)) corpus.push_back(g);
        SweepResult sweep =
            run_graph_checks(corpus, "properties", {"twin_obligation", "one_step_resolving"}, caps, workers);
        for (const auto& chk : sweep.checks) {
            tally.pass += chk.checked - chk.violations;
            for (const auto& d : chk.violation_details) tally.expect(false, d);
        }
    }

    return tally.finish("property-suites", t.ms());
}

}  // namespace

// ---------------- fixtures ----------------

std::vector<FixtureCase> fixture_cases() {
    std::vector<FixtureCase> cases;
    cases.push_back({"path_5", path_graph(5), 1, 1});
    cases.push_back({"path_9", path_graph(9), 1, 1});
    cases.push_back({"cycle_4", cycle_graph(4), 2, 2});
    cases.push_back({"cycle_6", cycle_graph(6), 2, 2});
    cases.push_back({"cycle_7", cycle_graph(7), 2, 2});
    cases.push_back({"complete_4", complete_graph(4), 3, 3});
    cases.push_back({"complete_6", complete_graph(6), 5, 5});
    cases.push_back({"bipartite_2_3", complete_bipartite(2, 3), 3, 3});
    cases.push_back({"bipartite_3_3", complete_bipartite(3, 3), 4, 4});
    cases.push_back({"star_5", star_graph(5), 4, 4});
    cases.push_back({"spider_2_2_2", spider({2, 2, 2}), 2, 2});
    cases.push_back({"grid_3_3", grid_graph(3, 3), 2, 3});
    cases.push_back({"grid_2_4", grid_graph(2, 4), 2, 2});
    cases.push_back({"bouquet_1", c4_bouquet(1), 3, 2});
    cases.push_back({"bouquet_2", c4_bouquet(2), 5, 3});
    // Two degree-3 hubs with leaf pairs, joined by a three-vertex middle path.
    cases.push_back({"double_spider",
                     build_graph(9, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {6, 8}}),
                     2, 3});
    return cases;
}

std::vector<std::string> run_fixture_cases(const std::vector<FixtureCase>& cases, const Caps& caps) {
    std::vector<std::string> failures;
    for (const auto& fc : cases) {
        int dim = metric_dimension_bruteforce(fc.graph, caps.brute).dim;
        int z = zero_forcing_bruteforce(fc.graph, caps.brute).z;
        if (dim != fc.dim)
            failures.push_back("case " + fc.name + ": dim expected " + std::to_string(fc.dim) +
                               ", got " + std::to_string(dim));
        if (z != fc.z)
            failures.push_back("case " + fc.name + ": Z expected " + std::to_string(fc.z) + ", got " +
                               std::to_string(z));
    }
    return failures;
}

// ---------------- suite ----------------

SuiteResult verify_paper_suite(int size_clamp, int workers) {
    Caps caps;  // library defaults; the clamp narrows corpora, not caps
    SuiteResult result;
    result.checks.push_back(crit_extremal_families(caps, size_clamp));
    result.checks.push_back(crit_tree_dimension_formula(caps, size_clamp, workers));
    result.checks.push_back(crit_tree_forcing(caps, size_clamp, workers));
    result.checks.push_back(crit_characterization(caps, size_clamp, workers));
    auto [bounds, sound] = crit_cycle_edges(caps, size_clamp, workers);
    result.checks.push_back(bounds);
    result.checks.push_back(sound);
    result.checks.push_back(crit_deletion(caps, size_clamp, workers));
    result.checks.push_back(crit_bouquet(caps, size_clamp));
    result.checks.push_back(crit_grid(caps, size_clamp));
    result.checks.push_back(crit_conjecture(caps, size_clamp, workers));
    result.checks.push_back(crit_properties(caps, size_clamp, workers));
    result.all_pass = true;
    for (const auto& c : result.checks) result.all_pass = result.all_pass && c.pass;
    return result;
}

std::string suite_to_json(const SuiteResult& s, bool with_timing) {
    json j;
    j["all_pass"] = s.all_pass;
    j["checks"] = json::array();
    for (const auto& c : s.checks) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        if (with_timing) jc["timing_ms"] = c.ms;
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

}  // namespace dimforce
