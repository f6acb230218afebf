#include "dimforce/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

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

/// Index-parallel loop with deterministic result slots; worker exceptions are
/// collected and the first rethrown after the join.
template <class Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
    workers = std::max(1, workers);
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::mutex error_lock;
    std::string first_error;
    std::vector<std::thread> pool;
    int spawn = std::min<std::size_t>(workers, count);
    for (int w = 0; w < spawn; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = cursor++; i < count; i = cursor++) {
                try {
                    fn(i);
                } catch (const std::exception& err) {
                    std::lock_guard<std::mutex> hold(error_lock);
                    if (first_error.empty()) first_error = err.what();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (!first_error.empty()) throw std::runtime_error(first_error);
}

std::string join_ints(const VertexSet& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i]);
    }
    return s + "}";
}

std::string gid(const Graph& g) { return "g6:" + write_graph6(g); }

// ---------------- per-graph summary ----------------

struct Summary {
    const Graph* g = nullptr;
    GraphClass cls{};
    bool tree = false;
    bool path = false;
    int delta = 0;
    DistanceMatrix dm;
    StructuralProfile profile;
    std::optional<DimensionResult> dim;
    std::optional<ZeroForcingResult> z;
    std::optional<PathCoverResult> pc;
};

Summary summarize(const Graph& g, const Caps& caps) {
    Summary s;
    s.g = &g;
    s.cls = classify(g);
    s.tree = s.cls.kind == GraphKind::Path || s.cls.kind == GraphKind::Tree;
    s.path = s.cls.kind == GraphKind::Path;
    s.delta = min_degree(g);
    s.dm = all_pairs_distances(g);
    s.profile = structural_profile(g, s.dm);
    if (g.n >= 2 && g.n <= caps.brute) {
        s.dim = metric_dimension_bruteforce(g, caps.brute);
        s.z = zero_forcing_bruteforce(g, caps.brute);
    }
    if (g.n <= caps.path_cover) s.pc = path_cover_bruteforce(g, caps.path_cover);
    return s;
}

// ---------------- family recognizers (dim = n-2 characterization) ----------------

std::vector<VertexSet> graph_components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    int count = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = count;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.adj[u]) {
                if (comp[v] == -1) {
                    comp[v] = count;
                    stack.push_back(v);
                }
            }
        }
        ++count;
    }
    std::vector<VertexSet> out(count);
    for (int v = 0; v < g.n; ++v) out[comp[v]].push_back(v);
    return out;
}

bool component_is_clique(const Graph& g, const VertexSet& comp) {
    for (int v : comp)
        if (g.degree(v) != static_cast<int>(comp.size()) - 1) return false;
    return true;
}

bool component_is_star(const Graph& g, const VertexSet& comp) {
    if (comp.size() < 3) return false;  // size-2 stars are cliques already
    int centers = 0, leaves = 0;
    for (int v : comp) {
        if (g.degree(v) == static_cast<int>(comp.size()) - 1) ++centers;
        else if (g.degree(v) == 1) ++leaves;
    }
    return centers == 1 && leaves == static_cast<int>(comp.size()) - 1;
}

/// The three families with dim = n - 2 (n >= 4): complete bipartite graphs,
/// a clique joined to an independent set, and a clique joined to K_1 plus a
/// clique. All are recognized from the complement's components.
bool dim_n_minus_2_family(const Graph& g) {
    Graph co = build_graph(g.n, complement_edges(g));
    auto comps = graph_components(co);
    int isolated = 0, cliques = 0, stars = 0, other = 0;
    for (const auto& comp : comps) {
        if (comp.size() == 1) ++isolated;
        else if (component_is_clique(co, comp)) ++cliques;
        else if (component_is_star(co, comp)) ++stars;
        else ++other;
    }
    if (other > 0) return false;
    // complement = two cliques  -> complete bipartite
    if (isolated + cliques + stars == 2 && stars == 0 && comps.size() == 2) return true;
    // complement = isolateds + one clique  -> clique joined to independent set
    if (isolated >= 1 && cliques == 1 && stars == 0) return true;
    // complement = isolateds + one star    -> clique joined to (K_1 + clique)
    if (isolated >= 1 && cliques == 0 && stars == 1) return true;
    return false;
}

bool is_complete(const Graph& g) { return g.edge_count() == g.n * (g.n - 1) / 2; }

// ---------------- alternative-order recomputation ----------------

/// Minimum resolving-set size by plain ascending-mask enumeration; an
/// independent order from the size-then-lex search, used to re-derive values
/// before reporting a conjecture violation.
int dim_by_mask_order(const Graph& g) {
    DistanceMatrix dm = all_pairs_distances(g);
    int best = g.n;
    const std::uint32_t top = std::uint32_t{1} << g.n;
    for (std::uint32_t mask = 1; mask < top; ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        VertexSet w = from_mask(mask);
        if (is_resolving(g, dm, w).resolving) best = size;
    }
    return best;
}

int z_by_mask_order(const Graph& g) {
    int best = g.n;
    const std::uint32_t top = std::uint32_t{1} << g.n;
    for (std::uint32_t mask = 1; mask < top; ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        if (is_zero_forcing(g, from_mask(mask))) best = size;
    }
    return best;
}

// ---------------- graph check registry ----------------

struct PerCheck {
    bool applicable = false;
    bool skipped = false;
    bool violated = false;
    std::string detail;
    std::vector<std::string> findings;
};

using CheckFn = std::function<void(const Summary&, const Caps&, PerCheck&)>;

struct CheckDef {
    std::string name;
    bool theorem = true;
    CheckFn fn;
};

void fail(PerCheck& pc, const Summary& s, const std::string& why) {
    pc.violated = true;
    pc.detail = gid(*s.g) + " " + why;
}

void check_extremal_dim(const Summary& s, const Caps&, PerCheck& pc) {
    if (!s.dim) {
        pc.applicable = true;
        pc.skipped = true;
        return;
    }
    pc.applicable = true;
    const Graph& g = *s.g;
    int dim = s.dim->dim;
    if ((dim == 1) != s.path) {
        fail(pc, s, "dim=1 must hold exactly for paths (dim=" + std::to_string(dim) + ")");
        return;
    }
    if ((dim == g.n - 1) != is_complete(g)) {
        fail(pc, s, "dim=n-1 must hold exactly for complete graphs");
        return;
    }
    if (g.n >= 4 && (dim == g.n - 2) != dim_n_minus_2_family(g))
        fail(pc, s, "dim=n-2 family characterization mismatch (dim=" + std::to_string(dim) + ")");
}

void check_extremal_z(const Summary& s, const Caps&, PerCheck& pc) {
    if (!s.z) {
        pc.applicable = true;
        pc.skipped = true;
        return;
    }
    pc.applicable = true;
    int z = s.z->z;
    if ((z == 1) != s.path) {
        fail(pc, s, "Z=1 must hold exactly for paths (Z=" + std::to_string(z) + ")");
        return;
    }
    if ((z == s.g->n - 1) != is_complete(*s.g))
        fail(pc, s, "Z=n-1 must hold exactly for complete graphs");
}

void check_min_degree(const Summary& s, const Caps&, PerCheck& pc) {
    if (!s.z) {
        pc.applicable = true;
        pc.skipped = true;
        return;
    }
    pc.applicable = true;
    if (s.z->z < s.delta)
        fail(pc, s, "Z=" + std::to_string(s.z->z) + " below min degree " + std::to_string(s.delta));
}

void check_sigma_ex(const Summary& s, const Caps&, PerCheck& pc) {
    if (!s.dim) {
        pc.applicable = true;
        pc.skipped = true;
        return;
    }
    pc.applicable = true;
    int bound = sigma_ex_lower_bound(s.profile);
    if (s.dim->dim < bound)
        fail(pc, s, "dim=" + std::to_string(s.dim->dim) + " below sigma-ex bound " + std::to_string(bound));
}

void check_twin_obligation(const Summary& s, const Caps&, PerCheck& pc) {
    if (!s.dim) {
        pc.applicable = true;
        pc.skipped = true;
        return;
    }
    pc.applicable = true;
    const Graph& g = *s.g;
    auto pairs = twins(g);
    auto hits_all = [&](std::uint32_t mask) {
        for (const auto& [u, v] : pairs)
            if (!(mask & (std::uint32_t{1} << u)) && !(mask & (std::uint32_t{1} << v))) return false;
        return true;
    };
    if (g.n <= 6) {
        const std::uint32_t top = std::uint32_t{1} << g.n;
        for (std::uint32_t mask = 0; mask < top; ++mask) {
            VertexSet w = from_mask(mask);
            if (is_resolving(g, s.dm, w).resolving && !hits_all(mask)) {
                fail(pc, s, "resolving set " + join_ints(w) + " misses a twin pair");
                return;
            }
        }
    } else if (!hits_all(static_cast<std::uint32_t>(to_mask(s.dim->basis)))) {
        fail(pc, s, "computed basis misses a twin pair");
    }
}

void check_tree_formula(const Summary& s, const Caps&, PerCheck& pc) {
    if (!s.tree) return;
    if (!s.dim) {
        pc.applicable = true;
        pc.skipped = true;
        return;
    }
    pc.applicable = true;
    int formula = tree_metric_dimension(*s.g);
    if (formula != s.dim->dim)
        fail(pc, s, "formula " + std::to_string(formula) + " != bruteforce " + std::to_string(s.dim->dim));
}

void check_dim_le_z(const Summary& s, const Caps&, PerCheck& pc) {
    if (!s.tree) return;
    if (!s.dim || !s.z) {
        pc.applicable = true;
        pc.skipped = true;
        return;
    }
    pc.applicable = true;
    if (s.dim->dim > s.z->z)
        fail(pc, s, "tree has dim=" + std::to_string(s.dim->dim) + " > Z=" + std::to_string(s.z->z));
}

void check_p_eq_z_tree(const Summary& s, const Caps&, PerCheck& pc) {
    if (!s.tree) return;
    if (!s.pc || !s.z) {
        pc.applicable = true;
        pc.skipped = true;
        return;
    }
    pc.applicable = true;
    if (s.pc->p != s.z->z)
        fail(pc, s, "tree has P=" + std::to_string(s.pc->p) + " != Z=" + std::to_string(s.z->z));
}

void check_p_le_z(const Summary& s, const Caps&, PerCheck& pc) {
    if (!s.pc || !s.z) {
        pc.applicable = true;
        pc.skipped = true;
        return;
    }
    pc.applicable = true;
    if (s.pc->p > s.z->z)
        fail(pc, s, "P=" + std::to_string(s.pc->p) + " > Z=" + std::to_string(s.z->z));
}

void check_dim_eq_z_tree(const Summary& s, const Caps&, PerCheck& pc) {
    if (!s.tree) return;
    if (!s.dim || !s.z) {
        pc.applicable = true;
        pc.skipped = true;
        return;
    }
    pc.applicable = true;
    bool predicted = dim_equals_Z_tree_predicate(*s.g, s.profile);
    bool actual = s.dim->dim == s.z->z;
    if (predicted != actual)
        fail(pc, s, std::string("characterization says ") + (predicted ? "dim=Z" : "dim<Z") +
                        " but dim=" + std::to_string(s.dim->dim) + ", Z=" + std::to_string(s.z->z));
}

void check_zfs_audit(const Summary& s, const Caps&, PerCheck& pc) {
    if (!s.tree) return;
    if (!s.dim || !s.z) {
        pc.applicable = true;
        pc.skipped = true;
        return;
    }
    if (!dim_equals_Z_tree_predicate(*s.g, s.profile)) return;
    pc.applicable = true;
    auto audit = zfs_structure_audit(*s.g, s.z->witness);
    if (!audit.ok) {
        for (const auto& entry : audit.entries) {
            if (entry.omitted_paths != 1) {
                fail(pc, s, "major vertex " + std::to_string(entry.major) + " has " +
                                std::to_string(entry.omitted_paths) + " terminal paths missing the set");
                return;
            }
        }
    }
}

void check_one_step(const Summary& s, const Caps&, PerCheck& pc) {
    pc.applicable = true;
    const Graph& g = *s.g;
    if (g.n > 6 || g.n < 2) {
        pc.skipped = true;
        return;
    }
    const std::uint32_t top = std::uint32_t{1} << g.n;
    for (std::uint32_t mask = 0; mask < top; ++mask) {
        VertexSet set = from_mask(mask);
        try {
            one_step_resolving_check(g, set);  // throws if a one-step set fails to resolve
        } catch (const std::logic_error&) {
            fail(pc, s, "one-step forcing set " + join_ints(set) + " is not resolving");
            return;
        }
    }
}

void check_z_perturbation(const Summary& s, const Caps& caps, PerCheck& pc) {
    pc.applicable = true;
    if (s.g->n > 7 || s.g->n < 2) {
        pc.skipped = true;
        return;
    }
    auto report = check_Z_perturbation(*s.g, caps.brute);
    if (!report.all_within_one) {
        for (const auto& chk : report.checks) {
            if (!chk.skipped && !chk.within_one) {
                std::string what = chk.kind == DeletionCheck::Kind::EdgeRemoval
                                       ? "edge (" + std::to_string(chk.a) + "," + std::to_string(chk.b) + ")"
                                       : "vertex " + std::to_string(chk.a);
                fail(pc, s, "deleting " + what + " moved Z from " + std::to_string(report.z) +
                                " to " + std::to_string(chk.z_after));
                return;
            }
        }
    }
}

void check_unicyclic_z_plus1(const Summary& s, const Caps&, PerCheck& pc) {
    if (s.cls.kind != GraphKind::Unicyclic) return;
    if (!s.dim || !s.z) {
        pc.applicable = true;
        pc.skipped = true;
        return;
    }
    pc.applicable = true;
    if (s.dim->dim > s.z->z + 1)
        fail(pc, s, "unicyclic dim=" + std::to_string(s.dim->dim) + " > Z+1=" + std::to_string(s.z->z + 1));
}

void check_cycle_rank_conjecture(const Summary& s, const Caps&, PerCheck& pc) {
    if (!s.dim || !s.z) {
        pc.applicable = true;
        pc.skipped = true;
        return;
    }
    pc.applicable = true;
    int r = s.cls.cycle_rank;
    if (s.dim->dim > s.z->z + r) {
        // Re-derive both numbers through an independent enumeration order
        // before crying wolf; only a confirmed gap is reported.
        int dim2 = dim_by_mask_order(*s.g);
        int z2 = z_by_mask_order(*s.g);
        if (dim2 != s.dim->dim || z2 != s.z->z) {
            fail(pc, s, "enumeration orders disagree: dim " + std::to_string(s.dim->dim) + "/" +
                            std::to_string(dim2) + ", Z " + std::to_string(s.z->z) + "/" +
                            std::to_string(z2));
            return;
        }
        if (dim2 > z2 + r)
            fail(pc, s, "dim=" + std::to_string(dim2) + " exceeds Z+r=" + std::to_string(z2 + r));
    } else if (s.dim->dim == s.z->z + r) {
        pc.findings.push_back(gid(*s.g) + " meets dim = Z + r exactly (r=" + std::to_string(r) + ")");
    }
}

void check_divergence(const Summary& s, const Caps&, PerCheck& pc) {
    if (!s.dim || !s.z) {
        pc.applicable = true;
        pc.skipped = true;
        return;
    }
    pc.applicable = true;
    int gap = s.z->z - s.dim->dim;
    if (gap >= 2)
        pc.findings.push_back(gid(*s.g) + " Z exceeds dim by " + std::to_string(gap));
    if (s.dim->dim > s.z->z) {
        std::string note = gid(*s.g) + " dim exceeds Z by " + std::to_string(-gap);
        if (s.g->n <= 10 && !has_even_cycle(*s.g)) note += " with no even cycle";
        pc.findings.push_back(note);
    }
}

const std::vector<CheckDef>& graph_check_defs() {
    static const std::vector<CheckDef> defs = {
        {"extremal_dim", true, check_extremal_dim},
        {"extremal_Z", true, check_extremal_z},
        {"min_degree", true, check_min_degree},
        {"sigma_ex", true, check_sigma_ex},
        {"twin_obligation", true, check_twin_obligation},
        {"tree_formula", true, check_tree_formula},
        {"dim_le_Z", true, check_dim_le_z},
        {"P_eq_Z_tree", true, check_p_eq_z_tree},
        {"P_le_Z", true, check_p_le_z},
        {"dim_eq_Z_tree", true, check_dim_eq_z_tree},
        {"zfs_audit", true, check_zfs_audit},
        {"one_step_resolving", true, check_one_step},
        {"z_perturbation", true, check_z_perturbation},
        {"unicyclic_dim_le_Z_plus1", true, check_unicyclic_z_plus1},
        {"cycle_rank_conjecture", false, check_cycle_rank_conjecture},
        {"divergence", false, check_divergence},
    };
    return defs;
}

std::vector<const CheckDef*> resolve_checks(const std::vector<CheckDef>& defs,
                                            std::vector<std::string> names) {
    std::vector<const CheckDef*> picked;
    if (names.empty()) {
        for (const auto& def : defs) picked.push_back(&def);
        return picked;
    }
    for (const auto& name : names) {
        const CheckDef* hit = nullptr;
        for (const auto& def : defs)
            if (def.name == name) hit = &def;
        if (!hit) {
            std::string known;
            for (const auto& def : defs) known += (known.empty() ? "" : ", ") + def.name;
            throw std::invalid_argument("unknown check '" + name + "' (known: " + known + ")");
        }
        picked.push_back(hit);
    }
    return picked;
}

constexpr std::size_t kMaxDetails = 20;
constexpr std::size_t kMaxFindings = 50;

void merge_percheck(CheckOutcome& out, const PerCheck& pc) {
    if (!pc.applicable) return;
    if (pc.skipped) {
        ++out.skipped;
        return;
    }
    ++out.checked;
    if (pc.violated) {
        ++out.violations;
        if (out.violation_details.size() < kMaxDetails) out.violation_details.push_back(pc.detail);
    }
    for (const auto& f : pc.findings)
        if (out.findings.size() < kMaxFindings) out.findings.push_back(f);
}

}  // namespace

// ---------------- env caps ----------------

Caps caps_from_env(Caps base) {
    const char* env = std::getenv("DIMFORCE_CAPS");
    if (!env || !*env) return base;
    std::string text(env);
    if (text.find('=') == std::string::npos) {
        try {
            base.brute = std::stoi(text);
            return base;
        } catch (const std::exception&) {
            throw std::invalid_argument("DIMFORCE_CAPS: expected an integer or key=value list, got '" +
                                        text + "'");
        }
    }
    std::stringstream parts(text);
    std::string part;
    while (std::getline(parts, part, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("DIMFORCE_CAPS: bad entry '" + part + "'");
        std::string key = part.substr(0, eq);
        int value = 0;
        try {
            value = std::stoi(part.substr(eq + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("DIMFORCE_CAPS: bad value in '" + part + "'");
        }
        if (key == "brute") base.brute = value;
        else if (key == "pathcover") base.path_cover = value;
        else if (key == "enum") base.enumerate_all = value;
        else throw std::invalid_argument("DIMFORCE_CAPS: unknown key '" + key + "'");
    }
    return base;
}

// ---------------- single-graph report ----------------

ParameterReport compute_report(const Graph& g, const ComputeOptions& opt) {
    Timer timer;
    if (g.n < 2) throw std::invalid_argument("compute needs n >= 2");
    ParameterReport r;
    r.graph = g;
    r.graph6 = write_graph6(g);
    r.cls = classify(g);
    r.delta = min_degree(g);
    DistanceMatrix dm = all_pairs_distances(g);
    StructuralProfile profile = structural_profile(g, dm);
    r.sigma = profile.sigma;
    r.ex = profile.ex;
    r.twin_pairs = twins(g);

    const bool tree = r.cls.kind == GraphKind::Path || r.cls.kind == GraphKind::Tree;
    std::optional<int> brute_dim;
    if (opt.method == DimMethod::Formula || opt.method == DimMethod::Both) {
        if (!tree)
            throw std::invalid_argument("--method formula applies to trees only; this graph has cycle rank " +
                                        std::to_string(r.cls.cycle_rank));
        r.dim = tree_metric_dimension(g);
        if (r.cls.kind == GraphKind::Path) {
            for (int v = 0; v < g.n; ++v)
                if (g.degree(v) <= 1) {
                    r.dim_witness = {v};
                    break;
                }
        } else {
            r.dim_witness = tree_basis_construction(g, profile);
        }
        r.dim_method = "formula";
    }
    if (opt.method == DimMethod::Bruteforce || opt.method == DimMethod::Both) {
        auto res = metric_dimension_bruteforce(g, opt.caps.brute);
        brute_dim = res.dim;
        if (opt.method == DimMethod::Both) {
            r.bounds.push_back({"tree_formula",
                                "formula " + std::to_string(r.dim) + " vs bruteforce " +
                                    std::to_string(res.dim),
                                r.dim == res.dim, false});
            r.dim_method = "both";
        } else {
            r.dim_method = "bruteforce";
        }
        r.dim = res.dim;
        r.dim_witness = res.basis;
    }
    if (tree && opt.method == DimMethod::Bruteforce) {
        int formula = tree_metric_dimension(g);
        r.bounds.push_back({"tree_formula",
                            "formula " + std::to_string(formula) + " vs bruteforce " +
                                std::to_string(*brute_dim),
                            formula == *brute_dim, false});
    }

    auto zres = zero_forcing_bruteforce(g, opt.caps.brute);
    r.z = zres.z;
    r.z_witness = zres.witness;

    if (opt.with_path_cover) r.path_cover = path_cover_bruteforce(g, opt.caps.path_cover);
    if (tree) r.tree_dim_equals_z = dim_equals_Z_tree_predicate(g, profile);
    if (g.n <= 8) {
        bool even = has_even_cycle(g);
        r.even_cycle_free = !even;
        r.even_cycle_rank = even_cycle_rank(g, 200000);
    }

    r.bounds.push_back({"Z_ge_min_degree",
                        "Z=" + std::to_string(r.z) + ", delta=" + std::to_string(r.delta),
                        r.z >= r.delta, false});
    int sigma_ex = sigma_ex_lower_bound(profile);
    r.bounds.push_back({"dim_ge_sigma_minus_ex",
                        "dim=" + std::to_string(r.dim) + ", sigma-ex=" + std::to_string(sigma_ex),
                        r.dim >= sigma_ex, false});
    if (tree) {
        r.bounds.push_back({"dim_le_Z_tree", "dim=" + std::to_string(r.dim) + ", Z=" + std::to_string(r.z),
                            r.dim <= r.z, false});
        r.bounds.push_back({"dim_eq_Z_characterization",
                            std::string("predicate ") + (*r.tree_dim_equals_z ? "true" : "false"),
                            *r.tree_dim_equals_z == (r.dim == r.z), false});
    }
    if (r.path_cover) {
        r.bounds.push_back({"P_le_Z",
                            "P=" + std::to_string(r.path_cover->p) + ", Z=" + std::to_string(r.z),
                            r.path_cover->p <= r.z, false});
        if (tree)
            r.bounds.push_back({"P_eq_Z_tree",
                                "P=" + std::to_string(r.path_cover->p) + ", Z=" + std::to_string(r.z),
                                r.path_cover->p == r.z, false});
    }
    if (r.cls.kind == GraphKind::Unicyclic)
        r.bounds.push_back({"unicyclic_dim_le_Z_plus1",
                            "dim=" + std::to_string(r.dim) + ", Z+1=" + std::to_string(r.z + 1),
                            r.dim <= r.z + 1, false});
    r.bounds.push_back({"cycle_rank_conjecture",
                        "dim=" + std::to_string(r.dim) + ", Z+r=" + std::to_string(r.z + r.cls.cycle_rank),
                        r.dim <= r.z + r.cls.cycle_rank, true});

    r.ms = timer.ms();
    return r;
}

std::string report_to_json(const ParameterReport& r, bool with_timing) {
    json j;
    j["graph"]["n"] = r.graph.n;
    j["graph"]["edges"] = json::array();
    for (const auto& [u, v] : r.graph.edges) j["graph"]["edges"].push_back({u, v});
    j["graph"]["graph6"] = r.graph6;
    j["class"]["kind"] = kind_name(r.cls.kind);
    j["class"]["cycle_rank"] = r.cls.cycle_rank;
    j["delta"] = r.delta;
    j["sigma"] = r.sigma;
    j["ex"] = r.ex;
    j["dim"] = {{"value", r.dim}, {"witness", r.dim_witness}, {"method", r.dim_method}};
    j["z"] = {{"value", r.z}, {"witness", r.z_witness}};
    if (r.path_cover) {
        j["path_cover"]["value"] = r.path_cover->p;
        j["path_cover"]["blocks"] = r.path_cover->cover.blocks;
    }
    j["predicates"]["twin_pairs"] = json::array();
    for (const auto& [u, v] : r.twin_pairs) j["predicates"]["twin_pairs"].push_back({u, v});
    if (r.tree_dim_equals_z) j["predicates"]["dim_equals_Z_tree"] = *r.tree_dim_equals_z;
    if (r.even_cycle_free) j["even_cycle_free"] = *r.even_cycle_free;
    if (r.even_cycle_rank) j["even_cycle_rank"] = *r.even_cycle_rank;
    j["bounds"] = json::array();
    for (const auto& b : r.bounds)
        j["bounds"].push_back(
            {{"name", b.name}, {"detail", b.detail}, {"holds", b.holds}, {"conjecture", b.conjecture}});
    if (with_timing) j["timing_ms"] = r.ms;
    return j.dump(2) + "\n";
}

// ---------------- sweeps ----------------

bool SweepResult::ok() const {
    for (const auto& c : checks)
        if (c.theorem && c.violations > 0) return false;
    return true;
}

std::vector<std::string> graph_check_names() {
    std::vector<std::string> names;
    for (const auto& def : graph_check_defs()) names.push_back(def.name);
    return names;
}

std::vector<std::string> pair_check_names() {
    return {"unicyclic_bounds", "dimZ_plus1", "construction", "cycle_findings"};
}

SweepResult run_graph_checks(const std::vector<Graph>& corpus, const std::string& corpus_name,
                             std::vector<std::string> names, const Caps& caps, int workers) {
    Timer timer;
    auto picked = resolve_checks(graph_check_defs(), std::move(names));

    std::vector<std::vector<PerCheck>> rows(corpus.size());
    parallel_for(corpus.size(), workers, [&](std::size_t i) {
        Summary s = summarize(corpus[i], caps);
        rows[i].resize(picked.size());
        for (std::size_t c = 0; c < picked.size(); ++c) picked[c]->fn(s, caps, rows[i][c]);
    });

    SweepResult result;
    result.corpus = corpus_name;
    result.graphs = static_cast<long>(corpus.size());
    result.workers = workers;
    result.caps = caps;
    for (std::size_t c = 0; c < picked.size(); ++c) {
        CheckOutcome out;
        out.name = picked[c]->name;
        out.theorem = picked[c]->theorem;
        for (const auto& row : rows) merge_percheck(out, row[c]);
        result.checks.push_back(std::move(out));
    }
    result.ms = timer.ms();
    return result;
}

namespace {

struct TreeEdgePair {
    Graph tree;
    Edge extra;
};

std::vector<TreeEdgePair> t_plus_e_corpus(int n_max) {
    std::vector<TreeEdgePair> pairs;
    for (int n = 3; n <= n_max; ++n)
        for (const Graph& t : all_free_trees(n))
            for (const Edge& e : complement_edges(t)) pairs.push_back({t, e});
    return pairs;
}

struct PairVerdict {
    PerCheck bounds, z_plus1, construction, findings;
};

}  // namespace

SweepResult t_plus_e_sweep(int n_max, const Caps& caps, int workers, std::vector<std::string> names) {
    Timer timer;
    if (n_max < 3) throw std::invalid_argument("t_plus_e_sweep needs n >= 3");
    if (names.empty()) names = pair_check_names();
    for (const auto& name : names) {
        auto known = pair_check_names();
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw std::invalid_argument("unknown tree-plus-edge check '" + name + "'");
    }

    auto pairs = t_plus_e_corpus(n_max);
    std::vector<PairVerdict> rows(pairs.size());
    parallel_for(pairs.size(), workers, [&](std::size_t i) {
        const Graph& t = pairs[i].tree;
        const Edge e = pairs[i].extra;
        Graph g = add_edge(t, e);
        PairVerdict& row = rows[i];

        int dim_t = metric_dimension_bruteforce(t, caps.brute).dim;
        int dim_g = metric_dimension_bruteforce(g, caps.brute).dim;
        int z_g = zero_forcing_bruteforce(g, caps.brute).z;
        DistanceMatrix dm_t = all_pairs_distances(t);
        DistanceMatrix dm_g = all_pairs_distances(g);
        int ex_t = structural_profile(t, dm_t).ex;
        int ex_g = structural_profile(g, dm_g).ex;
        std::string id = gid(g) + " (tree " + gid(t) + " + edge " + std::to_string(e.first) + "-" +
                         std::to_string(e.second) + ")";

        row.bounds.applicable = true;
        if (dim_g < dim_t - 2 || dim_g > dim_t + 1) {
            row.bounds.violated = true;
            row.bounds.detail = id + " dim moved from " + std::to_string(dim_t) + " to " +
                                std::to_string(dim_g) + ", outside [dim-2, dim+1]";
        }

        row.z_plus1.applicable = true;
        if (dim_g > z_g + 1) {
            row.z_plus1.violated = true;
            row.z_plus1.detail = id + " dim=" + std::to_string(dim_g) + " > Z+1=" + std::to_string(z_g + 1);
        }

        row.construction.applicable = true;
        VertexSet w = unicyclic_resolving_construction(t, e);
        bool resolves = is_resolving(g, dm_g, w).resolving;
        bool small_enough = static_cast<int>(w.size()) <= dim_t + 1;
        if (!resolves || !small_enough) {
            row.construction.violated = true;
            row.construction.detail = id + " construction " + join_ints(w) +
                                      (resolves ? "" : " does not resolve") +
                                      (small_enough ? "" : " and exceeds dim(T)+1");
        }

        row.findings.applicable = true;
        if (dim_g == z_g + 1)
            row.findings.findings.push_back(id + " has dim = Z + 1 (dim=" + std::to_string(dim_g) + ")");
        if (dim_g == dim_t + 1)
            row.findings.findings.push_back(id + " has dim(T+e) = dim(T) + 1");
        if (ex_g > ex_t)
            row.findings.findings.push_back(id + " grew exterior majors from " + std::to_string(ex_t) +
                                            " to " + std::to_string(ex_g));
    });

    SweepResult result;
    result.corpus = "t_plus_e:" + std::to_string(n_max);
    result.graphs = static_cast<long>(pairs.size());
    result.workers = workers;
    result.caps = caps;
    for (const auto& name : names) {
        CheckOutcome out;
        out.name = name;
        out.theorem = name != "cycle_findings";
        for (const auto& row : rows) {
            const PerCheck* pc = nullptr;
            if (name == "unicyclic_bounds") pc = &row.bounds;
            else if (name == "dimZ_plus1") pc = &row.z_plus1;
            else if (name == "construction") pc = &row.construction;
            else pc = &row.findings;
            merge_percheck(out, *pc);
        }
        result.checks.push_back(std::move(out));
    }
    result.ms = timer.ms();
    return result;
}

SweepResult cycle_rank_conjecture_check(const std::vector<Graph>& corpus, const Caps& caps,
                                        int workers) {
    return run_graph_checks(corpus, "conjecture-corpus", {"cycle_rank_conjecture"}, caps, workers);
}

SweepResult divergence_search(const std::vector<Graph>& corpus, const Caps& caps, int workers) {
    Timer timer;
    struct Row {
        bool ok = false;
        int dim = 0, z = 0, n = 0;
        bool even_free = false;
        std::string id;
    };
    std::vector<Row> rows(corpus.size());
    parallel_for(corpus.size(), workers, [&](std::size_t i) {
        const Graph& g = corpus[i];
        if (g.n < 2 || g.n > caps.brute) return;
        rows[i].ok = true;
        rows[i].n = g.n;
        rows[i].dim = metric_dimension_bruteforce(g, caps.brute).dim;
        rows[i].z = zero_forcing_bruteforce(g, caps.brute).z;
        rows[i].even_free = g.n <= 10 && !has_even_cycle(g);
        rows[i].id = gid(g);
    });

    CheckOutcome out;
    out.name = "divergence";
    out.theorem = false;
    int best_z_gap = -1, best_dim_gap = -1;
    std::string z_witness, dim_witness;
    long dim_exceeds_z_even_free = 0;
    for (const auto& row : rows) {
        if (!row.ok) {
            ++out.skipped;
            continue;
        }
        ++out.checked;
        if (row.z - row.dim > best_z_gap) {
            best_z_gap = row.z - row.dim;
            z_witness = row.id;
        }
        if (row.dim - row.z > best_dim_gap) {
            best_dim_gap = row.dim - row.z;
            dim_witness = row.id;
        }
        if (row.dim > row.z && row.even_free) {
            ++dim_exceeds_z_even_free;
            if (out.findings.size() < kMaxFindings)
                out.findings.push_back(row.id + " has dim > Z with no even cycle");
        }
    }
    if (out.checked > 0) {
        out.findings.push_back("max Z - dim = " + std::to_string(best_z_gap) + " at " + z_witness);
        out.findings.push_back("max dim - Z = " + std::to_string(best_dim_gap) + " at " + dim_witness);
        out.findings.push_back("even-cycle-free graphs with dim > Z: " +
                               std::to_string(dim_exceeds_z_even_free));
    }

    SweepResult result;
    result.corpus = "divergence-corpus";
    result.graphs = static_cast<long>(corpus.size());
    result.workers = workers;
    result.caps = caps;
    result.checks.push_back(std::move(out));
    result.ms = timer.ms();
    return result;
}

std::string sweep_to_json(const SweepResult& s, bool with_timing) {
    json j;
    j["corpus"] = s.corpus;
    j["graphs"] = s.graphs;
    j["workers"] = s.workers;
    j["caps"] = {{"brute", s.caps.brute},
                 {"pathcover", s.caps.path_cover},
                 {"enum", s.caps.enumerate_all}};
    j["ok"] = s.ok();
    j["checks"] = json::array();
    for (const auto& c : s.checks) {
        json jc;
        jc["name"] = c.name;
        jc["theorem"] = c.theorem;
        jc["checked"] = c.checked;
        jc["skipped"] = c.skipped;
        jc["violations"] = c.violations;
        jc["violation_details"] = c.violation_details;
        jc["findings"] = c.findings;
        j["checks"].push_back(std::move(jc));
    }
    if (with_timing) j["timing_ms"] = s.ms;
    return j.dump(2) + "\n";
}

std::string sweep_to_csv(const SweepResult& s) {
    std::ostringstream out;
    out << "check,theorem,checked,skipped,violations,findings\n";
    for (const auto& c : s.checks)
        out << c.name << ',' << (c.theorem ? 1 : 0) << ',' << c.checked << ',' << c.skipped << ','
            << c.violations << ',' << c.findings.size() << '\n';
    return out.str();
}

// ---------------- even-cycle helpers ----------------

bool has_even_cycle(const Graph& g) {
    if (g.n > 10) throw std::invalid_argument("has_even_cycle is capped at n = 10");
    std::vector<char> onpath(g.n, 0);
    std::vector<int> path;
    std::function<bool(int, int)> dfs = [&](int start, int u) -> bool {
        for (int v : g.adj[u]) {
            if (v == start && path.size() >= 3) {
                if (path.size() % 2 == 0) return true;
            } else if (v > start && !onpath[v]) {
                onpath[v] = 1;
                path.push_back(v);
                if (dfs(start, v)) return true;
                path.pop_back();
                onpath[v] = 0;
            }
        }
        return false;
    };
    for (int s = 0; s < g.n; ++s) {
        std::fill(onpath.begin(), onpath.end(), 0);
        onpath[s] = 1;
        path.assign(1, s);
        if (dfs(s, s)) return true;
    }
    return false;
}

std::optional<int> even_cycle_rank(const Graph& g, long budget) {
    if (!has_even_cycle(g)) return 0;
    const int m = g.edge_count();
    for (int k = 1; k <= m; ++k) {
        auto pick = first_combination(k);
        do {
            if (--budget < 0) return std::nullopt;
            std::vector<Edge> keep;
            for (int i = 0, at = 0; i < m; ++i) {
                if (at < k && pick[at] == i) ++at;
                else keep.push_back(g.edges[i]);
            }
            if (!has_even_cycle(build_graph(g.n, keep))) return k;
        } while (next_combination(pick, m));
    }
    return std::nullopt;  // unreachable: deleting all edges kills every cycle
}

}  // namespace dimforce
