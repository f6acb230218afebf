#include "dimforce/forcing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "dimforce/subsets.hpp"

namespace dimforce {

namespace {

void check_vertices(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (v < 0 || v >= g.n)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

/// Fires every force legal against the black set at the start of the round,
/// in (forcer, forced) index order. Returns the number of events appended.
int run_round(const Graph& g, std::vector<char>& black, int round, std::vector<ForceEvent>* events) {
    std::vector<ForceEvent> legal;
    for (int u = 0; u < g.n; ++u) {
        if (!black[u]) continue;
        int white = -1, count = 0;
        for (int v : g.adj[u]) {
            if (!black[v]) {
                white = v;
                if (++count > 1) break;
            }
        }
        if (count == 1) legal.push_back({u, white, round});
    }
    int fired = 0;
    for (const auto& ev : legal) {
        if (black[ev.forced]) continue;  // an earlier force this round got there first
        black[ev.forced] = 1;
        ++fired;
        if (events) events->push_back(ev);
    }
    return fired;
}

std::uint64_t closure_mask(const std::vector<std::uint64_t>& adj, int n, std::uint64_t start) {
    std::uint64_t black = start;
    const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    bool changed = true;
    while (changed && black != all) {
        changed = false;
        std::uint64_t scan = black;
        while (scan) {
            int u = std::countr_zero(scan);
            scan &= scan - 1;
            std::uint64_t white = adj[u] & ~black;
            if (white && (white & (white - 1)) == 0) {
                black |= white;
                changed = true;
            }
        }
    }
    return black;
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(g.n, 0);
    for (const auto& [u, v] : g.edges) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    return adj;
}

}  // namespace

ForcingTrace forcing_closure(const Graph& g, const VertexSet& s) {
    check_vertices(g, s);
    ForcingTrace trace;
    trace.initial = s;
    std::sort(trace.initial.begin(), trace.initial.end());
    trace.initial.erase(std::unique(trace.initial.begin(), trace.initial.end()), trace.initial.end());

    std::vector<char> black(g.n, 0);
    for (int v : trace.initial) black[v] = 1;
    for (int round = 1; run_round(g, black, round, &trace.events) > 0; ++round) {}
    for (int v = 0; v < g.n; ++v)
        if (black[v]) trace.final_black.push_back(v);
    return trace;
}

VertexSet forcing_closure_random_order(const Graph& g, const VertexSet& s, std::mt19937& rng) {
    check_vertices(g, s);
    std::vector<char> black(g.n, 0);
    for (int v : s) black[v] = 1;
    while (true) {
        std::vector<Edge> legal;
        for (int u = 0; u < g.n; ++u) {
            if (!black[u]) continue;
            int white = -1, count = 0;
            for (int v : g.adj[u]) {
                if (!black[v]) {
                    white = v;
                    if (++count > 1) break;
                }
            }
            if (count == 1) legal.emplace_back(u, white);
        }
        if (legal.empty()) break;
        auto pick = legal[std::uniform_int_distribution<std::size_t>(0, legal.size() - 1)(rng)];
        black[pick.second] = 1;
    }
    VertexSet out;
    for (int v = 0; v < g.n; ++v)
        if (black[v]) out.push_back(v);
    return out;
}

bool is_zero_forcing(const Graph& g, const VertexSet& s) {
    return static_cast<int>(forcing_closure(g, s).final_black.size()) == g.n;
}

bool one_step_resolving_check(const Graph& g, const VertexSet& s) {
    check_vertices(g, s);
    std::vector<char> black(g.n, 0);
    for (int v : s) black[v] = 1;
    run_round(g, black, 1, nullptr);
    bool one_step = std::all_of(black.begin(), black.end(), [](char b) { return b != 0; });
    if (one_step) {
        DistanceMatrix dm = all_pairs_distances(g);
        VertexSet sorted(s);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        if (!is_resolving(g, dm, sorted).resolving)
            throw std::logic_error("one-step forcing set failed to resolve; closure or code logic is broken");
    }
    return one_step;
}

ZeroForcingResult zero_forcing_bruteforce(const Graph& g, int cap) {
    if (g.n < 2) throw std::invalid_argument("zero forcing needs n >= 2");
    if (!is_connected(g)) throw std::invalid_argument("zero forcing requires a connected graph");
    if (g.n > cap)
        throw std::invalid_argument("zero_forcing_bruteforce: n=" + std::to_string(g.n) +
                                    " exceeds cap " + std::to_string(cap) +
                                    " (raise the cap to allow this)");
    if (g.n > 64) throw std::invalid_argument("zero_forcing_bruteforce supports n <= 64");

    auto adj = adjacency_masks(g);
    const std::uint64_t all = (g.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n) - 1);
    for (int k = std::max(1, min_degree(g)); k <= g.n; ++k) {
        auto c = first_combination(k);
        do {
            if (closure_mask(adj, g.n, to_mask(c)) == all) return {k, c};
        } while (next_combination(c, g.n));
    }
    throw std::logic_error("no zero forcing set found");  // unreachable: S = V always forces
}

int min_degree_bound(const Graph& g) { return min_degree(g); }

PathCoverResult path_cover_bruteforce(const Graph& g, int cap) {
    if (g.n < 1) throw std::invalid_argument("path cover needs n >= 1");
    if (g.n > cap)
        throw std::invalid_argument("path_cover_bruteforce: n=" + std::to_string(g.n) +
                                    " exceeds cap " + std::to_string(cap) +
                                    " (raise the cap to allow this)");
    if (g.n > 24) throw std::invalid_argument("path_cover_bruteforce supports n <= 24");

    const int n = g.n;
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    auto adj = adjacency_masks(g);

    // A subset induces a path iff it is connected with |edges| = |S| - 1 and
    // no vertex has more than two neighbors inside the subset.
    auto induces_path = [&](std::uint32_t mask) {
        int vertices = std::popcount(mask);
        if (vertices == 1) return true;
        int twice_edges = 0;
        std::uint32_t scan = mask;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int inside = std::popcount(static_cast<std::uint32_t>(adj[v]) & mask);
            if (inside > 2) return false;
            twice_edges += inside;
        }
        if (twice_edges != 2 * (vertices - 1)) return false;
        // connectivity inside the mask
        std::uint32_t reach = mask & (~mask + 1), frontier = reach;
        while (frontier) {
            std::uint32_t next = 0;
            std::uint32_t scan2 = frontier;
            while (scan2) {
                int v = std::countr_zero(scan2);
                scan2 &= scan2 - 1;
                next |= static_cast<std::uint32_t>(adj[v]) & mask & ~reach;
            }
            reach |= next;
            frontier = next;
        }
        return reach == mask;
    };

    // Path blocks grouped by their lowest vertex; the DP always carves out the
    // block containing the lowest uncovered vertex.
    std::vector<std::vector<std::uint32_t>> blocks_at(n);
    for (std::uint32_t mask = 1; mask <= full; ++mask)
        if (induces_path(mask)) blocks_at[std::countr_zero(mask)].push_back(mask);

    std::vector<int> best(full + 1, n + 1);
    best[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int v = std::countr_zero(mask);
        for (std::uint32_t block : blocks_at[v])
            if ((block & mask) == block) best[mask] = std::min(best[mask], best[mask ^ block] + 1);
    }

    PathCoverResult result;
    result.p = best[full];

    // Witness: repeatedly take the lexicographically least feasible block
    // containing the lowest uncovered vertex. Blocks come out sorted already
    // (each later block starts at a higher vertex), so the cover is canonical.
    std::uint32_t remaining = full;
    while (remaining) {
        int v = std::countr_zero(remaining);
        VertexSet chosen;
        std::uint32_t chosen_mask = 0;
        for (std::uint32_t block : blocks_at[v]) {
            if ((block & remaining) != block) continue;
            if (best[remaining ^ block] != best[remaining] - 1) continue;
            VertexSet cand = from_mask(block);
            if (chosen.empty() || std::lexicographical_compare(cand.begin(), cand.end(),
                                                               chosen.begin(), chosen.end())) {
                chosen = std::move(cand);
                chosen_mask = block;
            }
        }
        result.cover.blocks.push_back(chosen);
        remaining ^= chosen_mask;
    }
    return result;
}

PerturbationReport check_Z_perturbation(const Graph& g, int cap) {
    PerturbationReport report;
    report.z = zero_forcing_bruteforce(g, cap).z;

    auto record = [&](DeletionCheck check, const Graph& h) {
        if (h.n < 2 || !is_connected(h)) {
            check.skipped = true;
        } else {
            check.z_after = zero_forcing_bruteforce(h, cap).z;
            check.within_one = std::abs(check.z_after - report.z) <= 1;
            if (!check.within_one) report.all_within_one = false;
        }
        report.checks.push_back(check);
    };

    for (const auto& [u, v] : g.edges) {
        DeletionCheck check;
        check.kind = DeletionCheck::Kind::EdgeRemoval;
        check.a = u;
        check.b = v;
        record(check, remove_edge(g, {u, v}));
    }
    for (int v = 0; v < g.n; ++v) {
        DeletionCheck check;
        check.kind = DeletionCheck::Kind::VertexRemoval;
        check.a = v;
        record(check, remove_vertex(g, v));
    }
    return report;
}

}  // namespace dimforce
