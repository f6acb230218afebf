#pragma once

#include <random>

#include "dimforce/graph.hpp"
#include "dimforce/resolvability.hpp"

namespace dimforce {

inline constexpr int kDefaultPathCoverCap = 12;

/// One application of the color-change rule: `forcer` (black, with `forced`
/// as its only white neighbor at that moment) turns `forced` black.
struct ForceEvent {
    int forcer = -1;
    int forced = -1;
    int round = 0;  // 1-based; all forces legal at a round's start fire in that round
};

struct ForcingTrace {
    VertexSet initial;             // sorted
    std::vector<ForceEvent> events;
    VertexSet final_black;         // sorted; the closure of `initial`
};

struct ZeroForcingResult {
    int z = 0;
    VertexSet witness;  // canonical: smallest size, then lexicographically least
};

/// Partition of V into blocks each inducing a path. Blocks hold sorted vertex
/// lists; the block list itself is sorted, giving one canonical form.
struct PathCover {
    std::vector<VertexSet> blocks;
};

struct PathCoverResult {
    int p = 0;
    PathCover cover;
};

struct DeletionCheck {
    enum class Kind { EdgeRemoval, VertexRemoval };

    Kind kind = Kind::EdgeRemoval;
    int a = -1, b = -1;      // edge endpoints, or (vertex, -1)
    bool skipped = false;    // deletion disconnected the graph or left n < 2
    int z_after = -1;
    bool within_one = true;  // |z_after - z| <= 1
};

struct PerturbationReport {
    int z = 0;
    std::vector<DeletionCheck> checks;
    bool all_within_one = true;
};

/// Runs the color-change rule to its fixpoint in synchronous rounds: every
/// force legal against the black set at the start of a round fires during
/// that round, in (forcer, forced) index order. The resulting trace replays
/// legally event by event, and the final set is independent of firing order.
ForcingTrace forcing_closure(const Graph& g, const VertexSet& s);

/// Closure computed by firing one arbitrary (rng-chosen) legal force at a
/// time. Exists to exercise the order-independence of the closure.
VertexSet forcing_closure_random_order(const Graph& g, const VertexSet& s, std::mt19937& rng);

bool is_zero_forcing(const Graph& g, const VertexSet& s);

/// True iff a single simultaneous round from s turns every vertex black.
/// Any such s is also a resolving set; this is cross-checked internally.
bool one_step_resolving_check(const Graph& g, const VertexSet& s);

/// Exhaustive search in canonical subset order, starting at size
/// max(1, min_degree) since Z(G) >= delta(G). Requires connected, n <= cap.
ZeroForcingResult zero_forcing_bruteforce(const Graph& g, int cap = kDefaultBruteCap);

/// delta(G), the floor below which no zero forcing set can exist.
int min_degree_bound(const Graph& g);

/// Minimum number of vertex-disjoint induced paths covering V, by dynamic
/// programming over vertex subsets. The witness cover is canonical (smallest
/// block count, then lexicographically least sorted block list).
PathCoverResult path_cover_bruteforce(const Graph& g, int cap = kDefaultPathCoverCap);

/// Recomputes Z after every single edge/vertex deletion that keeps the graph
/// connected (others are listed as skipped) and reports whether each stays
/// within one of Z(G).
PerturbationReport check_Z_perturbation(const Graph& g, int cap = kDefaultBruteCap);

}  // namespace dimforce
