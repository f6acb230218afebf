#pragma once

#include "dimforce/graph.hpp"

namespace dimforce {

struct StructuralProfile;  // tree_theory.hpp

inline constexpr int kDefaultBruteCap = 24;

/// Distance vector of one vertex to an ordered landmark set.
struct MetricCode {
    VertexSet landmarks;         // order fixed by the caller
    std::vector<int> distances;  // same order as landmarks
};

struct ResolvingCheck {
    bool resolving = false;
    std::optional<Edge> unresolved_pair;  // first pair (by index order) with equal codes
};

/// Partition of V under "codes differ by a constant vector"; within a class
/// the landmark set cannot tell vertices apart even up to a uniform shift.
struct ResolutionClasses {
    std::vector<VertexSet> classes;  // each sorted; classes ordered by least member
};

struct DimensionResult {
    int dim = 0;
    VertexSet basis;  // canonical witness: smallest size, then lexicographically least
};

MetricCode metric_code(const Graph& g, const DistanceMatrix& dm, int v, const VertexSet& w);

/// True iff all vertices receive pairwise distinct codes w.r.t. w.
ResolvingCheck is_resolving(const Graph& g, const DistanceMatrix& dm, const VertexSet& w);

/// True iff no two distinct vertices have codes differing by a constant
/// vector (a, a, ..., a). Strictly stronger than is_resolving.
bool strongly_resolves(const Graph& g, const DistanceMatrix& dm, const VertexSet& w);

/// Requires non-empty w.
ResolutionClasses resolution_classes(const Graph& g, const DistanceMatrix& dm, const VertexSet& w);

/// Exhaustive search over vertex subsets, smallest size first, lexicographic
/// within a size, so the returned basis is canonical and reproducible.
/// Requires a connected graph with 2 <= n <= cap.
DimensionResult metric_dimension_bruteforce(const Graph& g, int cap = kDefaultBruteCap);

/// sigma - ex: combined terminal degree minus the number of exterior major
/// vertices. Lower bound for the metric dimension of any graph.
int sigma_ex_lower_bound(const StructuralProfile& profile);

}  // namespace dimforce
