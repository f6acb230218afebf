#include "dimforce/resolvability.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dimforce/subsets.hpp"
#include "dimforce/tree_theory.hpp"

namespace dimforce {

namespace {

void check_landmarks(const Graph& g, const VertexSet& w) {
    for (int x : w)
        if (x < 0 || x >= g.n)
            throw std::invalid_argument("landmark " + std::to_string(x) + " out of range");
}

}  // namespace

MetricCode metric_code(const Graph& g, const DistanceMatrix& dm, int v, const VertexSet& w) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    check_landmarks(g, w);
    MetricCode code;
    code.landmarks = w;
    code.distances.reserve(w.size());
    for (int x : w) code.distances.push_back(dm.at(v, x));
    return code;
}

ResolvingCheck is_resolving(const Graph& g, const DistanceMatrix& dm, const VertexSet& w) {
    check_landmarks(g, w);
    ResolvingCheck r;
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            bool same = true;
            for (int x : w) {
                if (dm.at(u, x) != dm.at(v, x)) {
                    same = false;
                    break;
                }
            }
            if (same) {
                r.resolving = false;
                r.unresolved_pair = Edge{u, v};
                return r;
            }
        }
    }
    r.resolving = true;
    return r;
}

bool strongly_resolves(const Graph& g, const DistanceMatrix& dm, const VertexSet& w) {
    check_landmarks(g, w);
    if (w.empty()) return g.n < 2;
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            int lo = std::numeric_limits<int>::max();
            int hi = std::numeric_limits<int>::min();
            for (int x : w) {
                int d = dm.at(u, x) - dm.at(v, x);
                lo = std::min(lo, d);
                hi = std::max(hi, d);
            }
            if (lo == hi) return false;  // codes differ by a constant vector
        }
    }
    return true;
}

ResolutionClasses resolution_classes(const Graph& g, const DistanceMatrix& dm, const VertexSet& w) {
    if (w.empty()) throw std::invalid_argument("resolution_classes requires a non-empty landmark set");
    check_landmarks(g, w);

    auto related = [&](int u, int v) {
        int first = dm.at(u, w[0]) - dm.at(v, w[0]);
        for (int x : w)
            if (dm.at(u, x) - dm.at(v, x) != first) return false;
        return true;
    };

    // Union-find over related pairs; the relation is transitive (constant
    // difference vectors add), so this reproduces its equivalence classes.
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (related(u, v)) parent[find(u)] = find(v);

    std::vector<VertexSet> buckets(g.n);
    for (int v = 0; v < g.n; ++v) buckets[find(v)].push_back(v);
    ResolutionClasses rc;
    for (auto& b : buckets)
        if (!b.empty()) rc.classes.push_back(std::move(b));
    std::sort(rc.classes.begin(), rc.classes.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return rc;
}

DimensionResult metric_dimension_bruteforce(const Graph& g, int cap) {
    if (g.n < 2) throw std::invalid_argument("metric dimension needs n >= 2");
    if (!is_connected(g)) throw std::invalid_argument("metric dimension requires a connected graph");
    if (g.n > cap)
        throw std::invalid_argument("metric_dimension_bruteforce: n=" + std::to_string(g.n) +
                                    " exceeds cap " + std::to_string(cap) +
                                    " (raise the cap to allow this)");
    DistanceMatrix dm = all_pairs_distances(g);
    for (int k = 1; k < g.n; ++k) {
        auto c = first_combination(k);
        do {
            if (is_resolving(g, dm, c).resolving) return {k, c};
        } while (next_combination(c, g.n));
    }
    // Unreachable: V minus one vertex always resolves a connected graph.
    throw std::logic_error("no resolving set found");
}

int sigma_ex_lower_bound(const StructuralProfile& profile) {
    return profile.sigma - profile.ex;
}

}  // namespace dimforce
