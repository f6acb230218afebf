#pragma once

// Naive reference implementations used only to cross-check the library.
// Each takes the most direct route available and shares no code path with
// the implementation under test: Floyd-Warshall distances, sort-and-compare
// resolving tests, scan-until-stable forcing closures, and memoized
// path-cover recursion.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "dimforce/graph.hpp"

namespace oracle {

inline std::vector<std::vector<int>> distances(const dimforce::Graph& g) {
    const int n = g.n;
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (const auto& [u, v] : g.edges) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (int& x : row)
            if (x >= inf) x = -1;
    return d;
}

inline bool resolving(const dimforce::Graph& g, const std::vector<std::vector<int>>& d,
                      std::uint32_t mask) {
    std::vector<std::vector<int>> codes;
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> code;
        for (int w = 0; w < g.n; ++w)
            if (mask & (std::uint32_t{1} << w)) code.push_back(d[v][w]);
        codes.push_back(std::move(code));
    }
    std::sort(codes.begin(), codes.end());
    return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

inline int dim(const dimforce::Graph& g) {
    auto d = distances(g);
    for (int k = 1; k < g.n; ++k)
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g.n); ++mask)
            if (std::popcount(mask) == k && resolving(g, d, mask)) return k;
    return g.n;  // unreachable for n >= 2
}

inline std::uint32_t closure(const dimforce::Graph& g, std::uint32_t black) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < g.n; ++u) {
            if (!(black & (std::uint32_t{1} << u))) continue;
            int white = -1, count = 0;
            for (int v : g.adj[u])
                if (!(black & (std::uint32_t{1} << v))) {
                    white = v;
                    ++count;
                }
            if (count == 1) {
                black |= std::uint32_t{1} << white;
                changed = true;
            }
        }
    }
    return black;
}

inline int z(const dimforce::Graph& g) {
    const std::uint32_t full = (std::uint32_t{1} << g.n) - 1;
    for (int k = 1; k <= g.n; ++k)
        for (std::uint32_t mask = 0; mask <= full; ++mask)
            if (std::popcount(mask) == k && closure(g, mask) == full) return k;
    return g.n;
}

inline bool induces_path(const dimforce::Graph& g, std::uint32_t mask) {
    std::vector<int> vs;
    for (int v = 0; v < g.n; ++v)
        if (mask & (std::uint32_t{1} << v)) vs.push_back(v);
    if (vs.empty()) return false;
    int inside_edges = 0;
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int v : vs) {
        int deg = 0;
        for (int u : g.adj[v])
            if (mask & (std::uint32_t{1} << u)) {
                ++deg;
                if (u > v) {
                    ++inside_edges;
                    parent[find(u)] = find(v);
                }
            }
        if (deg > 2) return false;
    }
    if (inside_edges != static_cast<int>(vs.size()) - 1) return false;
    for (int v : vs)
        if (find(v) != find(vs[0])) return false;
    return true;
}

inline int path_cover(const dimforce::Graph& g, std::uint32_t remaining,
                      std::map<std::uint32_t, int>& memo) {
    if (remaining == 0) return 0;
    auto hit = memo.find(remaining);
    if (hit != memo.end()) return hit->second;
    int low = std::countr_zero(remaining);
    int best = g.n + 1;
    // every submask of `remaining` containing the lowest remaining vertex
    for (std::uint32_t sub = remaining; sub; sub = (sub - 1) & remaining) {
        if (!(sub & (std::uint32_t{1} << low))) continue;
        if (!induces_path(g, sub)) continue;
        best = std::min(best, 1 + path_cover(g, remaining & ~sub, memo));
    }
    memo[remaining] = best;
    return best;
}

inline int path_cover(const dimforce::Graph& g) {
    std::map<std::uint32_t, int> memo;
    return path_cover(g, (std::uint32_t{1} << g.n) - 1, memo);
}

}  // namespace oracle
