#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dimforce {

using VertexSet = std::vector<int>;     // always kept sorted ascending
using Edge = std::pair<int, int>;       // normalized u < v

/// Undirected simple graph on vertices 0..n-1. Treat as immutable once built;
/// build_graph normalizes the edge list and keeps adjacency consistent with it.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;            // sorted, each pair u < v
    std::vector<std::vector<int>> adj;  // sorted neighbor lists

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    bool adjacent(int u, int v) const;
};

/// Hop distances between all vertex pairs. Pairs in different components get
/// the dedicated `unreachable` sentinel, never a large stand-in value.
struct DistanceMatrix {
    static constexpr int unreachable = -1;

    int n = 0;
    std::vector<int> dist;  // row-major n*n

    int at(int u, int v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
};

enum class GraphKind { Path, Tree, Unicyclic, Cyclic };

/// Classification of a connected graph; cycle_rank is |E| - |V| + 1.
/// Tree means "tree that is not a path"; Cyclic means cycle_rank >= 2.
struct GraphClass {
    GraphKind kind = GraphKind::Path;
    int cycle_rank = 0;
};

std::string kind_name(GraphKind k);

/// Validates and normalizes: rejects self-loops, out-of-range endpoints and
/// duplicate edges, naming the offending pair in the exception message.
Graph build_graph(int n, const std::vector<Edge>& edges);

/// BFS from every vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

/// Requires a connected graph.
GraphClass classify(const Graph& g);

/// Vertices of the single cycle of a unicyclic graph, in traversal order,
/// canonicalized: lowest cycle vertex first, then its smaller cycle neighbor.
VertexSet unique_cycle(const Graph& g);

/// All pairs u < v with N(u) \ {v} = N(v) \ {u} (covers both adjacent and
/// non-adjacent twins). Such pairs have identical distances to every other
/// vertex, so any resolving set must contain at least one of the two.
std::vector<Edge> twins(const Graph& g);

/// Non-adjacent pairs u < v, sorted.
std::vector<Edge> complement_edges(const Graph& g);

int min_degree(const Graph& g);

Graph add_edge(const Graph& g, Edge e);
Graph remove_edge(const Graph& g, Edge e);

/// Deletes v and relabels vertices above v down by one.
Graph remove_vertex(const Graph& g, int v);

}  // namespace dimforce
