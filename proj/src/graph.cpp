#include "dimforce/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace dimforce {

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::string kind_name(GraphKind k) {
    switch (k) {
        case GraphKind::Path: return "path";
        case GraphKind::Tree: return "tree";
        case GraphKind::Unicyclic: return "unicyclic";
        case GraphKind::Cyclic: return "cyclic";
    }
    return "unknown";
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex, got n=" + std::to_string(n));
    Graph g;
    g.n = n;
    g.adj.resize(n);
    std::set<Edge> seen;
    for (const auto& [a, b] : edges) {
        const std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge " + pair + " out of range for n=" + std::to_string(n));
        if (a == b) throw std::invalid_argument("self-loop " + pair + " not allowed");
        Edge e{std::min(a, b), std::max(a, b)};
        if (!seen.insert(e).second) throw std::invalid_argument("duplicate edge " + pair);
    }
    g.edges.assign(seen.begin(), seen.end());
    for (const auto& [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix dm;
    dm.n = g.n;
    dm.dist.assign(static_cast<std::size_t>(g.n) * g.n, DistanceMatrix::unreachable);
    std::deque<int> queue;
    for (int s = 0; s < g.n; ++s) {
        int* row = dm.dist.data() + static_cast<std::size_t>(s) * g.n;
        row[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.adj[u]) {
                if (row[v] == DistanceMatrix::unreachable) {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return dm;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<char> seen(g.n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                queue.push_back(v);
            }
        }
    }
    return count == g.n;
}

GraphClass classify(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("classify requires a connected graph");
    GraphClass c;
    c.cycle_rank = g.edge_count() - g.n + 1;
    if (c.cycle_rank == 0) {
        int maxdeg = 0;
        for (int v = 0; v < g.n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
        c.kind = (maxdeg <= 2) ? GraphKind::Path : GraphKind::Tree;
    } else if (c.cycle_rank == 1) {
        c.kind = GraphKind::Unicyclic;
    } else {
        c.kind = GraphKind::Cyclic;
    }
    return c;
}

VertexSet unique_cycle(const Graph& g) {
    if (classify(g).kind != GraphKind::Unicyclic)
        throw std::invalid_argument("unique_cycle requires a unicyclic graph");

    // Strip degree-1 vertices until only the cycle remains.
    std::vector<int> deg(g.n);
    std::vector<char> alive(g.n, 1);
    std::deque<int> queue;
    for (int v = 0; v < g.n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) queue.push_back(v);
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        alive[u] = 0;
        for (int v : g.adj[u])
            if (alive[v] && --deg[v] == 1) queue.push_back(v);
    }

    int start = -1;
    for (int v = 0; v < g.n && start < 0; ++v)
        if (alive[v]) start = v;

    // Walk the cycle from the lowest vertex toward its smaller live neighbor.
    VertexSet cycle{start};
    int prev = start, cur = -1;
    for (int v : g.adj[start]) {
        if (alive[v]) {
            cur = v;
            break;  // neighbor lists are sorted, first live one is smallest
        }
    }
    while (cur != start) {
        cycle.push_back(cur);
        int next = -1;
        for (int v : g.adj[cur]) {
            if (alive[v] && v != prev) {
                next = v;
                break;
            }
        }
        prev = cur;
        cur = next;
    }
    return cycle;
}

std::vector<Edge> twins(const Graph& g) {
    std::vector<Edge> out;
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            auto strip = [](const std::vector<int>& nb, int drop) {
                std::vector<int> r;
                r.reserve(nb.size());
                for (int x : nb)
                    if (x != drop) r.push_back(x);
                return r;
            };
            if (strip(g.adj[u], v) == strip(g.adj[v], u)) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<Edge> complement_edges(const Graph& g) {
    std::vector<Edge> out;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

int min_degree(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("min_degree of empty graph");
    int d = g.degree(0);
    for (int v = 1; v < g.n; ++v) d = std::min(d, g.degree(v));
    return d;
}

Graph add_edge(const Graph& g, Edge e) {
    auto edges = g.edges;
    edges.push_back(e);
    return build_graph(g.n, edges);
}

Graph remove_edge(const Graph& g, Edge e) {
    Edge norm{std::min(e.first, e.second), std::max(e.first, e.second)};
    std::vector<Edge> edges;
    bool found = false;
    for (const auto& f : g.edges) {
        if (f == norm) {
            found = true;
            continue;
        }
        edges.push_back(f);
    }
    if (!found)
        throw std::invalid_argument("edge (" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + ") not present");
    return build_graph(g.n, edges);
}

Graph remove_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    if (g.n == 1) throw std::invalid_argument("cannot remove the last vertex");
    std::vector<Edge> edges;
    auto relabel = [v](int x) { return x > v ? x - 1 : x; };
    for (const auto& [a, b] : g.edges)
        if (a != v && b != v) edges.emplace_back(relabel(a), relabel(b));
    return build_graph(g.n - 1, edges);
}

}  // namespace dimforce
