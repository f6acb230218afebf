#include "dimforce/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace dimforce {

namespace {

// ---------------- rooted tree level sequences ----------------

/// Canonical level sequences of rooted trees on n nodes (root at level 1),
/// stepping from the path (1,2,...,n) down to the star (1,2,2,...,2). The
/// successor truncates at the last entry above 2 and tiles the tail with the
/// segment since that entry's parent.
struct LevelSequences {
    std::vector<int> s;
    bool fresh = true;

    explicit LevelSequences(int n) : s(n) { std::iota(s.begin(), s.end(), 1); }

    bool next() {
        if (fresh) {
            fresh = false;
            return true;
        }
        const int n = static_cast<int>(s.size());
        int p = -1;
        for (int i = n - 1; i >= 0; --i) {
            if (s[i] > 2) {
                p = i;
                break;
            }
        }
        if (p < 0) return false;
        int q = -1;
        for (int i = p - 1; i >= 0; --i) {
            if (s[i] == s[p] - 1) {
                q = i;
                break;
            }
        }
        for (int i = p; i < n; ++i) s[i] = s[i - (p - q)];
        return true;
    }
};

Graph tree_from_levels(const std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        for (int j = i - 1; j >= 0; --j) {
            if (s[j] == s[i] - 1) {
                edges.emplace_back(j, i);
                break;
            }
        }
    }
    return build_graph(n, edges);
}

std::vector<int> tree_centroids(const Graph& t) {
    const int n = t.n;
    if (n == 1) return {0};
    std::vector<int> parent(n, -1), order, size(n, 1), stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    order.reserve(n);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (int v : t.adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                parent[v] = u;
                stack.push_back(v);
            }
        }
    }
    for (int i = n - 1; i > 0; --i) size[parent[order[i]]] += size[order[i]];

    std::vector<int> cs;
    int best = n;
    for (int v = 0; v < n; ++v) {
        int heavy = n - size[v];
        for (int u : t.adj[v])
            if (parent[u] == v) heavy = std::max(heavy, size[u]);
        if (heavy < best) {
            best = heavy;
            cs.clear();
        }
        if (heavy == best) cs.push_back(v);
    }
    return cs;
}

/// Fully parenthesized shape string of the subtree at v; children sorted, so
/// equal strings mean isomorphic rooted trees.
std::string shape_string(const Graph& t, int v, int from) {
    std::vector<std::string> kids;
    for (int u : t.adj[v])
        if (u != from) kids.push_back(shape_string(t, u, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ")";
    return s;
}

/// Preorder relabeling with children visited in shape order. Children with
/// equal shapes are interchangeable, so the outcome is canonical.
void shape_relabel(const Graph& t, int v, int from, int my_label, int& next_label,
                   std::vector<Edge>& edges) {
    std::vector<std::pair<std::string, int>> kids;
    for (int u : t.adj[v])
        if (u != from) kids.emplace_back(shape_string(t, u, v), u);
    std::sort(kids.begin(), kids.end());
    for (const auto& [shape, u] : kids) {
        int label = next_label++;
        edges.emplace_back(my_label, label);
        shape_relabel(t, u, v, label, next_label, edges);
    }
}

/// Canonical (shape string, relabeled graph) of a free tree: root at the
/// centroid, taking the smaller string when there are two.
std::pair<std::string, Graph> free_tree_canonical(const Graph& t) {
    auto cs = tree_centroids(t);
    int root = cs.front();
    std::string best = shape_string(t, root, -1);
    if (cs.size() == 2) {
        std::string alt = shape_string(t, cs[1], -1);
        if (alt < best) {
            best = std::move(alt);
            root = cs[1];
        }
    }
    std::vector<Edge> edges;
    int next_label = 1;
    shape_relabel(t, root, -1, 0, next_label, edges);
    return {best, build_graph(t.n, edges)};
}

// ---------------- labeled enumeration ----------------

struct PairBits {
    std::vector<Edge> pair_of_bit;    // bit index -> vertex pair, lex order
    std::array<std::array<int, 8>, 8> bit_of_pair{};

    explicit PairBits(int n) {
        int bit = 0;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                pair_of_bit.emplace_back(u, v);
                bit_of_pair[u][v] = bit_of_pair[v][u] = bit;
                ++bit;
            }
        }
    }
};

bool connected_mask(int n, const PairBits& pb, std::uint32_t mask) {
    std::array<std::uint32_t, 8> adj{};
    for (std::uint32_t mm = mask; mm; mm &= mm - 1) {
        const auto& [u, v] = pb.pair_of_bit[std::countr_zero(mm)];
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    std::uint32_t reach = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
        frontier = next & ~reach;
        reach |= frontier;
    }
    return reach == (std::uint32_t{1} << n) - 1;
}

Graph graph_from_mask(int n, const PairBits& pb, std::uint32_t mask) {
    std::vector<Edge> edges;
    for (std::uint32_t mm = mask; mm; mm &= mm - 1) edges.push_back(pb.pair_of_bit[std::countr_zero(mm)]);
    return build_graph(n, edges);
}

int parse_int(const std::string& token) {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad number '" + token + "' in family spec");
    return value;
}

void need_args(const FamilySpec& spec, std::size_t count) {
    if (spec.args.size() != count)
        throw std::invalid_argument("family '" + spec.name + "' takes " + std::to_string(count) +
                                    " argument(s), got " + std::to_string(spec.args.size()));
}

}  // namespace

std::string FamilySpec::text() const {
    std::ostringstream out;
    out << name;
    for (std::size_t i = 0; i < args.size(); ++i) out << (i == 0 ? ':' : ',') << args[i];
    if (!dedup) out << (args.empty() ? ":labeled" : ",labeled");
    return out.str();
}

FamilySpec parse_family_spec(const std::string& text) {
    FamilySpec spec;
    auto colon = text.find(':');
    spec.name = text.substr(0, colon);
    if (spec.name.empty()) throw std::invalid_argument("empty family name in '" + text + "'");
    if (colon != std::string::npos) {
        std::stringstream args(text.substr(colon + 1));
        std::string token;
        while (std::getline(args, token, ',')) {
            if (token == "labeled")
                spec.dedup = false;
            else
                spec.args.push_back(parse_int(token));
        }
    }
    return spec;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return build_graph(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("complete_bipartite needs both parts non-empty");
    std::vector<Edge> edges;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) edges.emplace_back(u, s + v);
    return build_graph(s + t, edges);
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    return complete_bipartite(1, leaves);
}

Graph spider(const std::vector<int>& legs) {
    if (legs.empty()) throw std::invalid_argument("spider needs at least one leg");
    std::vector<Edge> edges;
    int next = 1;
    for (int len : legs) {
        if (len < 1) throw std::invalid_argument("spider leg lengths must be >= 1");
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return build_graph(next, edges);
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs positive dimensions");
    std::vector<Edge> edges;
    auto id = [cols](int i, int j) { return i * cols + j; };
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (j + 1 < cols) edges.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < rows) edges.emplace_back(id(i, j), id(i + 1, j));
        }
    }
    return build_graph(rows * cols, edges);
}

Graph caterpillar(int spine, int leg_length) {
    if (spine < 1 || leg_length < 0) throw std::invalid_argument("caterpillar needs spine >= 1, leg >= 0");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
    int next = spine;
    for (int i = 0; i < spine; ++i) {
        int prev = i;
        for (int j = 0; j < leg_length; ++j) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return build_graph(spine + spine * leg_length, edges);
}

Graph c4_bouquet(int k) {
    if (k < 1) throw std::invalid_argument("c4_bouquet needs k >= 1");
    std::vector<Edge> edges{{0, 1}, {0, 2}};
    for (int i = 0; i < k; ++i) {
        int base = 3 + 3 * i;
        edges.emplace_back(0, base);
        edges.emplace_back(base, base + 1);
        edges.emplace_back(base + 1, base + 2);
        edges.emplace_back(0, base + 2);
    }
    return build_graph(3 + 3 * k, edges);
}

std::vector<Graph> all_free_trees(int n) {
    if (n < 1) throw std::invalid_argument("all_trees needs n >= 1");
    if (n > kMaxFreeTreeN)
        throw std::invalid_argument("all_trees is capped at n = " + std::to_string(kMaxFreeTreeN));
    if (n == 1) return {build_graph(1, {})};

    std::vector<Graph> out;
    std::set<std::string> seen;
    LevelSequences sequences(n);
    while (sequences.next()) {
        auto [shape, labeled] = free_tree_canonical(tree_from_levels(sequences.s));
        if (seen.insert(shape).second) out.push_back(std::move(labeled));
    }
    return out;
}

std::vector<Graph> all_connected_graphs(int n, bool dedup) {
    if (n < 1) throw std::invalid_argument("all_connected needs n >= 1");
    if (n > kMaxEnumerateN)
        throw std::invalid_argument("all_connected is capped at n = " + std::to_string(kMaxEnumerateN));
    if (!dedup && n > 6)
        throw std::invalid_argument("labeled (no-dedup) enumeration is capped at n = 6");
    if (n == 1) return {build_graph(1, {})};

    const PairBits pb(n);
    const int m = n * (n - 1) / 2;
    const std::uint32_t top = std::uint32_t{1} << m;
    std::vector<Graph> out;

    if (!dedup) {
        for (std::uint32_t mask = 0; mask < top; ++mask)
            if (connected_mask(n, pb, mask)) out.push_back(graph_from_mask(n, pb, mask));
        return out;
    }

    // The lowest mask of each isomorphism class is its representative; after
    // emitting one, mark every relabeling of it as seen.
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<std::vector<int>> perms;
    {
        auto p = identity;
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }

    std::vector<bool> seen(top, false);
    for (std::uint32_t mask = 0; mask < top; ++mask) {
        if (seen[mask] || !connected_mask(n, pb, mask)) continue;
        out.push_back(graph_from_mask(n, pb, mask));
        for (const auto& perm : perms) {
            std::uint32_t image = 0;
            for (std::uint32_t mm = mask; mm; mm &= mm - 1) {
                const auto& [u, v] = pb.pair_of_bit[std::countr_zero(mm)];
                image |= std::uint32_t{1} << pb.bit_of_pair[perm[u]][perm[v]];
            }
            seen[image] = true;
        }
    }
    return out;
}

std::uint64_t canonical_edge_mask(const Graph& g) {
    const int n = g.n;
    if (n > 11) throw std::invalid_argument("canonical_edge_mask is capped at n = 11");

    // Iterated degree refinement: colors start as degrees and are re-ranked
    // by (color, sorted neighbor colors) until stable. Ranks are assigned by
    // sorting the signatures themselves, so they are relabeling-invariant.
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            for (int u : g.adj[v]) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& s : sig) rank.emplace(s, 0);
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        std::vector<int> fresh(n);
        for (int v = 0; v < n; ++v) fresh[v] = rank[sig[v]];
        if (fresh == color) break;
        color = std::move(fresh);
    }

    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < n; ++v) by_color[color[v]].push_back(v);
    std::vector<std::vector<int>> groups;
    for (auto& [c, members] : by_color) groups.push_back(std::move(members));

    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> arrangement(n);
    while (true) {
        int at = 0;
        for (const auto& group : groups)
            for (int v : group) arrangement[at++] = v;
        std::uint64_t mask = 0;
        int bit = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q, ++bit)
                if (g.adjacent(arrangement[p], arrangement[q])) mask |= std::uint64_t{1} << bit;
        best = std::min(best, mask);

        std::size_t gi = 0;
        while (gi < groups.size() && !std::next_permutation(groups[gi].begin(), groups[gi].end())) ++gi;
        if (gi == groups.size()) break;
    }
    return best;
}

std::vector<Graph> generate(const FamilySpec& spec, int enumerate_cap) {
    const std::string& f = spec.name;
    if (f == "path") {
        need_args(spec, 1);
        return {path_graph(spec.args[0])};
    }
    if (f == "cycle") {
        need_args(spec, 1);
        return {cycle_graph(spec.args[0])};
    }
    if (f == "complete") {
        need_args(spec, 1);
        return {complete_graph(spec.args[0])};
    }
    if (f == "complete_bipartite") {
        need_args(spec, 2);
        return {complete_bipartite(spec.args[0], spec.args[1])};
    }
    if (f == "star") {
        need_args(spec, 1);
        return {star_graph(spec.args[0])};
    }
    if (f == "spider") {
        if (spec.args.empty()) throw std::invalid_argument("spider needs leg lengths");
        return {spider(spec.args)};
    }
    if (f == "grid") {
        need_args(spec, 2);
        return {grid_graph(spec.args[0], spec.args[1])};
    }
    if (f == "caterpillar") {
        need_args(spec, 2);
        return {caterpillar(spec.args[0], spec.args[1])};
    }
    if (f == "c4_bouquet") {
        need_args(spec, 1);
        return {c4_bouquet(spec.args[0])};
    }
    if (f == "all_trees") {
        need_args(spec, 1);
        return all_free_trees(spec.args[0]);
    }
    if (f == "all_connected") {
        need_args(spec, 1);
        if (spec.args[0] > enumerate_cap)
            throw std::invalid_argument("all_connected:" + std::to_string(spec.args[0]) +
                                        " exceeds the enumeration cap " + std::to_string(enumerate_cap) +
                                        " (use --big or raise the cap)");
        return all_connected_graphs(spec.args[0], spec.dedup);
    }
    if (f == "t_plus_e") {
        need_args(spec, 1);
        int n_max = spec.args[0];
        if (n_max < 3) throw std::invalid_argument("t_plus_e needs n >= 3");
        std::vector<Graph> out;
        for (int n = 3; n <= n_max; ++n) {
            for (const Graph& t : all_free_trees(n))
                for (const Edge& e : complement_edges(t)) out.push_back(add_edge(t, e));
        }
        return out;
    }
    throw std::invalid_argument("unknown family '" + f + "'");
}

}  // namespace dimforce
