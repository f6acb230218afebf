#pragma once

#include <cstdint>
#include <string>

#include "dimforce/graph.hpp"

namespace dimforce {

inline constexpr int kDefaultEnumerateCap = 7;
inline constexpr int kMaxEnumerateN = 8;    // hard ceiling for all_connected
inline constexpr int kMaxFreeTreeN = 16;    // hard ceiling for all_trees

/// Parsed `name:arg,arg,...` family description, e.g. "spider:2,2,2" or
/// "all_connected:6". The token `labeled` among the arguments disables
/// isomorphism dedup where it applies.
struct FamilySpec {
    std::string name;
    std::vector<int> args;
    bool dedup = true;

    std::string text() const;
};

FamilySpec parse_family_spec(const std::string& text);

/// Materializes a family. Same spec, same result, element for element.
/// enumerate_cap bounds n for all_connected (raise to kMaxEnumerateN via the
/// CLI's --big).
std::vector<Graph> generate(const FamilySpec& spec, int enumerate_cap = kDefaultEnumerateCap);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int s, int t);
Graph star_graph(int leaves);                   // K_{1,leaves}, center 0
Graph spider(const std::vector<int>& legs);     // center 0, legs of given lengths
Graph grid_graph(int rows, int cols);           // vertex (i,j) -> i*cols + j
Graph caterpillar(int spine, int leg_length);   // a leg per spine vertex

/// Center of a three-vertex path with k four-cycles glued to it: 3 + 3k
/// vertices, 2 + 4k edges, cycle rank k.
Graph c4_bouquet(int k);

/// One representative per isomorphism class of trees on n vertices, each in a
/// canonical labeling. Level-sequence enumeration of rooted trees, reduced to
/// free trees by re-rooting at the centroid.
std::vector<Graph> all_free_trees(int n);

/// One representative per isomorphism class of connected graphs on n
/// vertices (or every labeled connected graph with dedup=false, n <= 6).
std::vector<Graph> all_connected_graphs(int n, bool dedup = true);

/// Upper-triangle adjacency bits minimized over degree-class-preserving
/// relabelings; equal masks iff isomorphic. Intended for small n (<= 8-ish).
std::uint64_t canonical_edge_mask(const Graph& g);

}  // namespace dimforce
