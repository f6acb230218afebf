#pragma once

#include "dimforce/forcing.hpp"
#include "dimforce/graph.hpp"
#include "dimforce/resolvability.hpp"

namespace dimforce {

enum class VertexClass {
    EndVertex,          // degree 1
    ExteriorDegreeTwo,  // degree 2, on some shortest path terminal -> its major vertex
    InteriorDegreeTwo,  // degree 2, on no such path
    MajorNonExterior,   // degree >= 3, no terminal vertices of its own
    ExteriorMajor,      // degree >= 3 with at least one terminal vertex
};

/// Branch structure around major vertices (degree >= 3). An end-vertex u is a
/// terminal vertex of major v when v is strictly closer to u than every other
/// major vertex; ties leave u assigned to nobody. sigma sums terminal counts
/// over all major vertices, ex counts the majors owning at least one terminal.
struct StructuralProfile {
    std::vector<VertexClass> classes;                   // per vertex
    std::vector<std::pair<int, VertexSet>> terminals;   // (exterior major, its terminals), by vertex
    int sigma = 0;
    int ex = 0;

    const VertexSet* terminals_of(int v) const;
};

/// Outcome of the path-cover-based zero forcing computation on a tree.
struct TreeZeroForcing {
    int z = 0;
    VertexSet witness;   // one endpoint per cover block; passes is_zero_forcing
    PathCover cover;     // canonical minimum path cover
    // Present when the tree meets the dim = Z characterization: a cover of
    // exactly sigma - ex blocks assembled from terminal paths.
    std::optional<PathCover> characterization_cover;
};

/// Lemma-level structure of a minimum zero forcing set on a tree with
/// dim = Z: around every exterior major vertex, exactly one terminal path
/// (major vertex included) must be disjoint from the set.
struct ZfsAudit {
    struct Entry {
        int major = -1;
        int omitted_paths = 0;               // terminal paths disjoint from S
        std::vector<VertexSet> paths;        // the terminal paths, sorted lists
    };
    std::vector<Entry> entries;
    bool ok = true;  // every entry has omitted_paths == 1
};

StructuralProfile structural_profile(const Graph& g, const DistanceMatrix& dm);

/// 1 for paths, sigma - ex otherwise. Requires a tree.
int tree_metric_dimension(const Graph& t);

/// Metric basis of a non-path tree: all terminal vertices except the lowest
/// one of each exterior major vertex. Size sigma - ex; errors on paths.
VertexSet tree_basis_construction(const Graph& t, const StructuralProfile& profile);

/// Z(T) via the path cover equality, with a forcing witness built from cover
/// endpoints (lexicographically least endpoint choice that forces).
TreeZeroForcing tree_zero_forcing_construction(const Graph& t, const StructuralProfile& profile,
                                               int cap = kDefaultPathCoverCap);

/// True iff dim(T) = Z(T): no interior degree-2 vertices and every major
/// vertex owns at least two terminal vertices. Paths qualify trivially.
bool dim_equals_Z_tree_predicate(const Graph& t, const StructuralProfile& profile);

/// Audits a minimum zero forcing set s against the expected branch structure.
/// Requires: t a tree whose predicate holds, s minimal and forcing.
ZfsAudit zfs_structure_audit(const Graph& t, const VertexSet& s);

/// Resolving set for t + e of size at most dim(t) + 1: the two end-vertices
/// when t is a path, otherwise the tree basis plus one cycle vertex chosen by
/// how the basis distributes over the subtrees hanging off the cycle.
VertexSet unicyclic_resolving_construction(const Graph& t, Edge e);

}  // namespace dimforce
