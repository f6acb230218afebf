#include <algorithm>

#include "dimforce/families.hpp"
#include "dimforce/tree_theory.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace dimforce;

namespace {

StructuralProfile profile_of(const Graph& g) { return structural_profile(g, all_pairs_distances(g)); }

// two degree-3 hubs joined by a three-vertex middle path, leaf pairs at both ends
Graph double_spider() {
    return build_graph(9, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {6, 8}});
}

}  // namespace

TEST_CASE("structural profile of a spider") {
    Graph sp = spider({2, 2, 2});  // center 0, legs 0-1-2, 0-3-4, 0-5-6
    StructuralProfile p = profile_of(sp);
    CHECK(p.classes[0] == VertexClass::ExteriorMajor);
    CHECK(p.classes[1] == VertexClass::ExteriorDegreeTwo);
    CHECK(p.classes[2] == VertexClass::EndVertex);
    CHECK(p.sigma == 3);
    CHECK(p.ex == 1);
    REQUIRE(p.terminals_of(0) != nullptr);
    CHECK(*p.terminals_of(0) == VertexSet{2, 4, 6});
    CHECK(p.terminals_of(1) == nullptr);
}

TEST_CASE("middle vertices between two majors are interior") {
    StructuralProfile p = profile_of(double_spider());
    CHECK(p.classes[0] == VertexClass::ExteriorMajor);
    CHECK(p.classes[6] == VertexClass::ExteriorMajor);
    CHECK(p.classes[3] == VertexClass::InteriorDegreeTwo);
    CHECK(p.classes[4] == VertexClass::InteriorDegreeTwo);
    CHECK(p.classes[5] == VertexClass::InteriorDegreeTwo);
    CHECK(p.sigma == 4);
    CHECK(p.ex == 2);
}

TEST_CASE("in a tree every end-vertex owns a unique nearest major") {
    // Walking inward from a leaf, the chain of degree-2 vertices leads to a
    // first branch vertex, which is strictly nearer than any other major. So
    // whenever a tree has a major vertex at all, sigma counts every leaf.
    for (int n = 4; n <= 9; ++n)
        for (const Graph& t : all_free_trees(n)) {
            if (classify(t).kind != GraphKind::Tree) continue;  // paths have no majors
            StructuralProfile p = profile_of(t);
            int leaves = 0;
            for (int v = 0; v < t.n; ++v)
                if (t.degree(v) == 1) ++leaves;
            CHECK(p.sigma == leaves);
        }
}

TEST_CASE("tree metric dimension formula and basis") {
    CHECK(tree_metric_dimension(path_graph(7)) == 1);
    CHECK(tree_metric_dimension(spider({2, 2, 2})) == 2);
    CHECK(tree_metric_dimension(star_graph(5)) == 4);
    CHECK(tree_metric_dimension(double_spider()) == 2);
    CHECK(tree_metric_dimension(caterpillar(3, 1)) == 2);
    CHECK_THROWS_AS(tree_metric_dimension(cycle_graph(4)), std::invalid_argument);

    Graph sp = spider({2, 2, 2});
    VertexSet basis = tree_basis_construction(sp, profile_of(sp));
    CHECK(basis == VertexSet{4, 6});  // terminals {2,4,6} minus the lowest
    CHECK(is_resolving(sp, all_pairs_distances(sp), basis).resolving);
    CHECK_THROWS_AS(tree_basis_construction(path_graph(4), profile_of(path_graph(4))),
                    std::invalid_argument);
}

TEST_CASE("formula equals bruteforce on every tree up to 9 vertices") {
    for (int n = 2; n <= 9; ++n)
        for (const Graph& t : all_free_trees(n)) {
            CHECK(tree_metric_dimension(t) == oracle::dim(t));
            StructuralProfile p = profile_of(t);
            if (classify(t).kind == GraphKind::Tree) {
                VertexSet basis = tree_basis_construction(t, p);
                CHECK(static_cast<int>(basis.size()) == tree_metric_dimension(t));
                CHECK(is_resolving(t, all_pairs_distances(t), basis).resolving);
            }
        }
}

TEST_CASE("tree zero forcing via path covers") {
    Graph sp = spider({2, 2, 2});
    TreeZeroForcing res = tree_zero_forcing_construction(sp, profile_of(sp));
    CHECK(res.z == 2);
    CHECK(is_zero_forcing(sp, res.witness));
    CHECK(static_cast<int>(res.cover.blocks.size()) == res.z);
    REQUIRE(res.characterization_cover.has_value());
    CHECK(res.characterization_cover->blocks.size() == 2);

    TreeZeroForcing path_res = tree_zero_forcing_construction(path_graph(6), profile_of(path_graph(6)));
    CHECK(path_res.z == 1);
    CHECK(path_res.witness.size() == 1);

    // interior vertices break the characterization: no terminal-path cover
    TreeZeroForcing ds = tree_zero_forcing_construction(double_spider(), profile_of(double_spider()));
    CHECK(ds.z == 3);
    CHECK_FALSE(ds.characterization_cover.has_value());

    for (int n = 2; n <= 8; ++n)
        for (const Graph& t : all_free_trees(n)) {
            TreeZeroForcing r = tree_zero_forcing_construction(t, profile_of(t));
            CHECK(r.z == oracle::z(t));
            CHECK(is_zero_forcing(t, r.witness));
        }
}

TEST_CASE("dim equals Z characterization predicate") {
    CHECK(dim_equals_Z_tree_predicate(path_graph(5), profile_of(path_graph(5))));
    CHECK(dim_equals_Z_tree_predicate(spider({2, 2, 2}), profile_of(spider({2, 2, 2}))));
    CHECK(dim_equals_Z_tree_predicate(star_graph(4), profile_of(star_graph(4))));
    CHECK_FALSE(dim_equals_Z_tree_predicate(double_spider(), profile_of(double_spider())));
    // a major owning a single terminal also breaks the predicate: hang one
    // leaf off the middle of the double spider's connecting path
    Graph lonely = add_edge(
        build_graph(10, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {6, 8}}), {4, 9});
    StructuralProfile p = profile_of(lonely);
    CHECK_FALSE(dim_equals_Z_tree_predicate(lonely, p));

    for (int n = 2; n <= 9; ++n)
        for (const Graph& t : all_free_trees(n))
            CHECK(dim_equals_Z_tree_predicate(t, profile_of(t)) == (oracle::dim(t) == oracle::z(t)));
}

TEST_CASE("minimum forcing sets omit exactly one terminal path per major") {
    Graph sp = spider({2, 2, 2});
    VertexSet witness = zero_forcing_bruteforce(sp).witness;
    ZfsAudit audit = zfs_structure_audit(sp, witness);
    CHECK(audit.ok);
    REQUIRE(audit.entries.size() == 1);
    CHECK(audit.entries[0].major == 0);
    CHECK(audit.entries[0].omitted_paths == 1);
    CHECK(audit.entries[0].paths.size() == 3);

    // a non-forcing set is rejected outright
    CHECK_THROWS_AS(zfs_structure_audit(sp, {0, 1}), std::invalid_argument);
    // trees failing the predicate are rejected too
    CHECK_THROWS_AS(zfs_structure_audit(double_spider(), zero_forcing_bruteforce(double_spider()).witness),
                    std::invalid_argument);

    for (int n = 4; n <= 9; ++n)
        for (const Graph& t : all_free_trees(n)) {
            StructuralProfile p = profile_of(t);
            if (classify(t).kind != GraphKind::Tree || !dim_equals_Z_tree_predicate(t, p)) continue;
            CHECK(zfs_structure_audit(t, zero_forcing_bruteforce(t).witness).ok);
        }
}

TEST_CASE("unicyclic construction: paths use their two ends") {
    VertexSet w = unicyclic_resolving_construction(path_graph(6), {0, 5});
    CHECK(w == VertexSet{0, 5});
    Graph c6 = add_edge(path_graph(6), {0, 5});
    CHECK(is_resolving(c6, all_pairs_distances(c6), w).resolving);
}

TEST_CASE("unicyclic construction stays resolving and small on all small trees") {
    for (int n = 3; n <= 7; ++n)
        for (const Graph& t : all_free_trees(n))
            for (const Edge& e : complement_edges(t)) {
                Graph g = add_edge(t, e);
                VertexSet w = unicyclic_resolving_construction(t, e);
                CHECK(is_resolving(g, all_pairs_distances(g), w).resolving);
                CHECK(static_cast<int>(w.size()) <= oracle::dim(t) + 1);
                // deterministic: same inputs, same landmark set
                CHECK(unicyclic_resolving_construction(t, e) == w);
            }
}

TEST_CASE("unicyclic construction rejects bad input") {
    CHECK_THROWS_AS(unicyclic_resolving_construction(cycle_graph(4), {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(unicyclic_resolving_construction(path_graph(4), {0, 1}), std::invalid_argument);
}
