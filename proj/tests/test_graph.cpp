#include <algorithm>

#include "dimforce/families.hpp"
#include "dimforce/graph.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace dimforce;

TEST_CASE("build_graph normalizes and validates") {
    Graph g = build_graph(4, {{2, 1}, {0, 1}, {3, 2}});
    CHECK(g.n == 4);
    CHECK(g.edges == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.adj[1] == std::vector<int>{0, 2});
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 3));

    CHECK_THROWS_WITH_AS(build_graph(3, {{0, 0}}), doctest::Contains("(0,0)"),
                         std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(0, {}), std::invalid_argument);
}

TEST_CASE("all_pairs_distances matches Floyd-Warshall") {
    for (const Graph& g : {path_graph(6), cycle_graph(7), complete_bipartite(2, 3),
                           grid_graph(3, 3), c4_bouquet(2)}) {
        DistanceMatrix dm = all_pairs_distances(g);
        auto ref = oracle::distances(g);
        for (int u = 0; u < g.n; ++u)
            for (int v = 0; v < g.n; ++v) CHECK(dm.at(u, v) == ref[u][v]);
    }
}

TEST_CASE("disconnected pairs get the unreachable sentinel") {
    Graph g = build_graph(4, {{0, 1}, {2, 3}});
    DistanceMatrix dm = all_pairs_distances(g);
    CHECK(dm.at(0, 2) == DistanceMatrix::unreachable);
    CHECK(dm.at(1, 3) == DistanceMatrix::unreachable);
    CHECK(dm.at(0, 1) == 1);
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(path_graph(4)));
    CHECK(is_connected(build_graph(1, {})));
}

TEST_CASE("classify splits paths, trees, unicyclic, cyclic") {
    CHECK(classify(path_graph(5)).kind == GraphKind::Path);
    CHECK(classify(build_graph(1, {})).kind == GraphKind::Path);
    CHECK(classify(star_graph(3)).kind == GraphKind::Tree);
    CHECK(classify(cycle_graph(4)).kind == GraphKind::Unicyclic);
    CHECK(classify(cycle_graph(4)).cycle_rank == 1);
    CHECK(classify(complete_graph(4)).kind == GraphKind::Cyclic);
    CHECK(classify(complete_graph(4)).cycle_rank == 3);
    CHECK(classify(c4_bouquet(2)).cycle_rank == 2);
    CHECK_THROWS_AS(classify(build_graph(3, {{0, 1}})), std::invalid_argument);
    CHECK(kind_name(GraphKind::Unicyclic) == "unicyclic");
}

TEST_CASE("unique_cycle walks the cycle in canonical order") {
    CHECK(unique_cycle(cycle_graph(5)) == VertexSet{0, 1, 2, 3, 4});
    // triangle with a tail hanging off vertex 2
    Graph tadpole = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    CHECK(unique_cycle(tadpole) == VertexSet{0, 1, 2});
    CHECK_THROWS_AS(unique_cycle(path_graph(4)), std::invalid_argument);
    CHECK_THROWS_AS(unique_cycle(complete_graph(4)), std::invalid_argument);
}

TEST_CASE("twins finds pairs with identical neighborhoods") {
    CHECK(twins(complete_graph(4)).size() == 6);  // all pairs are adjacent twins
    CHECK(twins(cycle_graph(4)) == std::vector<Edge>{{0, 2}, {1, 3}});
    CHECK(twins(star_graph(4)).size() == 6);  // the four leaves, pairwise
    CHECK(twins(path_graph(5)).empty());
    CHECK(twins(path_graph(3)) == std::vector<Edge>{{0, 2}});
}

TEST_CASE("complement, edge and vertex surgery") {
    CHECK(complement_edges(complete_graph(4)).empty());
    CHECK(complement_edges(path_graph(3)) == std::vector<Edge>{{0, 2}});
    CHECK(min_degree(star_graph(5)) == 1);
    CHECK(min_degree(cycle_graph(6)) == 2);

    Graph g = add_edge(path_graph(4), {0, 3});
    CHECK(classify(g).kind == GraphKind::Unicyclic);
    CHECK_THROWS_AS(add_edge(g, {0, 3}), std::invalid_argument);

    Graph back = remove_edge(g, {0, 3});
    CHECK(back.edges == path_graph(4).edges);
    CHECK_THROWS_AS(remove_edge(g, {0, 2}), std::invalid_argument);

    // dropping vertex 1 from the path 0-1-2-3 leaves 0 isolated from 1-2 (old 2-3)
    Graph cut = remove_vertex(path_graph(4), 1);
    CHECK(cut.n == 3);
    CHECK(cut.edges == std::vector<Edge>{{1, 2}});
}
