#include <cstdio>
#include <fstream>
#include <sstream>

#include "dimforce/families.hpp"
#include "dimforce/io.hpp"
#include "doctest.h"

using namespace dimforce;

namespace {

struct TempFile {
    std::string path;

    explicit TempFile(const std::string& name, const std::string& content)
        : path("io_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

Graph parse_edges(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::vector<Graph> parse_corpus(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list_corpus(in);
}

}  // namespace

TEST_CASE("edge lists round-trip") {
    for (const Graph& g : {path_graph(6), c4_bouquet(2), complete_bipartite(3, 3)}) {
        std::string text = write_edge_list(g);
        Graph back = parse_edges(text);
        CHECK(back.n == g.n);
        CHECK(back.edges == g.edges);
    }
}

TEST_CASE("edge list errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_edges("3 1\n0 x\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_edges(""), ParseError);
    CHECK_THROWS_AS(parse_edges("2 2\n0 1\n"), ParseError);       // missing edge
    CHECK_THROWS_AS(parse_edges("2 1\n0 1\n1 0\n"), ParseError);  // trailing tokens
    CHECK_THROWS_AS(parse_edges("3 2\n0 1\n0 1\n"), ParseError);  // duplicate edge
    // comments and blank lines are fine anywhere
    Graph g = parse_edges("# triangle\n3 3\n\n0 1 # first\n1 2\n0 2\n");
    CHECK(g.edge_count() == 3);
}

TEST_CASE("an edge-list corpus holds several graphs") {
    std::string text = write_edge_list(path_graph(3)) + "# next\n" + write_edge_list(cycle_graph(4));
    std::vector<Graph> graphs = parse_corpus(text);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].n == 3);
    CHECK(graphs[1].edge_count() == 4);
}

TEST_CASE("graph6 encodes known values") {
    CHECK(write_graph6(complete_graph(3)) == "Bw");
    CHECK(write_graph6(path_graph(3)) == "Bg");
    CHECK(parse_graph6_line("Bw").edges == complete_graph(3).edges);
    CHECK(parse_graph6_line("Bg").edges == path_graph(3).edges);
}

TEST_CASE("graph6 round-trips across sizes") {
    std::vector<Graph> samples = {build_graph(1, {}), path_graph(2),     grid_graph(3, 3),
                                  complete_graph(7),  c4_bouquet(3),     path_graph(63),
                                  star_graph(70)};
    for (const Graph& g : samples) {
        Graph back = parse_graph6_line(write_graph6(g));
        CHECK(back.n == g.n);
        CHECK(back.edges == g.edges);
    }
}

TEST_CASE("graph6 accepts the optional format header") {
    CHECK(parse_graph6_line(">>graph6<<Bw").edges == complete_graph(3).edges);
    std::istringstream with_header(">>graph6<<\nBg\nBw\n");
    std::vector<Graph> graphs = parse_graph6(with_header);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].edges == path_graph(3).edges);
    CHECK(graphs[1].edges == complete_graph(3).edges);
}

TEST_CASE("graph6 rejects malformed lines") {
    CHECK_THROWS_AS(parse_graph6_line(""), ParseError);
    CHECK_THROWS_AS(parse_graph6_line("B"), ParseError);    // body too short for n = 3
    CHECK_THROWS_AS(parse_graph6_line("Bwww"), ParseError); // body too long
    CHECK_THROWS_AS(parse_graph6_line("B\x1f"), ParseError);  // byte below the printable range
    CHECK_THROWS_AS(parse_graph6_line("~~A"), ParseError);  // 8-byte counts unsupported
    // padding bits beyond the last vertex pair must be zero
    CHECK_THROWS_AS(parse_graph6_line("Bx"), ParseError);
    CHECK_THROWS_WITH_AS(parse_graph6_line("Bx", 7), doctest::Contains("line 7"), ParseError);
}

TEST_CASE("load_graphs sniffs both formats") {
    TempFile as_g6("g6.txt", write_graph6(path_graph(4)) + "\n" + write_graph6(cycle_graph(5)) + "\n");
    std::vector<Graph> g6 = load_graphs(as_g6.path);
    REQUIRE(g6.size() == 2);
    CHECK(g6[1].edge_count() == 5);

    TempFile as_edges("edges.txt", "# corpus\n" + write_edge_list(star_graph(3)));
    std::vector<Graph> el = load_graphs(as_edges.path);
    REQUIRE(el.size() == 1);
    CHECK(el[0].degree(0) == 3);

    CHECK_THROWS_AS(load_graphs("definitely_missing_file.xyz"), std::runtime_error);
}
