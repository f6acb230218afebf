#pragma once

#include <istream>
#include <string>

#include "dimforce/graph.hpp"

namespace dimforce {

/// Input rejection with the 1-based line it happened on.
struct ParseError : std::runtime_error {
    int line;

    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

/// Edge-list format: `n m` header then m lines `u v`; `#` starts a comment,
/// blank lines are ignored. A file may hold several graphs back to back.
Graph parse_edge_list(std::istream& in);
std::vector<Graph> parse_edge_list_corpus(std::istream& in);
std::string write_edge_list(const Graph& g);

/// graph6: one graph per line, optional `>>graph6<<` header. Upper-triangle
/// adjacency bits in column order, packed big-endian into printable 6-bit
/// chunks. Strict about length and zero padding.
Graph parse_graph6_line(const std::string& line, int line_no = 1);
std::vector<Graph> parse_graph6(std::istream& in);
std::string write_graph6(const Graph& g);

/// Reads a whole file, sniffing the format: a leading digit means edge list,
/// anything else graph6.
std::vector<Graph> load_graphs(const std::string& path);

}  // namespace dimforce
