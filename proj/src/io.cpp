#include "dimforce/io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

namespace dimforce {

namespace {

constexpr const char* kGraph6Header = ">>graph6<<";

/// Line reader that strips comments and hands out whitespace-split tokens,
/// remembering line numbers for error messages.
struct TokenReader {
    std::istream& in;
    int line_no = 0;
    std::vector<std::string> tokens;
    std::size_t at = 0;

    explicit TokenReader(std::istream& in_) : in(in_) {}

    bool refill() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            std::istringstream split(line);
            tokens.assign(std::istream_iterator<std::string>(split), {});
            at = 0;
            if (!tokens.empty()) return true;
        }
        return false;
    }

    bool done() { return at >= tokens.size() && !refill(); }

    int next_int(const char* what) {
        if (done()) throw ParseError(line_no, std::string("expected ") + what + ", got end of input");
        const std::string& token = tokens[at];
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size())
            throw ParseError(line_no, std::string("expected ") + what + ", got '" + token + "'");
        ++at;
        return value;
    }
};

Graph parse_one(TokenReader& reader) {
    int n = reader.next_int("vertex count");
    int m = reader.next_int("edge count");
    if (n < 1) throw ParseError(reader.line_no, "vertex count must be positive");
    if (m < 0) throw ParseError(reader.line_no, "edge count must be non-negative");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u = reader.next_int("edge endpoint");
        int v = reader.next_int("edge endpoint");
        edges.emplace_back(u, v);
    }
    try {
        return build_graph(n, edges);
    } catch (const std::invalid_argument& err) {
        throw ParseError(reader.line_no, err.what());
    }
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    TokenReader reader(in);
    if (reader.done()) throw ParseError(reader.line_no, "empty input");
    Graph g = parse_one(reader);
    if (!reader.done()) throw ParseError(reader.line_no, "trailing content after the graph");
    return g;
}

std::vector<Graph> parse_edge_list_corpus(std::istream& in) {
    TokenReader reader(in);
    std::vector<Graph> graphs;
    while (!reader.done()) graphs.push_back(parse_one(reader));
    if (graphs.empty()) throw ParseError(reader.line_no, "empty input");
    return graphs;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6_line(const std::string& raw, int line_no) {
    std::string line = raw;
    if (line.rfind(kGraph6Header, 0) == 0) line.erase(0, std::string(kGraph6Header).size());
    if (line.empty()) throw ParseError(line_no, "empty graph6 line");

    std::size_t at = 0;
    auto take = [&](const char* what) -> int {
        if (at >= line.size()) throw ParseError(line_no, std::string("graph6 truncated in ") + what);
        unsigned char c = static_cast<unsigned char>(line[at++]);
        if (c < 63 || c > 126)
            throw ParseError(line_no, "graph6 byte out of range at column " + std::to_string(at));
        return c - 63;
    };

    long n = 0;
    int first = take("vertex count");
    if (first < 63) {
        n = first;
    } else {
        if (at < line.size() && line[at] == '~')
            throw ParseError(line_no, "graph6 vertex counts above 258047 are not supported");
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | take("vertex count");
    }
    if (n < 1) throw ParseError(line_no, "graph6 vertex count must be positive");

    const long bits = n * (n - 1) / 2;
    const long bytes = (bits + 5) / 6;
    if (static_cast<long>(line.size()) - static_cast<long>(at) != bytes)
        throw ParseError(line_no, "graph6 body has " + std::to_string(line.size() - at) +
                                      " bytes, expected " + std::to_string(bytes));

    std::vector<Edge> edges;
    long bit = 0;
    int buffer = 0, buffered = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            if (buffered == 0) {
                buffer = take("adjacency bits");
                buffered = 6;
            }
            if (buffer & (1 << (buffered - 1))) edges.emplace_back(u, v);
            --buffered;
        }
    }
    if (buffered > 0 && (buffer & ((1 << buffered) - 1)) != 0)
        throw ParseError(line_no, "graph6 padding bits must be zero");
    return build_graph(static_cast<int>(n), edges);
}

std::vector<Graph> parse_graph6(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line == kGraph6Header) continue;
        graphs.push_back(parse_graph6_line(line, line_no));
    }
    if (graphs.empty()) throw ParseError(line_no, "no graph6 data found");
    return graphs;
}

std::string write_graph6(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        if (g.n > 258047) throw std::invalid_argument("graph6 output supports n <= 258047");
        out.push_back('~');
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    }
    int buffer = 0, buffered = 0;
    for (int v = 1; v < g.n; ++v) {
        for (int u = 0; u < v; ++u) {
            buffer = (buffer << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++buffered == 6) {
                out.push_back(static_cast<char>(buffer + 63));
                buffer = 0;
                buffered = 0;
            }
        }
    }
    if (buffered > 0) out.push_back(static_cast<char>((buffer << (6 - buffered)) + 63));
    return out;
}

std::vector<Graph> load_graphs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    // First meaningful character decides the format: digits open an edge-list
    // header, anything else is graph6 (whose bytes are all >= '?').
    std::istringstream sniff(text);
    std::string line;
    while (std::getline(sniff, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        for (char c : line) {
            if (c == ' ' || c == '\t' || c == '\r') continue;
            std::istringstream stream(text);
            if (c >= '0' && c <= '9') return parse_edge_list_corpus(stream);
            return parse_graph6(stream);
        }
    }
    throw std::runtime_error("'" + path + "' holds no graph data");
}

}  // namespace dimforce
