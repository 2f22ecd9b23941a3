#include "mdec/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace mdec {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column) {}

namespace {

struct Token {
    long long value;
    std::size_t column;
};

std::vector<Token> tokenize(const std::string& line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        long long v = 0;
        const char* first = line.data() + start;
        const char* last = line.data() + i;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last)
            throw ParseError(line_no, start + 1, "expected an integer, got '" + line.substr(start, i - start) + "'");
        out.push_back({v, start + 1});
    }
    return out;
}

bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_line;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        auto toks = tokenize(line, line_no);
        if (toks.size() != 2)
            throw ParseError(line_no, toks.size() > 2 ? toks[2].column : line.size() + 1,
                             "expected exactly two integers");
        if (!have_header) {
            n = toks[0].value;
            m = toks[1].value;
            if (n < 0 || n > (1LL << 30)) throw ParseError(line_no, toks[0].column, "vertex count out of range");
            if (m < 0) throw ParseError(line_no, toks[1].column, "negative edge count");
            have_header = true;
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(line_no, toks[0].column, "more edge lines than declared (" + std::to_string(m) + ")");
        for (const auto& t : toks)
            if (t.value < 0 || t.value >= n)
                throw ParseError(line_no, t.column, "vertex " + std::to_string(t.value) + " out of range [0," +
                                                        std::to_string(n) + ")");
        Edge e;
        e.u = static_cast<Vertex>(toks[0].value);
        e.v = static_cast<Vertex>(toks[1].value);
        edges.push_back(e);
        edge_line.push_back(line_no);
    }
    if (!have_header) throw ParseError(line_no + 1, 1, "missing 'n m' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(line_no + 1, 1, "expected " + std::to_string(m) + " edges, found " +
                                             std::to_string(edges.size()));
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].u == edges[i].v)
            throw ParseError(edge_line[i], 1, "self-loop " + to_string(edges[i]));
    try {
        return Graph::build(static_cast<Vertex>(n), edges);
    } catch (const GraphError& err) {
        // Locate the second occurrence of the duplicated pair.
        Edge bad(err.first(), err.second());
        bool seen = false;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (Edge(edges[i].u, edges[i].v) != bad) continue;
            if (seen) throw ParseError(edge_line[i], 1, err.what());
            seen = true;
        }
        throw ParseError(line_no, 1, err.what());
    }
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace mdec
