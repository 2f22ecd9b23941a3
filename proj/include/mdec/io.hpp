#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mdec/graph.hpp"

namespace mdec {

/// Malformed edge-list input; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Edge-list text format:
///   n m
///   u v        (m lines, 0-based)
/// Lines whose first non-blank character is '#' are comments; blank lines
/// are skipped. Graph construction errors (self-loop, duplicate, range) are
/// rethrown as ParseError at the offending line.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

/// Writes "n m" followed by the edges in lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

}  // namespace mdec
