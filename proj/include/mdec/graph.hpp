#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdec {

using Vertex = std::int32_t;
using EdgeId = std::size_t;

/// Undirected edge, stored with u < v once normalized.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    constexpr bool touches(Vertex x) const { return u == x || v == x; }
    constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
public:
    enum class Kind { self_loop, duplicate_edge, out_of_range, missing_edge };

    GraphError(Kind kind, Vertex a, Vertex b);

    Kind kind() const { return kind_; }
    Vertex first() const { return a_; }
    Vertex second() const { return b_; }

private:
    Kind kind_;
    Vertex a_;
    Vertex b_;
};

/// Raised when an operation is called outside its documented domain
/// (wrong graph class, missing edge, malformed witness).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive routine is asked to run above its size cap.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
///
/// Adjacency is kept in CSR form with each neighbor list sorted, and every
/// adjacency slot carries the id of the edge it represents. Edge ids index
/// `edges()`, which is sorted lexicographically.
class Graph {
public:
    Graph() = default;

    /// Validates and builds. Self-loops, duplicates (in either orientation)
    /// and out-of-range indices throw GraphError naming the offending pair.
    static Graph build(Vertex n, std::span<const Edge> edges);
    static Graph build(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    Vertex vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    /// Edge ids parallel to neighbors(v).
    std::span<const EdgeId> incident_edges(Vertex v) const {
        return {adj_edge_.data() + offsets_[v], adj_edge_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_[id]; }

    bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }
    std::optional<EdgeId> edge_id(Vertex a, Vertex b) const;

    bool contains_vertex(Vertex v) const { return v >= 0 && v < n_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Vertex n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adj_;
    std::vector<EdgeId> adj_edge_;
    std::vector<Edge> edges_;
};

/// Same vertex set, edge set E(g) \ removed. Every removed edge must exist.
Graph remove_edges(const Graph& g, std::span<const Edge> removed);

/// Subgraph induced by `keep` (any order, no repeats), relabelled 0..k-1 in
/// the order given. `original` receives the old label of each new vertex.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep,
                       std::vector<Vertex>* original = nullptr);

/// Component label per vertex, labels numbered 0.. in order of first vertex.
std::vector<std::int32_t> component_labels(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);

/// True iff g has no cycle, i.e. m == n - w.
bool is_acyclic(const Graph& g);

struct DegreeProfile {
    bool is_cubic = false;
    bool is_subcubic = false;
    bool is_fairly_cubic = false;
    std::vector<Vertex> degree2_vertices;
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
};

DegreeProfile degree_profile(const Graph& g);

/// Renders "(u,v)" for diagnostics.
std::string to_string(const Edge& e);

}  // namespace mdec
