#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mdec/graph.hpp"

namespace mdec {

/// floor(3k/2) - 1: the most edges a k-vertex graph can have without being bad.
constexpr std::int64_t sparse_edge_bound(std::int64_t k) { return (3 * k) / 2 - 1; }

/// m <= floor(3n/2) - 1.
bool density_ok(const Graph& g);

inline constexpr Vertex kDefaultSparseLimit = 16;

/// Exhaustive search for a bad subgraph: a vertex set whose induced edge
/// count exceeds floor(3k/2) - 1. Returns the smallest such set, ties broken
/// by lexicographic order of the sorted vertex list; nullopt iff g is sparse.
/// Throws SizeLimitError when n(g) > max_n.
std::optional<std::vector<Vertex>> find_bad_subgraph(const Graph& g, Vertex max_n = kDefaultSparseLimit);

/// Sparseness of a chordal graph: every block is a bridge, triangle or
/// diamond, and no bridge-free component holds two diamond blocks (no chain).
/// Throws PreconditionError if g is not chordal.
bool is_sparse_chordal(const Graph& g);

/// Sparseness of a 2-connected distance-hereditary graph with n >= 3: g is
/// one of triangle, square, diamond, K2,3, K2,4, K3,3 minus an edge.
/// Throws PreconditionError outside that domain.
bool is_sparse_2conn_dh(const Graph& g);

/// True if g (n >= 3) has a single block spanning every vertex.
bool is_biconnected(const Graph& g);

}  // namespace mdec
