#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mdec/graph.hpp"
#include "mdec/matching.hpp"

// Slow, independent reference implementations. None of these call into the
// library beyond Graph accessors.
namespace oracle {

using mdec::Edge;
using mdec::Graph;
using mdec::Vertex;

bool acyclic(Vertex n, const std::vector<Edge>& edges);
std::size_t components(Vertex n, const std::vector<Edge>& edges);

/// Every matching of g (including the empty one).
std::vector<std::vector<Edge>> all_matchings(const Graph& g);

/// Decyclable by trying every matching.
bool decyclable(const Graph& g);

/// Every decycling matching, in the order produced by all_matchings.
std::vector<std::vector<Edge>> decycling_matchings(const Graph& g);

/// Edge count of the subgraph induced by a vertex bitmask.
int induced_edges(const Graph& g, std::uint32_t mask);

/// Sparse: no vertex subset with more than floor(3k/2) - 1 induced edges.
bool sparse(const Graph& g);

/// g has an induced subgraph isomorphic to `pattern` (brute force over
/// subsets and permutations).
bool has_induced(const Graph& g, const Graph& pattern);

/// g has a (not necessarily induced) subgraph isomorphic to `pattern`.
bool has_subgraph(const Graph& g, const Graph& pattern);

/// Isomorphism by trying all permutations.
bool isomorphic(const Graph& a, const Graph& b);

/// Induced cycle of length at least `min_len`.
bool has_induced_cycle(const Graph& g, int min_len);

bool chordal(const Graph& g);
bool split(const Graph& g);
bool distance_hereditary(const Graph& g);
bool cograph(const Graph& g);

/// Blocks as sorted edge lists, sorted: edges are merged when they lie on a
/// common simple cycle.
std::vector<std::vector<Edge>> blocks(const Graph& g);

/// 2-connected with at least 3 vertices (no vertex whose removal disconnects,
/// checked by deleting each vertex in turn).
bool biconnected(const Graph& g);

/// Hamiltonian cycle by permutations with vertex 0 fixed.
bool hamiltonian_cycle(const Graph& g);
/// Hamiltonian cycle using the edge {a, b}.
bool hamiltonian_cycle_through(const Graph& g, Vertex a, Vertex b);
/// Hamiltonian path from s to t.
bool hamiltonian_path(const Graph& g, Vertex s, Vertex t);

/// Spanning tree whose leaves all have degree at most 2 in g, by trying
/// every (n-1)-edge subset.
bool leafy_spanning_tree(const Graph& g, std::vector<Edge>* tree = nullptr);

}  // namespace oracle
