#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mdec/graph.hpp"

namespace mdec {

/// Fixed small graphs used for block classification and certificates.
/// Vertex numbering follows the usual letter naming: a=0, b=1, c=2, ...
namespace patterns {

Graph complete(Vertex n);
Graph complete_bipartite(Vertex a, Vertex b);  // parts {0..a-1}, {a..a+b-1}
Graph cycle(Vertex k);
Graph path(Vertex k);
Graph star(Vertex leaves);  // center 0

inline Graph triangle() { return complete(3); }
inline Graph square() { return cycle(4); }
Graph diamond();    // ab, ac, ad, bc, cd; the chord is ac
Graph k23();
Graph k24();
Graph k33();
Graph k33minus();   // K3,3 without the edge between vertices 2 and 5
Graph gem();        // ab, bc, cd, ae, be, ce, de
Graph house();      // ab, bc, cd, ad, ae, be
Graph domino();     // ab, bc, cd, ad, be, eh, ch  (h = 5)
Graph two_k2();

}  // namespace patterns

/// Structure-preserving bijection from `pattern` onto `g`, as
/// image[pattern vertex] = g vertex. Backtracking over degree-compatible
/// candidates; intended for graphs with a handful of vertices.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& pattern, const Graph& g);

inline bool is_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

/// True if g has a (not necessarily induced) subgraph isomorphic to pattern.
/// Exponential; for test-scale graphs.
bool contains_subgraph(const Graph& g, const Graph& pattern);

}  // namespace mdec
