#pragma once

#include <cstdint>
#include <vector>

#include "mdec/generators.hpp"
#include "mdec/graph.hpp"

namespace testsupport {

using mdec::Graph;
using mdec::Vertex;

/// Canonical code of a graph on at most 11 vertices: the least upper
/// triangle bit string over all relabelings that respect a colour
/// refinement of the vertices. Equal codes iff isomorphic.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class on n vertices (n <= 8),
/// built by vertex extension and deduplicated by canonical code. Cached.
const std::vector<Graph>& all_graphs(Vertex n);
const std::vector<Graph>& connected_graphs(Vertex n);

/// Connected graphs on 1..max_n vertices, smallest first.
std::vector<Graph> connected_up_to(Vertex max_n);

/// The mixed corpus used by the property suites: every graph up to
/// `exhaustive_n` vertices, plus seeded random graphs (G(n,p), subcubic,
/// fairly cubic, block trees) up to `random_n` vertices.
std::vector<Graph> property_corpus(Vertex exhaustive_n, Vertex random_n, std::size_t per_size,
                                   std::uint64_t seed);

/// Graph from a list of edges on vertices 0..n-1.
Graph make(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

/// Random relabeling of g.
Graph permuted(const Graph& g, mdec::gen::Rng& rng, std::vector<Vertex>* perm = nullptr);

}  // namespace testsupport
