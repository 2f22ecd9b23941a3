#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "mdec/blocks.hpp"
#include "mdec/graph.hpp"
#include "mdec/matching.hpp"

namespace mdec::gen {

using Rng = std::mt19937_64;

/// Erdos-Renyi G(n, p).
Graph gnp(Vertex n, double p, Rng& rng);

/// Uniform random labeled tree (Pruefer sequence).
Graph random_tree(Vertex n, Rng& rng);

/// Random simple cubic graph on n (even, >= 4) vertices by the pairing
/// model with restarts; connected when `connected`.
Graph random_cubic(Vertex n, Rng& rng, bool connected = true);

/// A connected cubic graph with one edge removed: fairly cubic.
Graph random_fairly_cubic(Vertex n, Rng& rng);

/// Random connected graph of maximum degree 3.
Graph random_subcubic(Vertex n, Rng& rng);

/// A graph glued from blocks at cut vertices together with a decycling
/// matching built alongside it. Every new block is attached at an existing
/// vertex in a position where its matching edges can avoid the vertices
/// already covered, so the result is matching-decyclable by construction.
struct BlockTreeInstance {
    Graph graph;
    Matching witness;
    std::size_t diamonds = 0;
    std::size_t triangles = 0;
};

/// Blocks drawn from `kinds` (bridge, triangle, square, diamond, K23,
/// K33minus), uniformly, until at least n vertices exist.
BlockTreeInstance random_block_tree(Vertex n, std::span<const BlockKind> kinds, Rng& rng);

/// Chordal instances: bridges, triangles and diamonds.
BlockTreeInstance random_decyclable_chordal(Vertex n, Rng& rng);

/// Distance-hereditary instances over all six decyclable block kinds.
BlockTreeInstance random_decyclable_dh(Vertex n, Rng& rng);

/// Two diamonds joined through k triangles in a row.
Graph chain(std::size_t k);

}  // namespace mdec::gen
