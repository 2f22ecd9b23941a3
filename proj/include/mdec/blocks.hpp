#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "mdec/graph.hpp"

namespace mdec {

enum class BlockKind { bridge, triangle, square, diamond, k23, k24, k33minus, other };

std::string_view to_string(BlockKind kind);

/// The fixed pattern graph for a kind (not defined for `other`).
const Graph& block_pattern(BlockKind kind);

struct Block {
    std::vector<EdgeId> edges;     // sorted
    std::vector<Vertex> vertices;  // sorted
    BlockKind kind = BlockKind::other;
    std::vector<Vertex> pattern_image;  // see BlockMatch; empty for `other`
};

/// Blocks are ordered by their smallest edge id, so block ids are stable for
/// a given graph.
struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<Vertex> cut_vertices;       // sorted
    std::vector<Edge> bridges;              // sorted
    std::vector<std::size_t> leaf_blocks;   // blocks with exactly one cut vertex

    /// For every vertex, the ids of the blocks containing it, ascending.
    struct Incidence {
        std::vector<std::size_t> offsets{0};
        std::vector<std::size_t> ids;
        std::span<const std::size_t> operator[](Vertex v) const {
            return {ids.data() + offsets[v], offsets[v + 1] - offsets[v]};
        }
        std::size_t size() const { return offsets.size() - 1; }
    };
    Incidence blocks_of_vertex;
};

/// Iterative Hopcroft-Tarjan biconnected components, O(n + m).
BlockDecomposition block_decomposition(const Graph& g);

/// Kind of the subgraph formed by `block` (edge ids of g), by isomorphism to
/// the fixed patterns. More than six vertices is always `other`.
BlockKind classify_block(const Graph& g, std::span<const EdgeId> block);

/// Classification together with the pattern embedding:
/// image[pattern vertex] = vertex of g. Empty image for `other`.
struct BlockMatch {
    BlockKind kind = BlockKind::other;
    std::vector<Vertex> image;
};

BlockMatch match_block(const Graph& g, std::span<const EdgeId> block);

}  // namespace mdec
