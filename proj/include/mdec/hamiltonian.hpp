#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mdec/graph.hpp"

namespace mdec {

struct HamiltonSearch {
    enum class Status { found, none, budget_exhausted };
    Status status = Status::none;
    std::vector<Vertex> path;  // s ... t, or the cycle starting at its least vertex
    std::uint64_t nodes = 0;
};

/// Depth-first search for a Hamiltonian path from s to t, neighbors tried in
/// ascending order, with degree, forced-move and connectivity pruning.
/// Stops after `budget` search nodes.
HamiltonSearch find_hamiltonian_path(const Graph& g, Vertex s, Vertex t, std::uint64_t budget);

/// Hamiltonian cycle search (n >= 3), same pruning and budget semantics.
HamiltonSearch find_hamiltonian_cycle(const Graph& g, std::uint64_t budget);

bool is_hamiltonian_path(const Graph& g, std::span<const Vertex> path);
/// `cycle` lists every vertex once; the closing edge back to cycle[0] is implied.
bool is_hamiltonian_cycle(const Graph& g, std::span<const Vertex> cycle);

inline constexpr Vertex kMaxEnumerationVertices = 32;

/// Every Hamiltonian path of g that starts at `from` (and ends at `to` when
/// given), as vertex sequences in lexicographic order. Exhaustive; for
/// n <= kMaxEnumerationVertices.
std::vector<std::vector<Vertex>> all_hamiltonian_paths(const Graph& g, Vertex from,
                                                       std::optional<Vertex> to = std::nullopt);

/// Every Hamiltonian cycle of g through edge {a, b}, each written a ... b
/// (cycle closed by the edge b a). n <= kMaxEnumerationVertices, n >= 3.
std::vector<std::vector<Vertex>> all_hamiltonian_cycles_through(const Graph& g, Vertex a, Vertex b);

/// Edges traversed by a vertex sequence (closing edge added when `closed`).
std::vector<Edge> path_edges(std::span<const Vertex> walk, bool closed = false);

}  // namespace mdec
