#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdec/graph.hpp"

namespace mdec {

/// An induced subgraph isomorphic to a named pattern. For the fixed
/// patterns (house, gem, domino, P4, square) vertices[i] is the image of
/// pattern vertex i in the numbering of mdec::patterns; for "hole" it lists
/// the cycle in order.
struct ForbiddenSubgraph {
    std::string name;
    std::vector<Vertex> vertices;
};

/// True if `sub` names a pattern that g really contains as an induced
/// subgraph at the given vertices.
bool verify_forbidden(const Graph& g, const ForbiddenSubgraph& sub);

// --- chordal -----------------------------------------------------------------

struct ChordalResult {
    bool chordal = false;
    std::vector<Vertex> elimination_order;  // perfect elimination order when chordal
    std::vector<Vertex> chordless_cycle;    // length >= 4, in cycle order, otherwise
};

/// Lexicographic BFS visit order (partition refinement, O(n + m)); ties
/// resolved toward lower vertex index.
std::vector<Vertex> lex_bfs_order(const Graph& g);

bool is_perfect_elimination_order(const Graph& g, std::span<const Vertex> order);

/// True iff `cycle` is a chordless cycle of length >= 4 in g.
bool is_chordless_cycle(const Graph& g, std::span<const Vertex> cycle);

ChordalResult is_chordal(const Graph& g);

// --- split -------------------------------------------------------------------

struct SplitResult {
    bool split = false;
    std::vector<Vertex> clique;       // partition witness when split
    std::vector<Vertex> independent;
};

/// Degree-sequence test of Hammer and Simeone.
SplitResult is_split(const Graph& g);

// --- pendant / twin elimination ---------------------------------------------

enum class PruneKind { pendant, true_twin, false_twin, isolated };

std::string_view to_string(PruneKind kind);

struct PruneStep {
    Vertex vertex = -1;
    PruneKind kind = PruneKind::pendant;
    Vertex partner = -1;  // the neighbor (pendant) or the twin; -1 when isolated
};

struct PruneResult {
    bool reduced = false;               // at most one vertex left
    std::vector<PruneStep> sequence;
    std::vector<Vertex> remainder;      // surviving vertices, sorted
};

/// Repeatedly deletes the lowest-index vertex that is isolated, a twin
/// (true or false), or, when `allow_pendant`, a pendant vertex. Twin tests
/// use additive neighborhood hashes verified by direct comparison.
PruneResult prune_pendants_and_twins(const Graph& g, bool allow_pendant);

/// Replays a sequence step by step on g and checks that each step is legal
/// and that at most one vertex survives.
bool replay_elimination(const Graph& g, std::span<const PruneStep> sequence, bool allow_pendant);

// --- distance-hereditary ------------------------------------------------------

struct DhResult {
    bool distance_hereditary = false;
    std::vector<PruneStep> elimination;
    std::optional<ForbiddenSubgraph> obstruction;  // house, hole, domino or gem
};

DhResult is_distance_hereditary(const Graph& g);

// --- cograph -----------------------------------------------------------------

struct CographResult {
    bool cograph = false;
    std::vector<PruneStep> elimination;
    std::vector<Vertex> induced_p4;  // path order, when not a cograph
};

CographResult is_cograph(const Graph& g);

}  // namespace mdec
