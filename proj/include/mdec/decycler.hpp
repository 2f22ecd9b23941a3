#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mdec/blocks.hpp"
#include "mdec/graph.hpp"
#include "mdec/matching.hpp"

namespace mdec {

enum class Decision { decyclable, not_decyclable, unknown };
enum class Method { chordal, split, dh, cograph, fairly_cubic, oracle };

std::string_view to_string(Decision d);
std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view text);

/// Why a graph is not matching-decyclable (or why no answer was reached).
struct Refutation {
    enum class Kind {
        bad_subgraph,         // vertices: a bad vertex set
        forbidden_block,      // blocks[0]: a block whose kind is not allowed
        chain_witness,        // blocks: two diamonds and the triangles between; vertices: their union
        k24_block,            // blocks[0]: a K2,4 block
        stuck_leaf_block,     // blocks[0]: a leaf block with no usable decycling set; vertices[0]: its cut vertex or -1
        no_hamiltonian_path,  // vertices: the two degree-2 vertices
        exhausted,            // exhaustive search found nothing
        budget_exhausted,     // search stopped at its node budget; decision unknown
    };

    Kind kind = Kind::exhausted;
    std::vector<Vertex> vertices;
    std::vector<std::size_t> blocks;
    BlockKind block_kind = BlockKind::other;
};

std::string_view to_string(Refutation::Kind k);

struct Verdict {
    Decision decision = Decision::unknown;
    Method method = Method::oracle;
    std::optional<Matching> witness;
    std::optional<Refutation> refutation;
    std::uint64_t search_nodes = 0;

    bool decyclable() const { return decision == Decision::decyclable; }
};

/// m - n + w: size of every minimum decycling edge set.
std::size_t min_decycling_edge_count(const Graph& g);

/// Decycling matchings of a block pattern (vertex numbering of
/// block_pattern(kind)) that leave a spanning tree; empty for `other`.
const std::vector<std::vector<Edge>>& block_decycling_sets(BlockKind kind);

// --- exact search ------------------------------------------------------------

inline constexpr Vertex kDefaultOracleLimit = 24;

/// Exhaustive decision for arbitrary graphs. The witness is the
/// lexicographically least decycling matching of size m - n + w, so g minus
/// the witness is a spanning forest. Throws SizeLimitError above max_n.
Verdict oracle_decide(const Graph& g, Vertex max_n = kDefaultOracleLimit);

// --- chordal / split ----------------------------------------------------------

/// Linear-time decision for chordal graphs: density, block kinds in
/// {bridge, triangle, diamond}, at most one diamond per bridge-free component.
/// The witness takes two disjoint edges of each diamond and then one edge per
/// triangle, disjoint from everything chosen before.
Verdict decide_chordal(const Graph& g);

/// 2d + t for a decyclable chordal graph (d diamond blocks, t triangle blocks).
std::size_t witness_size_chordal(const Graph& g);

enum class SplitShape { star, double_star, triangle_with_pendants, diamond_with_pendants, none };
std::string_view to_string(SplitShape s);

/// Structural match against the four decyclable connected split shapes.
SplitShape match_split_shape(const Graph& g);

/// Connected split graphs; the decision comes from match_split_shape and the
/// witness or refutation from decide_chordal.
Verdict decide_split(const Graph& g);

// --- distance-hereditary / cograph -------------------------------------------

/// Picks the next leaf block to process from the ids currently available
/// (sorted ascending); returns an index into that list.
using LeafSelector = std::function<std::size_t(std::span<const std::size_t> ready)>;

/// Linear-time decision for distance-hereditary graphs by greedy leaf-block
/// elimination: each leaf block takes a decycling matching of its still
/// usable edges, avoiding its cut vertex when it can. Lowest block id first
/// unless a selector is given.
Verdict decide_dh(const Graph& g, const LeafSelector& select = {});

struct MdStarShape {
    Vertex cut_vertex = -1;
    std::optional<std::size_t> diamond_block;
    std::vector<std::size_t> pendant_blocks;  // bridges and triangles
};

std::optional<MdStarShape> match_md_star(const Graph& g);

/// Connected cographs: K2, triangle, square, diamond, K2,3 or an md-star.
Verdict decide_cograph(const Graph& g);

// --- fairly cubic -------------------------------------------------------------

inline constexpr std::uint64_t kDefaultHamiltonBudget = 10'000'000;

/// Connected fairly cubic graphs: decyclable iff a Hamiltonian path joins the
/// two degree-2 vertices; the witness is the complement of that path.
/// Returns Decision::unknown when the search exceeds `budget` nodes.
Verdict decide_fairly_cubic(const Graph& g, std::uint64_t budget = kDefaultHamiltonBudget);

/// For connected subcubic g: true iff `tree` is a spanning tree of g all of
/// whose leaves have degree at most 2 in g. When true, E(g) \ tree is a
/// decycling matching (checked). Throws if `tree` is not a spanning tree.
bool check_spanning_tree_characterization(const Graph& g, std::span<const Edge> tree);

// --- dispatch -----------------------------------------------------------------

struct DecideOptions {
    std::uint64_t budget = kDefaultHamiltonBudget;
    Vertex max_oracle_n = kDefaultOracleLimit;
};

/// Runs one decider; throws PreconditionError if g is outside its class.
Verdict decide_with(const Graph& g, Method method, const DecideOptions& options = {});

/// Chordal, then distance-hereditary, then connected fairly cubic; anything
/// else goes to the oracle (subject to its size cap).
Verdict decide_auto(const Graph& g, const DecideOptions& options = {});

}  // namespace mdec
