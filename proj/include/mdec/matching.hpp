#pragma once

#include <span>
#include <vector>

#include "mdec/graph.hpp"

namespace mdec {

/// A set of edges, kept sorted and free of duplicates. Whether it is a
/// matching of some graph is decided by validate_matching.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    bool contains(const Edge& e) const;

    /// Vertex-disjointness only, independent of any host graph.
    bool pairwise_disjoint() const;

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    std::vector<Edge> edges_;
};

/// True iff every edge of m is in g, the edges are pairwise disjoint, and
/// g - m is acyclic: m is a decycling matching of g.
bool validate_matching(const Graph& g, const Matching& m);

/// Restriction of m to the edges of h (used for subgraph closure checks).
Matching restrict_to(const Matching& m, const Graph& h);

}  // namespace mdec
