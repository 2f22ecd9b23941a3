#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdec/decycler.hpp"
#include "mdec/graph.hpp"
#include "mdec/recognizers.hpp"
#include "mdec/reduction.hpp"
#include "mdec/sparse.hpp"

namespace mdec {

using Json = nlohmann::ordered_json;

struct ClassReport {
    ChordalResult chordal;
    SplitResult split;
    DhResult distance_hereditary;
    CographResult cograph;
};

ClassReport classify(const Graph& g);

struct SparseReport {
    bool density_ok = false;
    std::optional<std::vector<Vertex>> bad_subgraph;
    std::string method;  // "density-only", "exhaustive" or "class-characterization"
    std::optional<bool> sparse;  // unknown when only the density bound was checked
    std::string note;
};

/// Density always; exhaustive bad-subgraph search up to max_n; beyond
/// that, the chordal or 2-connected distance-hereditary characterization
/// when one applies, otherwise density only.
SparseReport sparse_report(const Graph& g, Vertex max_n = kDefaultSparseLimit);

Json to_json(const ClassReport& r);
Json to_json(const SparseReport& r);
Json to_json(const Verdict& v);
Json to_json(const Edge& e);

/// Vertex roles of a reduction output: gadget, source vertex of h, role.
Json roles_json(const ReductionResult& r);

}  // namespace mdec
