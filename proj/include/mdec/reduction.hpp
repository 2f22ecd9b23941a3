#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdec/graph.hpp"

namespace mdec {

/// A diamond standing between y and z. Contracted: members = {D}, a single
/// degree-2 vertex. Expanded: members = {alpha, gamma, delta, beta} with
/// alpha adjacent to y, beta adjacent to z and gamma-delta the chord.
struct DiamondLink {
    Vertex y = -1;
    Vertex z = -1;
    std::vector<Vertex> members;
};

struct GadgetLayout {
    Graph graph;
    std::vector<Vertex> terminals;         // ordered
    std::vector<Vertex> type_x_terminals;  // subset of terminals, in slot order
    std::vector<std::string> role;         // per vertex
    std::vector<DiamondLink> diamonds;
    bool contracted = true;
};

/// Main gadget. Contracted numbering: 0 x_ij, 1 x_ik, 2 x_il, 3 p, 4 q,
/// 5 a, 6 b, 7 c, 8 D (p, x_il), 9 D (q, x_ik), 10 D (x_ij, u), 11 r, 12 u,
/// 13 w; terminals {0, 1, 2, 3, 4}. Expanded form keeps these indices (each
/// D becomes its diamond's alpha) and appends gamma, delta, beta per diamond.
GadgetLayout build_gadget_main(bool contracted);

/// First gadget. Contracted numbering: 0 t, 1 q, 2 x_12, 3 x_1k, 4 x_1l,
/// 5 s, 6 p, 7 u, 8 r, 9 D (s, x_12), 10 D (r, x_1k); terminals
/// {0, 1, 2, 3, 4}.
GadgetLayout build_gadget_g1(bool contracted);

/// Replaces every diamond vertex of a contracted walk by the members of its
/// diamond, in the direction of travel; `swap_chord` picks the delta-first
/// order. Expanded layouts only.
std::vector<Vertex> expand_walk(const GadgetLayout& expanded, const std::vector<Vertex>& contracted_walk,
                                bool swap_chord = false);

// --- terminal path enumeration -------------------------------------------------

inline constexpr Vertex kGadgetSearchLimit = 20;

struct HamPathSet {
    std::vector<std::vector<Vertex>> paths;
    bool both_directions = false;
};

/// Hamiltonian paths of the gadget between two distinct terminals, in
/// lexicographic order. Canonical mode reports each path once, from its
/// lower-indexed end; `both_directions` lists every path from each of its
/// ends, grouped by terminal order like the reference listing.
HamPathSet enumerate_terminal_ham_paths(const GadgetLayout& g, bool both_directions = false);

struct PartitionRecord {
    std::vector<Vertex> first;   // contains vertex 0
    std::vector<Vertex> second;
    std::optional<std::vector<Vertex>> first_path;   // terminal-to-terminal covering path, if any
    std::optional<std::vector<Vertex>> second_path;
};

/// Every bipartition (X, Y) with vertex 0 in X and at least two terminals on
/// each side, with a covering terminal path for each side when one exists.
std::vector<PartitionRecord> enumerate_terminal_partitions(const GadgetLayout& g);

struct GadgetPropertyReport {
    std::array<bool, 6> passed{};
    std::array<std::string, 6> detail;
    std::size_t partitions_checked = 0;
    bool all() const;
};

/// Properties 1-5 from the terminal path enumeration, property 6 from the
/// partition search. Terminal order must be x_ij, x_ik, x_il, p, q.
GadgetPropertyReport verify_gadget_properties(const GadgetLayout& g);

/// Pairs of disjoint paths covering the first gadget: the first from s to a
/// type-x terminal, the second from a type-x terminal to t.
std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> g1_two_visit_covers(const GadgetLayout& g1);

// --- the reduction -----------------------------------------------------------------

struct ReductionResult {
    Graph g;
    Graph h;
    Vertex s = -1;
    Vertex t = -1;
    bool contracted = false;
    Edge e;                                    // specified edge of h
    std::vector<Vertex> h_vertex;              // gadget index -> vertex of h (gadget 0 is e.u)
    std::vector<std::size_t> gadget_of;        // vertex of g -> gadget index
    std::vector<std::vector<Vertex>> local_to_global;  // per gadget
    std::vector<std::string> role;             // vertex of g -> role
    std::vector<std::map<std::size_t, Vertex>> port;   // per gadget: neighbor gadget -> terminal in g
    std::map<Edge, Edge> port_edges;           // edge of h -> edge of g
    std::vector<Edge> chain_edges;             // q1 p2, ..., q_n t
    GadgetLayout main_layout;
    GadgetLayout g1_layout;
};

/// Replaces e.u by the first gadget, every other vertex of h by a main
/// gadget (in input order), and links them through port and chain edges.
/// Port slots go to neighbors in ascending gadget order; x_12 is fixed.
ReductionResult build_reduction(const Graph& h, Edge e, bool contracted = false);

/// The Hamiltonian cycle p1 s D x12 r1 D x1k u1 x1l q1, then Z_i for every
/// main gadget in order, then t.
std::vector<Vertex> witness_hamiltonian_cycle(const ReductionResult& r);

/// s-t Hamiltonian path of r.g from a Hamiltonian cycle of h through e,
/// given as a vertex sequence of h (any rotation or direction).
std::vector<Vertex> lift_solution(const ReductionResult& r, const std::vector<Vertex>& hc);

/// Hamiltonian cycle of h through e read from the gadget visit order of an
/// s-t Hamiltonian path; starts at e.u, continues with e.v.
std::vector<Vertex> project_solution(const ReductionResult& r, const std::vector<Vertex>& path);

// --- forced edge -------------------------------------------------------------------

/// Nine-vertex gadget with ports 0, 1, 2 and a chord every port-to-port
/// Hamiltonian path uses.
struct ForcedEdgeGadget {
    Graph graph;
    std::array<Vertex, 3> ports{0, 1, 2};
    Edge forced;
};

const ForcedEdgeGadget& forced_edge_gadget();

/// Every port pair has a covering path, and all of them use the forced edge.
bool verify_forced_edge_gadget();

/// Replaces v of cubic g by the gadget (port i attached to the i-th smallest
/// neighbor; gadget vertex 0 reuses index v, the others are appended).
/// g has a Hamiltonian cycle iff the result has one through the returned edge.
std::pair<Graph, Edge> expand_vertex_forced_edge(const Graph& g, Vertex v);

}  // namespace mdec
