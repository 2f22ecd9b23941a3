#include "mdec/reduction.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "mdec/hamiltonian.hpp"

namespace mdec {

namespace {

struct ContractedGadget {
    Vertex n;
    std::vector<Edge> edges;
    std::vector<std::string> role;
    std::vector<Vertex> terminals;
    std::vector<Vertex> type_x;
    std::vector<std::array<Vertex, 3>> diamonds;  // y, D, z
};

const ContractedGadget& main_data() {
    static const ContractedGadget data{
        14,
        {{12, 6}, {5, 6}, {5, 7}, {6, 7}, {7, 13}, {13, 3}, {13, 0}, {2, 11}, {11, 4}, {11, 5}, {12, 1},
         {0, 10}, {10, 12}, {3, 8}, {8, 2}, {4, 9}, {9, 1}},
        {"x_ij", "x_ik", "x_il", "p", "q", "a", "b", "c", "diamond", "diamond", "diamond", "r", "u", "w"},
        {0, 1, 2, 3, 4},
        {0, 1, 2},
        {{{3, 8, 2}}, {{4, 9, 1}}, {{0, 10, 12}}},
    };
    return data;
}

const ContractedGadget& g1_data() {
    static const ContractedGadget data{
        11,
        {{5, 6}, {6, 7}, {6, 0}, {7, 4}, {7, 3}, {4, 1}, {1, 8}, {8, 2}, {5, 9}, {9, 2}, {8, 10}, {10, 3}},
        {"t", "q", "x_12", "x_ik", "x_il", "s", "p", "u", "r", "diamond", "diamond"},
        {0, 1, 2, 3, 4},
        {2, 3, 4},
        {{{5, 9, 2}}, {{8, 10, 3}}},
    };
    return data;
}

GadgetLayout build_layout(const ContractedGadget& data, bool contracted) {
    GadgetLayout out;
    out.contracted = contracted;
    out.terminals = data.terminals;
    out.type_x_terminals = data.type_x;
    out.role = data.role;
    if (contracted) {
        out.graph = Graph::build(data.n, data.edges);
        for (auto [y, d, z] : data.diamonds) out.diamonds.push_back({y, z, {d}});
        return out;
    }
    std::vector<Edge> edges;
    for (const Edge& e : data.edges) {
        bool link = false;
        for (auto [y, d, z] : data.diamonds) link = link || e.u == d || e.v == d;
        if (!link) edges.push_back(e);
    }
    Vertex next = data.n;
    for (auto [y, d, z] : data.diamonds) {
        const Vertex alpha = d, gamma = next, delta = next + 1, beta = next + 2;
        next += 3;
        for (auto [a, b] : std::initializer_list<std::pair<Vertex, Vertex>>{{y, alpha}, {alpha, gamma}, {alpha, delta}, {gamma, delta}, {gamma, beta},
                            {delta, beta}, {beta, z}})
            edges.emplace_back(a, b);
        out.diamonds.push_back({y, z, {alpha, gamma, delta, beta}});
        out.role.insert(out.role.end(), 3, "diamond");
    }
    out.graph = Graph::build(next, edges);
    return out;
}

bool is_terminal(const GadgetLayout& g, Vertex v) {
    return std::find(g.terminals.begin(), g.terminals.end(), v) != g.terminals.end();
}

bool is_type_x(const GadgetLayout& g, Vertex v) {
    return std::find(g.type_x_terminals.begin(), g.type_x_terminals.end(), v) != g.type_x_terminals.end();
}

void require_small(const Graph& g) {
    if (g.vertex_count() > kGadgetSearchLimit)
        throw SizeLimitError("gadget search limited to " + std::to_string(kGadgetSearchLimit) + " vertices");
}

// Covering path of the vertex set `mask` between two distinct terminals;
// the lexicographically first one found from the lowest terminal.
class MaskPathSearch {
public:
    explicit MaskPathSearch(const GadgetLayout& g) : g_(g), adj_(static_cast<std::size_t>(g.graph.vertex_count()), 0) {
        for (const Edge& e : g.graph.edges()) {
            adj_[e.u] |= 1u << e.v;
            adj_[e.v] |= 1u << e.u;
        }
        for (Vertex t : g.terminals) term_ |= 1u << t;
    }

    std::optional<std::vector<Vertex>> find(std::uint32_t mask) {
        for (Vertex a : sorted_terminals()) {
            if (!(mask & (1u << a))) continue;
            path_.assign(1, a);
            if (dfs(mask, 1u << a)) return path_;
        }
        return std::nullopt;
    }

    std::uint32_t terminal_mask() const { return term_; }

private:
    std::vector<Vertex> sorted_terminals() const {
        std::vector<Vertex> t = g_.terminals;
        std::sort(t.begin(), t.end());
        return t;
    }

    bool dfs(std::uint32_t mask, std::uint32_t used) {
        Vertex head = path_.back();
        if (used == mask) return path_.size() >= 2 && (term_ & (1u << head));
        std::uint32_t next = adj_[head] & mask & ~used;
        while (next) {
            Vertex w = static_cast<Vertex>(std::countr_zero(next));
            next &= next - 1;
            path_.push_back(w);
            if (dfs(mask, used | (1u << w))) return true;
            path_.pop_back();
        }
        return false;
    }

    const GadgetLayout& g_;
    std::vector<std::uint32_t> adj_;
    std::uint32_t term_ = 0;
    std::vector<Vertex> path_;
};

bool same_ends(const std::vector<Vertex>& p, Vertex a, Vertex b) {
    return (p.front() == a && p.back() == b) || (p.front() == b && p.back() == a);
}

}  // namespace

GadgetLayout build_gadget_main(bool contracted) { return build_layout(main_data(), contracted); }

GadgetLayout build_gadget_g1(bool contracted) { return build_layout(g1_data(), contracted); }

std::vector<Vertex> expand_walk(const GadgetLayout& expanded, const std::vector<Vertex>& walk, bool swap_chord) {
    if (expanded.contracted) return walk;
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const Vertex v = walk[i];
        const DiamondLink* link = nullptr;
        for (const DiamondLink& d : expanded.diamonds)
            if (d.members.front() == v) link = &d;
        if (!link) {
            out.push_back(v);
            continue;
        }
        bool forward;
        if (i > 0) forward = walk[i - 1] == link->y;
        else if (i + 1 < walk.size()) forward = walk[i + 1] == link->z;
        else forward = true;
        std::vector<Vertex> m = link->members;
        if (swap_chord) std::swap(m[1], m[2]);
        if (!forward) std::reverse(m.begin(), m.end());
        out.insert(out.end(), m.begin(), m.end());
    }
    return out;
}

// --- enumeration ------------------------------------------------------------------

HamPathSet enumerate_terminal_ham_paths(const GadgetLayout& g, bool both_directions) {
    require_small(g.graph);
    HamPathSet out;
    out.both_directions = both_directions;
    for (Vertex a : g.terminals) {
        for (auto& p : all_hamiltonian_paths(g.graph, a)) {
            if (!is_terminal(g, p.back()) || p.back() == a) continue;
            if (!both_directions && p.back() < a) continue;
            out.paths.push_back(std::move(p));
        }
    }
    if (!both_directions) std::sort(out.paths.begin(), out.paths.end());
    return out;
}

std::vector<PartitionRecord> enumerate_terminal_partitions(const GadgetLayout& g) {
    require_small(g.graph);
    const Vertex n = g.graph.vertex_count();
    std::vector<PartitionRecord> out;
    if (n < 2) return out;
    MaskPathSearch search(g);
    const std::uint32_t full = (1u << n) - 1, term = search.terminal_mask();
    for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
        const std::uint32_t x = (rest << 1) | 1u, y = full & ~x;
        if (y == 0) continue;
        if (std::popcount(x & term) < 2 || std::popcount(y & term) < 2) continue;
        PartitionRecord rec;
        for (Vertex v = 0; v < n; ++v) ((x >> v) & 1u ? rec.first : rec.second).push_back(v);
        rec.first_path = search.find(x);
        rec.second_path = search.find(y);
        out.push_back(std::move(rec));
    }
    return out;
}

bool GadgetPropertyReport::all() const {
    return std::all_of(passed.begin(), passed.end(), [](bool b) { return b; });
}

GadgetPropertyReport verify_gadget_properties(const GadgetLayout& g) {
    require_small(g.graph);
    if (g.terminals.size() != 5 || g.type_x_terminals.size() != 3)
        throw PreconditionError("verify_gadget_properties: expected five terminals, three of type x");
    GadgetPropertyReport rep;
    const HamPathSet set = enumerate_terminal_ham_paths(g);
    auto count = [&](Vertex a, Vertex b) {
        return std::count_if(set.paths.begin(), set.paths.end(), [&](const auto& p) { return same_ends(p, a, b); });
    };
    const Vertex xj = g.terminals[0], xk = g.terminals[1], xl = g.terminals[2], p = g.terminals[3],
                 q = g.terminals[4];
    const std::array<std::pair<Vertex, Vertex>, 4> unique_pairs{{{xj, xk}, {xj, xl}, {xk, xl}, {p, q}}};
    for (std::size_t i = 0; i < 4; ++i) {
        auto c = count(unique_pairs[i].first, unique_pairs[i].second);
        rep.passed[i] = c == 1;
        rep.detail[i] = std::to_string(c) + " path(s) between " + std::to_string(unique_pairs[i].first) + " and " +
                        std::to_string(unique_pairs[i].second);
    }
    std::size_t mixed = 0;
    for (Vertex a : {p, q})
        for (Vertex b : {xj, xk, xl}) mixed += static_cast<std::size_t>(count(a, b));
    rep.passed[4] = mixed == 0;
    rep.detail[4] = std::to_string(mixed) + " path(s) joining {p, q} to a type-x terminal";

    std::size_t bad = 0;
    for (const PartitionRecord& r : enumerate_terminal_partitions(g)) {
        ++rep.partitions_checked;
        if (r.first_path && r.second_path) ++bad;
    }
    rep.passed[5] = bad == 0;
    rep.detail[5] = std::to_string(rep.partitions_checked) + " partitions, " + std::to_string(bad) +
                    " covered by two terminal paths";
    return rep;
}

std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> g1_two_visit_covers(const GadgetLayout& g1) {
    require_small(g1.graph);
    const Graph& g = g1.graph;
    const Vertex n = g.vertex_count();
    Vertex s = -1, t = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (g1.role[v] == "s") s = v;
        if (g1.role[v] == "t") t = v;
    }
    std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> out;
    std::vector<Vertex> first{s};
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    used[s] = 1;
    auto close = [&] {
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < n; ++v)
            if (!used[v]) rest.push_back(v);
        std::vector<Vertex> original;
        Graph sub = induced_subgraph(g, rest, &original);
        auto local = [&](Vertex v) {
            return static_cast<Vertex>(std::find(original.begin(), original.end(), v) - original.begin());
        };
        if (std::find(rest.begin(), rest.end(), t) == rest.end()) return;
        for (Vertex a : rest) {
            if (!is_type_x(g1, a)) continue;
            for (auto& p : all_hamiltonian_paths(sub, local(a), local(t))) {
                for (auto& v : p) v = original[v];
                out.emplace_back(first, p);
            }
        }
    };
    auto grow = [&](auto&& self) -> void {
        Vertex head = first.back();
        if (first.size() > 1 && is_type_x(g1, head)) close();
        for (Vertex w : g.neighbors(head)) {
            if (used[w]) continue;
            used[w] = 1;
            first.push_back(w);
            self(self);
            first.pop_back();
            used[w] = 0;
        }
    };
    grow(grow);
    std::sort(out.begin(), out.end());
    return out;
}

// --- reduction --------------------------------------------------------------------

namespace {

const std::vector<Vertex>& main_path_between(std::size_t slot_a, std::size_t slot_b) {
    static const auto table = [] {
        std::array<std::array<std::vector<Vertex>, 3>, 3> t;
        GadgetLayout g = build_gadget_main(true);
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) {
                if (a == b) continue;
                auto paths = all_hamiltonian_paths(g.graph, g.type_x_terminals[a], g.type_x_terminals[b]);
                if (paths.size() != 1) throw std::logic_error("main gadget: terminal path not unique");
                t[a][b] = paths.front();
            }
        return t;
    }();
    return table[slot_a][slot_b];
}

// Local contracted walks through the first gadget.
const std::vector<Vertex> kG1Opening{5, 9, 2};                        // s D x12
const std::vector<Vertex> kG1CloseFromL{4, 1, 8, 10, 3, 7, 6, 0};     // x1l q r D x1k u p t
const std::vector<Vertex> kG1CloseFromK{3, 10, 8, 1, 4, 7, 6, 0};     // x1k D r q x1l u p t
const std::vector<Vertex> kG1Witness{6, 5, 9, 2, 8, 10, 3, 7, 4, 1};  // p s D x12 r D x1k u x1l q
const std::vector<Vertex> kMainZ{3, 8, 2, 11, 5, 6, 7, 13, 0, 10, 12, 1, 9, 4};  // Z

void append_segment(const ReductionResult& r, std::size_t gadget, const std::vector<Vertex>& walk,
                    std::vector<Vertex>& out) {
    const GadgetLayout& layout = gadget == 0 ? r.g1_layout : r.main_layout;
    for (Vertex v : expand_walk(layout, walk)) out.push_back(r.local_to_global[gadget][v]);
}

std::size_t slot_of(const ReductionResult& r, std::size_t gadget, std::size_t neighbor) {
    const GadgetLayout& layout = gadget == 0 ? r.g1_layout : r.main_layout;
    const Vertex global = r.port[gadget].at(neighbor);
    for (std::size_t i = 0; i < layout.type_x_terminals.size(); ++i)
        if (r.local_to_global[gadget][layout.type_x_terminals[i]] == global) return i;
    throw std::logic_error("port without a slot");
}

}  // namespace

ReductionResult build_reduction(const Graph& h, Edge e, bool contracted) {
    const DegreeProfile prof = degree_profile(h);
    if (!prof.is_cubic || !is_connected(h)) throw PreconditionError("build_reduction: h must be connected and cubic");
    if (!h.has_edge(e.u, e.v)) throw GraphError(GraphError::Kind::missing_edge, e.u, e.v);
    e = Edge(e.u, e.v);

    ReductionResult r;
    r.h = h;
    r.e = e;
    r.contracted = contracted;
    r.main_layout = build_gadget_main(contracted);
    r.g1_layout = build_gadget_g1(contracted);

    const Vertex n = h.vertex_count();
    r.h_vertex = {e.u, e.v};
    for (Vertex v = 0; v < n; ++v)
        if (v != e.u && v != e.v) r.h_vertex.push_back(v);
    std::vector<std::size_t> index(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < r.h_vertex.size(); ++i) index[r.h_vertex[i]] = i;

    std::vector<Edge> edges;
    Vertex next = 0;
    r.port.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        const GadgetLayout& layout = i == 0 ? r.g1_layout : r.main_layout;
        std::vector<Vertex> map(static_cast<std::size_t>(layout.graph.vertex_count()));
        for (Vertex v = 0; v < layout.graph.vertex_count(); ++v) {
            map[v] = next++;
            r.gadget_of.push_back(i);
            r.role.push_back(layout.role[v]);
        }
        for (const Edge& le : layout.graph.edges()) edges.emplace_back(map[le.u], map[le.v]);

        std::vector<std::size_t> nbrs;
        for (Vertex w : h.neighbors(r.h_vertex[i])) nbrs.push_back(index[w]);
        std::sort(nbrs.begin(), nbrs.end());
        if (i == 0) {
            // x_12 is fixed; the other two neighbors fill x_1k, x_1l.
            nbrs.erase(std::find(nbrs.begin(), nbrs.end(), std::size_t{1}));
            nbrs.insert(nbrs.begin(), 1);
        }
        for (std::size_t s = 0; s < 3; ++s) r.port[i][nbrs[s]] = map[layout.type_x_terminals[s]];
        r.local_to_global.push_back(std::move(map));
    }
    for (const Edge& he : h.edges()) {
        const std::size_t a = index[he.u], b = index[he.v];
        Edge ge(r.port[a].at(b), r.port[b].at(a));
        edges.push_back(ge);
        r.port_edges[he] = ge;
    }
    // q_i p_{i+1}, and q_n t
    auto q_of = [&](std::size_t i) { return r.local_to_global[i][i == 0 ? 1 : 4]; };
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i)
        r.chain_edges.emplace_back(q_of(i), r.local_to_global[i + 1][3]);
    r.chain_edges.emplace_back(q_of(static_cast<std::size_t>(n) - 1), r.local_to_global[0][0]);
    edges.insert(edges.end(), r.chain_edges.begin(), r.chain_edges.end());

    r.g = Graph::build(next, edges);
    r.s = r.local_to_global[0][5];
    r.t = r.local_to_global[0][0];
    return r;
}

std::vector<Vertex> witness_hamiltonian_cycle(const ReductionResult& r) {
    std::vector<Vertex> out;
    append_segment(r, 0, kG1Witness, out);
    for (std::size_t i = 1; i < r.local_to_global.size(); ++i) append_segment(r, i, kMainZ, out);
    out.push_back(r.t);
    if (!is_hamiltonian_cycle(r.g, out)) throw std::logic_error("witness cycle is not Hamiltonian");
    return out;
}

std::vector<Vertex> lift_solution(const ReductionResult& r, const std::vector<Vertex>& hc) {
    if (!is_hamiltonian_cycle(r.h, hc)) throw PreconditionError("lift_solution: not a Hamiltonian cycle of h");
    const std::size_t n = hc.size();
    // Rotate to start at e.u and turn so that e.v comes second.
    std::vector<Vertex> c(hc.begin(), hc.end());
    std::rotate(c.begin(), std::find(c.begin(), c.end(), r.e.u), c.end());
    if (c[1] != r.e.v) std::reverse(c.begin() + 1, c.end());
    if (c[1] != r.e.v) throw PreconditionError("lift_solution: cycle does not use the specified edge");

    std::vector<std::size_t> order;
    for (Vertex v : c)
        order.push_back(static_cast<std::size_t>(
            std::find(r.h_vertex.begin(), r.h_vertex.end(), v) - r.h_vertex.begin()));

    std::vector<Vertex> out;
    append_segment(r, 0, kG1Opening, out);
    for (std::size_t k = 1; k < n; ++k) {
        const std::size_t gi = order[k], prev = order[k - 1], next = k + 1 < n ? order[k + 1] : 0;
        append_segment(r, gi, main_path_between(slot_of(r, gi, prev), slot_of(r, gi, next)), out);
    }
    const std::size_t last = slot_of(r, 0, order[n - 1]);
    append_segment(r, 0, last == 2 ? kG1CloseFromL : kG1CloseFromK, out);
    if (!is_hamiltonian_path(r.g, out) || out.front() != r.s || out.back() != r.t)
        throw std::logic_error("lifted path is not an s-t Hamiltonian path");
    return out;
}

std::vector<Vertex> project_solution(const ReductionResult& r, const std::vector<Vertex>& path) {
    if (!is_hamiltonian_path(r.g, path) ||
        !((path.front() == r.s && path.back() == r.t) || (path.front() == r.t && path.back() == r.s)))
        throw PreconditionError("project_solution: not an s-t Hamiltonian path");
    std::vector<Vertex> p(path.begin(), path.end());
    if (p.front() != r.s) std::reverse(p.begin(), p.end());

    std::vector<std::size_t> visits;
    for (Vertex v : p)
        if (visits.empty() || visits.back() != r.gadget_of[v]) visits.push_back(r.gadget_of[v]);
    const std::size_t n = r.local_to_global.size();
    std::vector<char> seen(n, 0);
    bool shaped = visits.size() == n + 1 && visits.front() == 0 && visits.back() == 0;
    for (std::size_t i = 1; shaped && i < n; ++i) {
        shaped = visits[i] != 0 && !seen[visits[i]];
        seen[visits[i]] = 1;
    }
    if (!shaped) throw std::logic_error("s-t path does not visit the gadgets as expected");

    std::vector<Vertex> cycle;
    for (std::size_t i = 0; i < n; ++i) cycle.push_back(r.h_vertex[visits[i]]);
    if (!is_hamiltonian_cycle(r.h, cycle) || cycle[1] != r.e.v)
        throw std::logic_error("projected cycle is not a Hamiltonian cycle through e");
    return cycle;
}

// --- forced edge ------------------------------------------------------------------

const ForcedEdgeGadget& forced_edge_gadget() {
    static const ForcedEdgeGadget gadget{
        Graph::build(9, {{0, 6}, {0, 7}, {1, 7}, {1, 8}, {2, 7}, {2, 8}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 8}, {5, 6}}),
        {0, 1, 2},
        Edge(3, 5),
    };
    return gadget;
}

bool verify_forced_edge_gadget() {
    const ForcedEdgeGadget& fg = forced_edge_gadget();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            auto paths = all_hamiltonian_paths(fg.graph, fg.ports[i], fg.ports[j]);
            if (paths.empty()) return false;
            for (const auto& p : paths) {
                auto es = path_edges(p);
                if (std::find(es.begin(), es.end(), fg.forced) == es.end()) return false;
            }
        }
    return true;
}

std::pair<Graph, Edge> expand_vertex_forced_edge(const Graph& g, Vertex v) {
    if (!degree_profile(g).is_cubic) throw PreconditionError("expand_vertex_forced_edge: graph is not cubic");
    if (!g.contains_vertex(v)) throw GraphError(GraphError::Kind::out_of_range, v, v);
    const ForcedEdgeGadget& fg = forced_edge_gadget();
    const Vertex n = g.vertex_count();
    auto map = [&](Vertex local) { return local == 0 ? v : n + local - 1; };
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!e.touches(v)) edges.push_back(e);
    for (const Edge& e : fg.graph.edges()) edges.emplace_back(map(e.u), map(e.v));
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < 3; ++i) edges.emplace_back(map(fg.ports[i]), nb[i]);
    return {Graph::build(n + fg.graph.vertex_count() - 1, edges), Edge(map(fg.forced.u), map(fg.forced.v))};
}

}  // namespace mdec
