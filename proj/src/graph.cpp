#include "mdec/graph.hpp"

#include <algorithm>
#include <numeric>

#include "mdec/matching.hpp"

namespace mdec {

namespace {

const char* kind_text(GraphError::Kind k) {
    switch (k) {
        case GraphError::Kind::self_loop: return "self-loop";
        case GraphError::Kind::duplicate_edge: return "duplicate edge";
        case GraphError::Kind::out_of_range: return "vertex index out of range";
        case GraphError::Kind::missing_edge: return "edge not present";
    }
    return "graph error";
}

std::string pair_text(Vertex a, Vertex b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

GraphError::GraphError(Kind kind, Vertex a, Vertex b)
    : std::invalid_argument(std::string(kind_text(kind)) + " " + pair_text(a, b)),
      kind_(kind), a_(a), b_(b) {}

std::string to_string(const Edge& e) { return pair_text(e.u, e.v); }

Graph Graph::build(Vertex n, std::span<const Edge> input) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(input.size());
    for (const Edge& raw : input) {
        if (raw.u < 0 || raw.v < 0 || raw.u >= n || raw.v >= n)
            throw GraphError(GraphError::Kind::out_of_range, raw.u, raw.v);
        if (raw.u == raw.v) throw GraphError(GraphError::Kind::self_loop, raw.u, raw.v);
        g.edges_.emplace_back(raw.u, raw.v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) throw GraphError(GraphError::Kind::duplicate_edge, dup->u, dup->v);

    std::vector<std::size_t> deg(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : g.edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(2 * g.edges_.size());
    g.adj_edge_.resize(2 * g.edges_.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges are sorted by (u, v), so for fixed u the v's arrive ascending; for
    // the reverse slots, u's arrive ascending as well. Both lists end sorted
    // after the merge below.
    for (EdgeId id = 0; id < g.edges_.size(); ++id) {
        const Edge& e = g.edges_[id];
        g.adj_[fill[e.u]] = e.v;
        g.adj_edge_[fill[e.u]++] = id;
        g.adj_[fill[e.v]] = e.u;
        g.adj_edge_[fill[e.v]++] = id;
    }
    for (Vertex v = 0; v < n; ++v) {
        const auto lo = g.offsets_[v], hi = g.offsets_[v + 1];
        if (std::is_sorted(g.adj_.begin() + lo, g.adj_.begin() + hi)) continue;
        std::vector<std::pair<Vertex, EdgeId>> tmp;
        tmp.reserve(hi - lo);
        for (auto i = lo; i < hi; ++i) tmp.emplace_back(g.adj_[i], g.adj_edge_[i]);
        std::sort(tmp.begin(), tmp.end());
        for (auto i = lo; i < hi; ++i) {
            g.adj_[i] = tmp[i - lo].first;
            g.adj_edge_[i] = tmp[i - lo].second;
        }
    }
    return g;
}

Graph Graph::build(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    std::vector<Edge> list;
    list.reserve(edges.size());
    for (auto [a, b] : edges) {
        // Keep the raw orientation so self-loops are still reported.
        Edge e;
        e.u = a;
        e.v = b;
        list.push_back(e);
    }
    return build(n, list);
}

std::optional<EdgeId> Graph::edge_id(Vertex a, Vertex b) const {
    if (!contains_vertex(a) || !contains_vertex(b)) return std::nullopt;
    if (degree(a) > degree(b)) std::swap(a, b);
    auto nb = neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
}

Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
    std::vector<char> drop(g.edge_count(), 0);
    for (const Edge& raw : removed) {
        Edge e(raw.u, raw.v);
        auto id = g.edge_id(e.u, e.v);
        if (!id) throw GraphError(GraphError::Kind::missing_edge, e.u, e.v);
        drop[*id] = 1;
    }
    std::vector<Edge> kept;
    kept.reserve(g.edge_count());
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        if (!drop[id]) kept.push_back(g.edge(id));
    return Graph::build(g.vertex_count(), kept);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep, std::vector<Vertex>* original) {
    std::vector<Vertex> relabel(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (!g.contains_vertex(keep[i])) throw GraphError(GraphError::Kind::out_of_range, keep[i], keep[i]);
        if (relabel[keep[i]] != -1) throw std::invalid_argument("induced_subgraph: repeated vertex");
        relabel[keep[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (relabel[e.u] >= 0 && relabel[e.v] >= 0) edges.emplace_back(relabel[e.u], relabel[e.v]);
    if (original) original->assign(keep.begin(), keep.end());
    return Graph::build(static_cast<Vertex>(keep.size()), edges);
}

std::vector<std::int32_t> component_labels(const Graph& g) {
    const Vertex n = g.vertex_count();
    std::vector<std::int32_t> label(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> stack;
    std::int32_t next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] >= 0) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (label[w] < 0) {
                    label[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

std::size_t component_count(const Graph& g) {
    auto labels = component_labels(g);
    std::int32_t mx = -1;
    for (auto l : labels) mx = std::max(mx, l);
    return static_cast<std::size_t>(mx + 1);
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_acyclic(const Graph& g) {
    return g.edge_count() + component_count(g) == static_cast<std::size_t>(g.vertex_count());
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    const Vertex n = g.vertex_count();
    std::size_t deg3 = 0;
    p.min_degree = n ? g.degree(0) : 0;
    for (Vertex v = 0; v < n; ++v) {
        auto d = g.degree(v);
        p.min_degree = std::min(p.min_degree, d);
        p.max_degree = std::max(p.max_degree, d);
        if (d == 3) ++deg3;
        if (d == 2) p.degree2_vertices.push_back(v);
    }
    p.is_subcubic = p.max_degree <= 3;
    p.is_cubic = n > 0 && deg3 == static_cast<std::size_t>(n);
    p.is_fairly_cubic = n >= 2 && p.degree2_vertices.size() == 2 &&
                        deg3 == static_cast<std::size_t>(n) - 2;
    return p;
}

// --- Matching ---------------------------------------------------------------

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (auto& e : edges_) e = Edge(e.u, e.v);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Matching::contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge(e.u, e.v));
}

bool Matching::pairwise_disjoint() const {
    std::vector<Vertex> ends;
    ends.reserve(2 * edges_.size());
    for (const Edge& e : edges_) {
        ends.push_back(e.u);
        ends.push_back(e.v);
    }
    std::sort(ends.begin(), ends.end());
    return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

bool validate_matching(const Graph& g, const Matching& m) {
    if (!m.pairwise_disjoint()) return false;
    for (const Edge& e : m.edges())
        if (!g.has_edge(e.u, e.v)) return false;
    // Union-find over the kept edges; a union inside one set closes a cycle.
    std::vector<Vertex> parent(static_cast<std::size_t>(g.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : g.edges()) {
        if (std::binary_search(m.edges().begin(), m.edges().end(), e)) continue;
        Vertex a = find(e.u), b = find(e.v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

Matching restrict_to(const Matching& m, const Graph& h) {
    std::vector<Edge> kept;
    for (const Edge& e : m.edges())
        if (h.has_edge(e.u, e.v)) kept.push_back(e);
    return Matching(std::move(kept));
}

}  // namespace mdec
