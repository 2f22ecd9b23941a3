#include "mdec/generators.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "mdec/decycler.hpp"

namespace mdec::gen {

Graph gnp(Vertex n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

Graph random_tree(Vertex n, Rng& rng) {
    if (n <= 1) return Graph::build(std::max<Vertex>(n, 0), std::span<const Edge>{});
    if (n == 2) return Graph::build(2, {{0, 1}});
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    std::vector<Vertex> code(static_cast<std::size_t>(n) - 2);
    for (auto& c : code) c = pick(rng);
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (Vertex c : code) ++deg[c];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);
    std::vector<Edge> edges;
    for (Vertex c : code) {
        Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, c);
        if (--deg[c] == 1) leaves.push(c);
    }
    Vertex a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return Graph::build(n, edges);
}

Graph random_cubic(Vertex n, Rng& rng, bool connected) {
    if (n < 4 || n % 2) throw std::invalid_argument("random_cubic: n must be even and at least 4");
    std::vector<Vertex> points(3 * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / 3);
    for (;;) {
        std::shuffle(points.begin(), points.end(), rng);
        std::vector<Edge> edges;
        bool simple = true;
        for (std::size_t i = 0; simple && i < points.size(); i += 2) {
            if (points[i] == points[i + 1]) simple = false;
            else edges.emplace_back(points[i], points[i + 1]);
        }
        if (!simple) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        Graph g = Graph::build(n, edges);
        if (connected && !is_connected(g)) continue;
        return g;
    }
}

Graph random_fairly_cubic(Vertex n, Rng& rng) {
    for (;;) {
        Graph g = random_cubic(n, rng);
        std::uniform_int_distribution<std::size_t> pick(0, g.edge_count() - 1);
        Edge e = g.edge(pick(rng));
        Graph h = remove_edges(g, std::span<const Edge>(&e, 1));
        if (is_connected(h)) return h;
    }
}

Graph random_subcubic(Vertex n, Rng& rng) {
    if (n <= 1) return Graph::build(std::max<Vertex>(n, 0), std::span<const Edge>{});
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edges;
    std::vector<Vertex> open{0};
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
        std::size_t i = pick(rng);
        Vertex u = open[i];
        edges.emplace_back(u, v);
        if (++deg[u] == 3) {
            open[i] = open.back();
            open.pop_back();
        }
        ++deg[v];
        open.push_back(v);
    }
    std::uniform_int_distribution<Vertex> any(0, n - 1);
    std::sort(edges.begin(), edges.end());
    for (Vertex attempt = 0; attempt < n; ++attempt) {
        Vertex a = any(rng), b = any(rng);
        if (a == b || deg[a] >= 3 || deg[b] >= 3) continue;
        Edge e(a, b);
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it != edges.end() && *it == e) continue;
        edges.insert(it, e);
        ++deg[a];
        ++deg[b];
    }
    return Graph::build(n, edges);
}

// --- block trees -------------------------------------------------------------------

namespace {

class BlockTreeBuilder {
public:
    explicit BlockTreeBuilder(Rng& rng) : rng_(rng) { add_vertex(); }

    Vertex size() const { return static_cast<Vertex>(covered_.size()); }

    void attach(BlockKind kind) {
        const Graph& p = block_pattern(kind);
        const auto& sets = block_decycling_sets(kind);
        // Pick an attachment vertex; a covered one needs a pattern position
        // the chosen decycling set avoids.
        std::uniform_int_distribution<Vertex> any(0, size() - 1);
        Vertex x = any(rng_);
        std::vector<std::pair<Vertex, std::size_t>> options;  // pattern vertex, set index
        for (Vertex pv = 0; pv < p.vertex_count(); ++pv)
            for (std::size_t si = 0; si < sets.size(); ++si) {
                bool touches = std::any_of(sets[si].begin(), sets[si].end(),
                                           [&](const Edge& e) { return e.touches(pv); });
                if (!covered_[x] || !touches) options.emplace_back(pv, si);
            }
        if (options.empty()) {
            if (uncovered_.empty()) {
                attach(BlockKind::bridge);
                return;
            }
            std::uniform_int_distribution<std::size_t> pick(0, uncovered_.size() - 1);
            x = uncovered_[pick(rng_)];
            for (Vertex pv = 0; pv < p.vertex_count(); ++pv)
                for (std::size_t si = 0; si < sets.size(); ++si) options.emplace_back(pv, si);
        }
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        auto [anchor, si] = options[pick(rng_)];

        std::vector<Vertex> image(static_cast<std::size_t>(p.vertex_count()));
        for (Vertex pv = 0; pv < p.vertex_count(); ++pv) image[pv] = pv == anchor ? x : add_vertex();
        for (const Edge& e : p.edges()) edges_.emplace_back(image[e.u], image[e.v]);
        for (const Edge& e : sets[si]) {
            witness_.emplace_back(image[e.u], image[e.v]);
            cover(image[e.u]);
            cover(image[e.v]);
        }
        if (kind == BlockKind::diamond) ++diamonds_;
        if (kind == BlockKind::triangle) ++triangles_;
    }

    // Vertices are renumbered in depth-first preorder from vertex 0, so a
    // block and its neighbors get nearby labels.
    BlockTreeInstance finish() {
        const Graph grown = Graph::build(size(), edges_);
        std::vector<Vertex> label(static_cast<std::size_t>(size()), -1);
        std::vector<Vertex> stack{0};
        Vertex next = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            if (label[v] >= 0) continue;
            label[v] = next++;
            auto nb = grown.neighbors(v);
            for (auto it = nb.rbegin(); it != nb.rend(); ++it)
                if (label[*it] < 0) stack.push_back(*it);
        }
        for (Edge& e : edges_) e = Edge(label[e.u], label[e.v]);
        for (Edge& e : witness_) e = Edge(label[e.u], label[e.v]);
        BlockTreeInstance out;
        out.graph = Graph::build(size(), edges_);
        out.witness = Matching(std::move(witness_));
        out.diamonds = diamonds_;
        out.triangles = triangles_;
        return out;
    }

private:
    Vertex add_vertex() {
        Vertex v = size();
        covered_.push_back(0);
        slot_.push_back(uncovered_.size());
        uncovered_.push_back(v);
        return v;
    }

    void cover(Vertex v) {
        if (covered_[v]) throw std::logic_error("block tree: vertex covered twice");
        covered_[v] = 1;
        std::size_t i = slot_[v];
        Vertex last = uncovered_.back();
        uncovered_[i] = last;
        slot_[last] = i;
        uncovered_.pop_back();
    }

    Rng& rng_;
    std::vector<char> covered_;
    std::vector<std::size_t> slot_;
    std::vector<Vertex> uncovered_;
    std::vector<Edge> edges_;
    std::vector<Edge> witness_;
    std::size_t diamonds_ = 0, triangles_ = 0;
};

}  // namespace

BlockTreeInstance random_block_tree(Vertex n, std::span<const BlockKind> kinds, Rng& rng) {
    if (kinds.empty()) throw std::invalid_argument("random_block_tree: no block kinds");
    BlockTreeBuilder b(rng);
    std::uniform_int_distribution<std::size_t> pick(0, kinds.size() - 1);
    while (b.size() < n) b.attach(kinds[pick(rng)]);
    return b.finish();
}

BlockTreeInstance random_decyclable_chordal(Vertex n, Rng& rng) {
    static constexpr BlockKind kinds[] = {BlockKind::bridge, BlockKind::triangle, BlockKind::triangle,
                                          BlockKind::diamond};
    return random_block_tree(n, kinds, rng);
}

BlockTreeInstance random_decyclable_dh(Vertex n, Rng& rng) {
    static constexpr BlockKind kinds[] = {BlockKind::bridge, BlockKind::triangle, BlockKind::square,
                                          BlockKind::diamond, BlockKind::k23, BlockKind::k33minus};
    return random_block_tree(n, kinds, rng);
}

Graph chain(std::size_t k) {
    std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}};
    Vertex link = 3, next = 4;
    for (std::size_t i = 0; i < k; ++i) {
        Vertex x = next++, y = next++;
        edges.insert(edges.end(), {Edge(link, x), Edge(link, y), Edge(x, y)});
        link = y;
    }
    Vertex b = next++, c = next++, d = next++;
    edges.insert(edges.end(), {Edge(link, b), Edge(link, c), Edge(link, d), Edge(b, c), Edge(c, d)});
    return Graph::build(next, edges);
}

}  // namespace mdec::gen
