#include "mdec/patterns.hpp"

#include <algorithm>

namespace mdec {

namespace patterns {

Graph complete(Vertex n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::build(n, e);
}

Graph complete_bipartite(Vertex a, Vertex b) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::build(a + b, e);
}

Graph cycle(Vertex k) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph::build(k, e);
}

Graph path(Vertex k) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph::build(k, e);
}

Graph star(Vertex leaves) {
    std::vector<Edge> e;
    for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::build(leaves + 1, e);
}

Graph diamond() { return Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}); }
Graph k23() { return complete_bipartite(2, 3); }
Graph k24() { return complete_bipartite(2, 4); }
Graph k33() { return complete_bipartite(3, 3); }

Graph k33minus() {
    return Graph::build(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}});
}

Graph gem() { return Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}); }
Graph house() { return Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}}); }
Graph domino() { return Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 4}, {4, 5}, {2, 5}}); }
Graph two_k2() { return Graph::build(4, {{0, 1}, {2, 3}}); }

}  // namespace patterns

namespace {

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    bool induced;  // require non-edges to map to non-edges
    std::vector<Vertex> order;
    std::vector<Vertex> image;
    std::vector<char> used;

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const Vertex x = order[depth];
        for (Vertex y = 0; y < b.vertex_count(); ++y) {
            if (used[y]) continue;
            if (induced ? b.degree(y) != a.degree(x) : b.degree(y) < a.degree(x)) continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                const Vertex px = order[i];
                const bool ea = a.has_edge(x, px);
                const bool eb = b.has_edge(y, image[px]);
                ok = induced ? ea == eb : (!ea || eb);
            }
            if (!ok) continue;
            image[x] = y;
            used[y] = 1;
            if (extend(depth + 1)) return true;
            used[y] = 0;
        }
        image[x] = -1;
        return false;
    }

    std::optional<std::vector<Vertex>> run() {
        // Visit pattern vertices so each new one is adjacent to an earlier
        // one when possible, which prunes early.
        const Vertex n = a.vertex_count();
        std::vector<char> placed(static_cast<std::size_t>(n), 0);
        while (static_cast<Vertex>(order.size()) < n) {
            Vertex best = -1;
            std::size_t best_links = 0;
            for (Vertex v = 0; v < n; ++v) {
                if (placed[v]) continue;
                std::size_t links = 0;
                for (Vertex w : a.neighbors(v)) links += placed[w];
                if (best < 0 || links > best_links ||
                    (links == best_links && a.degree(v) > a.degree(best))) {
                    best = v;
                    best_links = links;
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
        image.assign(static_cast<std::size_t>(n), -1);
        used.assign(static_cast<std::size_t>(b.vertex_count()), 0);
        if (!extend(0)) return std::nullopt;
        return image;
    }
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& pattern, const Graph& g) {
    if (pattern.vertex_count() != g.vertex_count() || pattern.edge_count() != g.edge_count()) return std::nullopt;
    std::vector<std::size_t> da, db;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        da.push_back(pattern.degree(v));
        db.push_back(g.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
    return IsoSearch{pattern, g, true, {}, {}, {}}.run();
}

bool contains_subgraph(const Graph& g, const Graph& pattern) {
    if (pattern.vertex_count() > g.vertex_count() || pattern.edge_count() > g.edge_count()) return false;
    return IsoSearch{pattern, g, false, {}, {}, {}}.run().has_value();
}

}  // namespace mdec
