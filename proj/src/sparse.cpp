#include "mdec/sparse.hpp"

#include <bit>

#include "mdec/blocks.hpp"
#include "mdec/recognizers.hpp"

namespace mdec {

bool density_ok(const Graph& g) {
    return static_cast<std::int64_t>(g.edge_count()) <= sparse_edge_bound(g.vertex_count());
}

std::optional<std::vector<Vertex>> find_bad_subgraph(const Graph& g, Vertex max_n) {
    const Vertex n = g.vertex_count();
    if (n > max_n || n > 30)
        throw SizeLimitError("find_bad_subgraph: n=" + std::to_string(n) + " exceeds limit " + std::to_string(max_n));
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    // k <= 3 can never be bad; a bad k-set needs more than floor(3k/2)-1 edges.
    std::vector<Vertex> comb;
    for (Vertex k = 4; k <= n; ++k) {
        comb.resize(static_cast<std::size_t>(k));
        for (Vertex i = 0; i < k; ++i) comb[i] = i;
        const std::int64_t bound = sparse_edge_bound(k);
        while (true) {
            std::uint32_t mask = 0;
            for (Vertex v : comb) mask |= 1u << v;
            std::int64_t twice = 0;
            for (Vertex v : comb) twice += std::popcount(adj[v] & mask);
            if (twice / 2 > bound) return comb;
            // next combination in lexicographic order
            Vertex i = k - 1;
            while (i >= 0 && comb[i] == n - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (Vertex j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return std::nullopt;
}

bool is_sparse_chordal(const Graph& g) {
    if (!is_chordal(g).chordal) throw PreconditionError("is_sparse_chordal: graph is not chordal");
    const auto d = block_decomposition(g);
    // Union the non-bridge blocks into bridge-free components by shared vertices.
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Block& b : d.blocks) {
        if (b.kind != BlockKind::bridge && b.kind != BlockKind::triangle && b.kind != BlockKind::diamond) return false;
        if (b.kind == BlockKind::bridge) continue;
        for (Vertex v : b.vertices) parent[find(v)] = find(b.vertices.front());
    }
    std::vector<char> has_diamond(n, 0);
    for (const Block& b : d.blocks) {
        if (b.kind != BlockKind::diamond) continue;
        auto root = find(b.vertices.front());
        if (has_diamond[root]) return false;
        has_diamond[root] = 1;
    }
    return true;
}

bool is_biconnected(const Graph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    const auto d = block_decomposition(g);
    return d.blocks.size() == 1 && d.blocks[0].kind != BlockKind::bridge;
}

bool is_sparse_2conn_dh(const Graph& g) {
    if (!is_biconnected(g)) throw PreconditionError("is_sparse_2conn_dh: graph is not 2-connected with n >= 3");
    if (!is_distance_hereditary(g).distance_hereditary)
        throw PreconditionError("is_sparse_2conn_dh: graph is not distance-hereditary");
    const auto d = block_decomposition(g);
    const BlockKind k = d.blocks[0].kind;
    return k == BlockKind::triangle || k == BlockKind::square || k == BlockKind::diamond || k == BlockKind::k23 ||
           k == BlockKind::k24 || k == BlockKind::k33minus;
}

}  // namespace mdec
