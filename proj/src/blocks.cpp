#include "mdec/blocks.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "mdec/patterns.hpp"

namespace mdec {

std::string_view to_string(BlockKind kind) {
    switch (kind) {
        case BlockKind::bridge: return "bridge";
        case BlockKind::triangle: return "triangle";
        case BlockKind::square: return "square";
        case BlockKind::diamond: return "diamond";
        case BlockKind::k23: return "K23";
        case BlockKind::k24: return "K24";
        case BlockKind::k33minus: return "K33minus";
        case BlockKind::other: return "other";
    }
    return "other";
}

const Graph& block_pattern(BlockKind kind) {
    static const std::array<Graph, 7> table = {
        patterns::complete(2), patterns::triangle(), patterns::square(), patterns::diamond(),
        patterns::k23(),       patterns::k24(),      patterns::k33minus(),
    };
    if (kind == BlockKind::other) throw std::invalid_argument("no pattern for BlockKind::other");
    return table[static_cast<std::size_t>(kind)];
}

BlockDecomposition block_decomposition(const Graph& g) {
    const Vertex n = g.vertex_count();
    const auto un = static_cast<std::size_t>(n);
    constexpr EdgeId kNone = static_cast<EdgeId>(-1);

    std::vector<Vertex> disc(un, -1), low(un, 0);
    struct Frame {
        Vertex v;
        Vertex next;
        EdgeId parent_edge;
    };
    std::vector<Frame> frames;
    std::vector<EdgeId> edge_stack;
    // Blocks as consecutive runs of block_edges.
    std::vector<EdgeId> block_edges;
    std::vector<std::size_t> block_start{0};
    block_edges.reserve(g.edge_count());
    Vertex clock = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        disc[root] = low[root] = clock++;
        frames.push_back({root, 0, kNone});
        while (!frames.empty()) {
            Frame& f = frames.back();
            const Vertex v = f.v;
            auto nb = g.neighbors(v);
            if (static_cast<std::size_t>(f.next) < nb.size()) {
                const auto i = static_cast<std::size_t>(f.next++);
                const Vertex w = nb[i];
                const EdgeId eid = g.incident_edges(v)[i];
                if (eid == f.parent_edge) continue;
                if (disc[w] < 0) {
                    edge_stack.push_back(eid);
                    disc[w] = low[w] = clock++;
                    frames.push_back({w, 0, eid});
                } else if (disc[w] < disc[v]) {
                    edge_stack.push_back(eid);
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            const EdgeId up = f.parent_edge;
            frames.pop_back();
            if (frames.empty()) break;
            const Vertex p = frames.back().v;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                while (true) {
                    EdgeId e = edge_stack.back();
                    edge_stack.pop_back();
                    block_edges.push_back(e);
                    if (e == up) break;
                }
                std::sort(block_edges.begin() + static_cast<std::ptrdiff_t>(block_start.back()), block_edges.end());
                block_start.push_back(block_edges.size());
            }
        }
    }

    const std::size_t nb = block_start.size() - 1;
    std::vector<std::size_t> order(nb);
    for (std::size_t i = 0; i < nb; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return block_edges[block_start[x]] < block_edges[block_start[y]]; });

    BlockDecomposition d;
    d.blocks.resize(nb);
    std::vector<std::size_t> stamp(un, static_cast<std::size_t>(-1));
    std::vector<std::size_t> count(un + 1, 0);
    for (std::size_t bi = 0; bi < nb; ++bi) {
        Block& b = d.blocks[bi];
        const std::size_t raw = order[bi];
        b.edges.assign(block_edges.begin() + static_cast<std::ptrdiff_t>(block_start[raw]),
                       block_edges.begin() + static_cast<std::ptrdiff_t>(block_start[raw + 1]));
        for (EdgeId e : b.edges)
            for (Vertex x : {g.edge(e).u, g.edge(e).v})
                if (stamp[x] != bi) {
                    stamp[x] = bi;
                    b.vertices.push_back(x);
                    ++count[x + 1];
                }
        std::sort(b.vertices.begin(), b.vertices.end());
        BlockMatch match = match_block(g, b.edges);
        b.kind = match.kind;
        b.pattern_image = std::move(match.image);
        if (b.kind == BlockKind::bridge) d.bridges.push_back(g.edge(b.edges.front()));
    }
    auto& inc = d.blocks_of_vertex;
    inc.offsets.assign(un + 1, 0);
    for (std::size_t v = 0; v < un; ++v) inc.offsets[v + 1] = inc.offsets[v] + count[v + 1];
    inc.ids.resize(inc.offsets[un]);
    std::vector<std::size_t> fill(inc.offsets.begin(), inc.offsets.end() - 1);
    for (std::size_t bi = 0; bi < nb; ++bi)
        for (Vertex x : d.blocks[bi].vertices) inc.ids[fill[x]++] = bi;

    for (Vertex v = 0; v < n; ++v)
        if (inc[v].size() >= 2) d.cut_vertices.push_back(v);
    std::sort(d.bridges.begin(), d.bridges.end());
    for (std::size_t bi = 0; bi < nb; ++bi) {
        std::size_t cuts = 0;
        for (Vertex x : d.blocks[bi].vertices) cuts += inc[x].size() >= 2;
        if (cuts == 1) d.leaf_blocks.push_back(bi);
    }
    return d;
}

namespace {

struct MaskPattern {
    BlockKind kind;
    int n;
    int m;
    std::array<std::uint8_t, 6> adj{};
};

const std::array<MaskPattern, 6>& mask_patterns() {
    static const auto table = [] {
        std::array<MaskPattern, 6> t{};
        std::size_t i = 0;
        for (BlockKind k : {BlockKind::triangle, BlockKind::square, BlockKind::diamond, BlockKind::k23,
                            BlockKind::k24, BlockKind::k33minus}) {
            const Graph& p = block_pattern(k);
            MaskPattern& mp = t[i++];
            mp.kind = k;
            mp.n = p.vertex_count();
            mp.m = static_cast<int>(p.edge_count());
            for (const Edge& e : p.edges()) {
                mp.adj[e.u] |= static_cast<std::uint8_t>(1u << e.v);
                mp.adj[e.v] |= static_cast<std::uint8_t>(1u << e.u);
            }
        }
        return t;
    }();
    return table;
}

// Lexicographically first map of pattern vertex i to local vertex image[i].
bool extend(const MaskPattern& p, const std::array<std::uint8_t, 6>& adj, int i, std::array<int, 6>& image,
            std::uint8_t used) {
    if (i == p.n) return true;
    for (int c = 0; c < p.n; ++c) {
        if (used & (1u << c)) continue;
        if (std::popcount(p.adj[i]) != std::popcount(adj[c])) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
            ok = static_cast<bool>(p.adj[i] & (1u << j)) == static_cast<bool>(adj[c] & (1u << image[j]));
        if (!ok) continue;
        image[i] = c;
        if (extend(p, adj, i + 1, image, static_cast<std::uint8_t>(used | (1u << c)))) return true;
    }
    return false;
}

}  // namespace

BlockMatch match_block(const Graph& g, std::span<const EdgeId> block) {
    BlockMatch out;
    if (block.size() == 1) {
        out.kind = BlockKind::bridge;
        out.image = {g.edge(block[0]).u, g.edge(block[0]).v};
        return out;
    }
    if (block.size() > 8) return out;
    std::array<Vertex, 7> vs{};
    int nv = 0;
    for (EdgeId e : block)
        for (Vertex x : {g.edge(e).u, g.edge(e).v})
            if (std::find(vs.begin(), vs.begin() + nv, x) == vs.begin() + nv) {
                if (nv == 6) return out;
                vs[nv++] = x;
            }
    std::sort(vs.begin(), vs.begin() + nv);
    std::array<std::uint8_t, 6> adj{};
    for (EdgeId e : block) {
        const Edge& ed = g.edge(e);
        auto iu = std::lower_bound(vs.begin(), vs.begin() + nv, ed.u) - vs.begin();
        auto iv = std::lower_bound(vs.begin(), vs.begin() + nv, ed.v) - vs.begin();
        adj[iu] |= static_cast<std::uint8_t>(1u << iv);
        adj[iv] |= static_cast<std::uint8_t>(1u << iu);
    }
    for (const MaskPattern& p : mask_patterns()) {
        if (p.n != nv || p.m != static_cast<int>(block.size())) continue;
        std::array<int, 6> image{};
        if (extend(p, adj, 0, image, 0)) {
            out.kind = p.kind;
            out.image.resize(static_cast<std::size_t>(p.n));
            for (int i = 0; i < p.n; ++i) out.image[i] = vs[image[i]];
            return out;
        }
    }
    return out;
}

BlockKind classify_block(const Graph& g, std::span<const EdgeId> block) { return match_block(g, block).kind; }

}  // namespace mdec
