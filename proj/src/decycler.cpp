#include "mdec/decycler.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mdec/hamiltonian.hpp"
#include "mdec/patterns.hpp"
#include "mdec/recognizers.hpp"
#include "mdec/sparse.hpp"

namespace mdec {

std::string_view to_string(Decision d) {
    switch (d) {
        case Decision::decyclable: return "decyclable";
        case Decision::not_decyclable: return "not_decyclable";
        case Decision::unknown: return "unknown";
    }
    return "unknown";
}

std::string_view to_string(Method m) {
    switch (m) {
        case Method::chordal: return "chordal";
        case Method::split: return "split";
        case Method::dh: return "dh";
        case Method::cograph: return "cograph";
        case Method::fairly_cubic: return "fairly-cubic";
        case Method::oracle: return "oracle";
    }
    return "oracle";
}

std::optional<Method> parse_method(std::string_view text) {
    for (Method m : {Method::chordal, Method::split, Method::dh, Method::cograph, Method::fairly_cubic,
                     Method::oracle})
        if (to_string(m) == text) return m;
    if (text == "fairly_cubic") return Method::fairly_cubic;
    return std::nullopt;
}

std::string_view to_string(Refutation::Kind k) {
    using K = Refutation::Kind;
    switch (k) {
        case K::bad_subgraph: return "bad_subgraph";
        case K::forbidden_block: return "forbidden_block";
        case K::chain_witness: return "chain_witness";
        case K::k24_block: return "K24_block";
        case K::stuck_leaf_block: return "stuck_leaf_block";
        case K::no_hamiltonian_path: return "no_hamiltonian_path";
        case K::exhausted: return "exhausted";
        case K::budget_exhausted: return "budget_exhausted";
    }
    return "exhausted";
}

std::string_view to_string(SplitShape s) {
    switch (s) {
        case SplitShape::star: return "star";
        case SplitShape::double_star: return "double_star";
        case SplitShape::triangle_with_pendants: return "triangle_with_pendants";
        case SplitShape::diamond_with_pendants: return "diamond_with_pendants";
        case SplitShape::none: return "none";
    }
    return "none";
}

std::size_t min_decycling_edge_count(const Graph& g) {
    return g.edge_count() + component_count(g) - static_cast<std::size_t>(g.vertex_count());
}

namespace {

Verdict refuted(Method method, Refutation r) {
    Verdict v;
    v.decision = Decision::not_decyclable;
    v.method = method;
    v.refutation = std::move(r);
    return v;
}

Verdict accepted(const Graph& g, Method method, std::vector<Edge> edges) {
    Verdict v;
    v.decision = Decision::decyclable;
    v.method = method;
    v.witness = Matching(std::move(edges));
    if (!validate_matching(g, *v.witness))
        throw std::logic_error("decycler produced an invalid witness (" + std::string(to_string(method)) + ")");
    return v;
}

std::vector<Vertex> all_vertices(const Graph& g) {
    std::vector<Vertex> out(static_cast<std::size_t>(g.vertex_count()));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

std::optional<Verdict> density_refutation(const Graph& g, Method method) {
    if (density_ok(g)) return std::nullopt;
    Refutation r;
    r.kind = Refutation::Kind::bad_subgraph;
    r.vertices = all_vertices(g);
    return refuted(method, std::move(r));
}

Refutation block_refutation(Refutation::Kind kind, std::size_t id, const Block& b) {
    Refutation r;
    r.kind = kind;
    r.blocks = {id};
    r.vertices = b.vertices;
    r.block_kind = b.kind;
    return r;
}

// --- exact search -------------------------------------------------------------

struct UnionFind {
    std::vector<Vertex> parent;
    explicit UnionFind(Vertex n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    Vertex find(Vertex v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    bool unite(Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// Decides whether the partial assignment (edges fixed in or out, vertices
// covered) extends to a decycling matching of size exactly k. Edges that
// cannot join the matching are forced into the forest; the first free edge
// that closes a cycle leaves a cycle one of whose free edges must be taken.
class ExactSearch {
public:
    explicit ExactSearch(const Graph& g)
        : g_(g), k_(min_decycling_edge_count(g)), in_(g.edge_count(), 0), out_(g.edge_count(), 0),
          covered_(static_cast<std::size_t>(g.vertex_count()), 0) {}

    std::size_t target() const { return k_; }
    std::uint64_t nodes() const { return nodes_; }

    bool feasible() {
        ++nodes_;
        const Vertex n = g_.vertex_count();
        UnionFind uf(n);
        std::vector<std::vector<std::pair<Vertex, EdgeId>>> forest(static_cast<std::size_t>(n));
        std::vector<EdgeId> free_edges;
        for (EdgeId id = 0; id < g_.edge_count(); ++id) {
            if (in_[id]) continue;
            const Edge& e = g_.edge(id);
            if (!out_[id] && !covered_[e.u] && !covered_[e.v]) {
                free_edges.push_back(id);
                continue;
            }
            if (!uf.unite(e.u, e.v)) return false;
            forest[e.u].emplace_back(e.v, id);
            forest[e.v].emplace_back(e.u, id);
        }
        for (EdgeId id : free_edges) {
            const Edge& e = g_.edge(id);
            if (uf.unite(e.u, e.v)) {
                forest[e.u].emplace_back(e.v, id);
                forest[e.v].emplace_back(e.u, id);
                continue;
            }
            if (size_ == k_) return false;
            std::vector<EdgeId> branch = cycle_free_edges(forest, e.u, e.v);
            branch.push_back(id);
            std::sort(branch.begin(), branch.end());
            std::vector<EdgeId> excluded;
            bool ok = false;
            for (EdgeId f : branch) {
                const Edge& fe = g_.edge(f);
                if (!covered_[fe.u] && !covered_[fe.v]) {
                    take(f);
                    ok = feasible();
                    drop(f);
                    if (ok) break;
                }
                out_[f] = 1;
                excluded.push_back(f);
            }
            for (EdgeId f : excluded) out_[f] = 0;
            return ok;
        }
        return size_ == k_;
    }

    void take(EdgeId id) {
        in_[id] = 1;
        covered_[g_.edge(id).u] = covered_[g_.edge(id).v] = 1;
        ++size_;
    }
    void drop(EdgeId id) {
        in_[id] = 0;
        covered_[g_.edge(id).u] = covered_[g_.edge(id).v] = 0;
        --size_;
    }
    void exclude(EdgeId id) { out_[id] = 1; }
    bool available(EdgeId id) const {
        return !in_[id] && !out_[id] && !covered_[g_.edge(id).u] && !covered_[g_.edge(id).v];
    }
    std::size_t size() const { return size_; }

    std::vector<Edge> chosen() const {
        std::vector<Edge> out;
        for (EdgeId id = 0; id < g_.edge_count(); ++id)
            if (in_[id]) out.push_back(g_.edge(id));
        return out;
    }

private:
    std::vector<EdgeId> cycle_free_edges(const std::vector<std::vector<std::pair<Vertex, EdgeId>>>& forest,
                                         Vertex from, Vertex to) const {
        std::vector<std::pair<Vertex, EdgeId>> via(static_cast<std::size_t>(g_.vertex_count()), {-1, 0});
        std::vector<Vertex> stack{from};
        via[from] = {from, 0};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            if (v == to) break;
            for (auto [w, id] : forest[v])
                if (via[w].first < 0) {
                    via[w] = {v, id};
                    stack.push_back(w);
                }
        }
        std::vector<EdgeId> out;
        for (Vertex v = to; v != from; v = via[v].first) {
            EdgeId id = via[v].second;
            const Edge& e = g_.edge(id);
            if (!out_[id] && !covered_[e.u] && !covered_[e.v]) out.push_back(id);
        }
        return out;
    }

    const Graph& g_;
    std::size_t k_;
    std::vector<char> in_, out_, covered_;
    std::size_t size_ = 0;
    std::uint64_t nodes_ = 0;
};

// --- block helpers ------------------------------------------------------------

// Two disjoint edges of a diamond whose removal leaves a path:
// {ab, cd} or {ad, bc}, whichever sorts first.
std::vector<Edge> diamond_pair(const Block& b) {
    const auto& im = b.pattern_image;
    std::vector<Edge> x{Edge(im[0], im[1]), Edge(im[2], im[3])};
    std::vector<Edge> y{Edge(im[0], im[3]), Edge(im[1], im[2])};
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return std::min(x, y);
}

bool is_nonbridge(const Block& b) { return b.kind != BlockKind::bridge; }

// Nearest pair of diamonds joined through non-bridge blocks, found by BFS
// over the block / vertex incidence starting from `start`.
std::optional<std::vector<std::size_t>> chain_from(const BlockDecomposition& bd, std::size_t start) {
    const std::size_t nb = bd.blocks.size();
    std::vector<std::size_t> parent(nb, SIZE_MAX);
    std::deque<std::size_t> queue{start};
    parent[start] = start;
    while (!queue.empty()) {
        std::size_t b = queue.front();
        queue.pop_front();
        if (b != start && bd.blocks[b].kind == BlockKind::diamond) {
            std::vector<std::size_t> path;
            for (std::size_t x = b; x != start; x = parent[x]) path.push_back(x);
            path.push_back(start);
            std::sort(path.begin(), path.end());
            return path;
        }
        for (Vertex v : bd.blocks[b].vertices)
            for (std::size_t c : bd.blocks_of_vertex[v])
                if (parent[c] == SIZE_MAX && is_nonbridge(bd.blocks[c])) {
                    parent[c] = b;
                    queue.push_back(c);
                }
    }
    return std::nullopt;
}

// A diamond whose bridge-free component holds a second diamond.
std::optional<std::size_t> diamond_sharing_component(const BlockDecomposition& bd) {
    const std::size_t nb = bd.blocks.size();
    std::vector<std::size_t> comp(nb, SIZE_MAX);
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < nb; ++root) {
        if (comp[root] != SIZE_MAX || !is_nonbridge(bd.blocks[root])) continue;
        comp[root] = root;
        stack.push_back(root);
        std::optional<std::size_t> first;
        while (!stack.empty()) {
            std::size_t b = stack.back();
            stack.pop_back();
            if (bd.blocks[b].kind == BlockKind::diamond) {
                if (first) return first;
                first = b;
            }
            for (Vertex v : bd.blocks[b].vertices)
                for (std::size_t c : bd.blocks_of_vertex[v])
                    if (comp[c] == SIZE_MAX && is_nonbridge(bd.blocks[c])) {
                        comp[c] = root;
                        stack.push_back(c);
                    }
        }
    }
    return std::nullopt;
}

}  // namespace

const std::vector<std::vector<Edge>>& block_decycling_sets(BlockKind kind) {
    static const auto table = [] {
        std::array<std::vector<std::vector<Edge>>, 8> t;
        for (BlockKind k : {BlockKind::bridge, BlockKind::triangle, BlockKind::square, BlockKind::diamond,
                            BlockKind::k23, BlockKind::k24, BlockKind::k33minus}) {
            const Graph& p = block_pattern(k);
            const auto& es = p.edges();
            const std::size_t need = p.edge_count() - static_cast<std::size_t>(p.vertex_count()) + 1;
            for (std::uint32_t mask = 0; mask < (1u << es.size()); ++mask) {
                if (static_cast<std::size_t>(std::popcount(mask)) != need) continue;
                std::vector<Edge> chosen;
                for (std::size_t i = 0; i < es.size(); ++i)
                    if (mask & (1u << i)) chosen.push_back(es[i]);
                if (validate_matching(p, Matching(chosen))) t[static_cast<std::size_t>(k)].push_back(chosen);
            }
        }
        return t;
    }();
    return table[static_cast<std::size_t>(kind)];
}

// --- oracle ---------------------------------------------------------------------

Verdict oracle_decide(const Graph& g, Vertex max_n) {
    if (g.vertex_count() > max_n)
        throw SizeLimitError("oracle limited to " + std::to_string(max_n) + " vertices, got " +
                             std::to_string(g.vertex_count()));
    ExactSearch search(g);
    if (!search.feasible()) {
        Refutation r;
        r.kind = Refutation::Kind::exhausted;
        Verdict v = refuted(Method::oracle, std::move(r));
        v.search_nodes = search.nodes();
        return v;
    }
    // Self-reduction: walk edges in order, keep each one that still admits
    // a completion.
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (search.size() == search.target()) break;
        if (!search.available(id)) continue;
        search.take(id);
        if (search.feasible()) continue;
        search.drop(id);
        search.exclude(id);
    }
    Verdict v = accepted(g, Method::oracle, search.chosen());
    v.search_nodes = search.nodes();
    return v;
}

// --- chordal --------------------------------------------------------------------

Verdict decide_chordal(const Graph& g) {
    // Bridges, triangles and diamonds are chordal, and so is any graph built
    // from chordal blocks.
    const BlockDecomposition bd = block_decomposition(g);
    const bool all_chordal = std::all_of(bd.blocks.begin(), bd.blocks.end(), [](const Block& b) {
        return b.kind == BlockKind::bridge || b.kind == BlockKind::triangle || b.kind == BlockKind::diamond;
    });
    if (!all_chordal && !is_chordal(g).chordal) throw PreconditionError("decide_chordal: graph is not chordal");
    if (auto r = density_refutation(g, Method::chordal)) return *r;

    for (std::size_t id = 0; id < bd.blocks.size(); ++id) {
        const Block& b = bd.blocks[id];
        if (b.kind != BlockKind::bridge && b.kind != BlockKind::triangle && b.kind != BlockKind::diamond)
            return refuted(Method::chordal, block_refutation(Refutation::Kind::forbidden_block, id, b));
    }
    if (auto start = diamond_sharing_component(bd)) {
        if (auto chain = chain_from(bd, *start)) {
            Refutation r;
            r.kind = Refutation::Kind::chain_witness;
            r.blocks = *chain;
            for (std::size_t c : *chain)
                r.vertices.insert(r.vertices.end(), bd.blocks[c].vertices.begin(), bd.blocks[c].vertices.end());
            std::sort(r.vertices.begin(), r.vertices.end());
            r.vertices.erase(std::unique(r.vertices.begin(), r.vertices.end()), r.vertices.end());
            return refuted(Method::chordal, std::move(r));
        }
    }

    // Each bridge-free component is rooted at its diamond, or at its first
    // triangle; every other triangle takes the edge opposite the vertex it
    // was reached through.
    std::vector<Edge> witness;
    std::vector<char> done(bd.blocks.size(), 0);
    auto grow = [&](std::size_t root) {
        const Block& rb = bd.blocks[root];
        if (rb.kind == BlockKind::diamond) {
            auto pair = diamond_pair(rb);
            witness.insert(witness.end(), pair.begin(), pair.end());
        } else {
            witness.emplace_back(rb.vertices[0], rb.vertices[1]);
        }
        done[root] = 1;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            std::size_t b = queue.front();
            queue.pop_front();
            for (Vertex x : bd.blocks[b].vertices)
                for (std::size_t c : bd.blocks_of_vertex[x]) {
                    if (done[c] || !is_nonbridge(bd.blocks[c])) continue;
                    done[c] = 1;
                    Vertex rest[2], k = 0;
                    for (Vertex y : bd.blocks[c].vertices)
                        if (y != x) rest[k++] = y;
                    witness.emplace_back(rest[0], rest[1]);
                    queue.push_back(c);
                }
        }
    };
    for (std::size_t id = 0; id < bd.blocks.size(); ++id)
        if (bd.blocks[id].kind == BlockKind::diamond && !done[id]) grow(id);
    for (std::size_t id = 0; id < bd.blocks.size(); ++id)
        if (bd.blocks[id].kind == BlockKind::triangle && !done[id]) grow(id);
    return accepted(g, Method::chordal, std::move(witness));
}

std::size_t witness_size_chordal(const Graph& g) {
    if (!decide_chordal(g).decyclable())
        throw PreconditionError("witness_size_chordal: graph is not matching-decyclable");
    std::size_t total = 0;
    for (const Block& b : block_decomposition(g).blocks) {
        if (b.kind == BlockKind::diamond) total += 2;
        if (b.kind == BlockKind::triangle) total += 1;
    }
    return total;
}

// --- split ------------------------------------------------------------------------

SplitShape match_split_shape(const Graph& g) {
    const Vertex n = g.vertex_count();
    if (n <= 2) return is_connected(g) ? SplitShape::star : SplitShape::none;
    std::vector<Vertex> core;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 0) return SplitShape::none;
        if (g.degree(v) >= 2) core.push_back(v);
    }
    // Every non-core vertex is a pendant; its neighbor must be in the core.
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) < 2) return SplitShape::none;
    if (core.size() <= 1) return SplitShape::star;
    std::vector<Vertex> original;
    Graph h = induced_subgraph(g, core, &original);
    if (core.size() == 2) return h.edge_count() == 1 ? SplitShape::double_star : SplitShape::none;
    if (core.size() == 3) return is_isomorphic(patterns::triangle(), h) ? SplitShape::triangle_with_pendants
                                                                        : SplitShape::none;
    if (core.size() == 4) {
        auto image = find_isomorphism(patterns::diamond(), h);
        if (!image) return SplitShape::none;
        Vertex b = original[(*image)[1]], d = original[(*image)[3]];
        bool pendant_b = g.degree(b) > 2, pendant_d = g.degree(d) > 2;
        return pendant_b && pendant_d ? SplitShape::none : SplitShape::diamond_with_pendants;
    }
    return SplitShape::none;
}

Verdict decide_split(const Graph& g) {
    if (!is_connected(g) || !is_split(g).split)
        throw PreconditionError("decide_split: graph is not a connected split graph");
    const SplitShape shape = match_split_shape(g);
    Verdict v = decide_chordal(g);
    if ((shape != SplitShape::none) != v.decyclable())
        throw std::logic_error("decide_split: shape match disagrees with the chordal decision");
    v.method = Method::split;
    return v;
}

// --- distance-hereditary ----------------------------------------------------------

Verdict decide_dh(const Graph& g, const LeafSelector& select) {
    // A graph is distance-hereditary when all its blocks are, and every named
    // block kind is; the full recognizer only runs when some block is not.
    const BlockDecomposition bd = block_decomposition(g);
    const std::size_t nb = bd.blocks.size();
    const bool all_named =
        std::none_of(bd.blocks.begin(), bd.blocks.end(), [](const Block& b) { return b.kind == BlockKind::other; });
    if (!all_named && !is_distance_hereditary(g).distance_hereditary)
        throw PreconditionError("decide_dh: graph is not distance-hereditary");
    if (auto r = density_refutation(g, Method::dh)) return *r;

    for (std::size_t id = 0; id < nb; ++id) {
        const Block& b = bd.blocks[id];
        if (b.kind == BlockKind::k24)
            return refuted(Method::dh, block_refutation(Refutation::Kind::k24_block, id, b));
        if (b.kind == BlockKind::other)
            return refuted(Method::dh, block_refutation(Refutation::Kind::forbidden_block, id, b));
    }

    // Bridges carry no decycling edges; only the other blocks take part.
    const Vertex n = g.vertex_count();
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (const Block& b : bd.blocks)
        if (is_nonbridge(b))
            for (Vertex v : b.vertices) ++count[v];
    std::vector<int> active(nb, 0);
    std::set<std::size_t> ready;
    for (std::size_t id = 0; id < nb; ++id) {
        if (!is_nonbridge(bd.blocks[id])) continue;
        for (Vertex v : bd.blocks[id].vertices)
            if (count[v] >= 2) ++active[id];
        if (active[id] <= 1) ready.insert(id);
    }

    std::vector<char> removed(nb, 0), covered(static_cast<std::size_t>(n), 0);
    std::vector<Edge> witness;
    std::vector<std::size_t> ready_list;
    while (!ready.empty()) {
        std::size_t id;
        if (select) {
            ready_list.assign(ready.begin(), ready.end());
            std::size_t pick = select(ready_list);
            if (pick >= ready_list.size()) throw std::out_of_range("decide_dh: leaf selector out of range");
            id = ready_list[pick];
        } else {
            id = *ready.begin();
        }
        ready.erase(id);
        const Block& b = bd.blocks[id];
        Vertex x = -1;
        for (Vertex v : b.vertices)
            if (count[v] >= 2) x = v;

        // Decycling sets of the allowed blocks have at most three edges.
        using Set = std::array<Edge, 3>;
        std::optional<Set> best;
        std::size_t size = 0;
        bool best_avoids = false;
        for (const auto& pattern_set : block_decycling_sets(b.kind)) {
            Set set{};
            bool usable = true, avoids = true;
            for (std::size_t i = 0; i < pattern_set.size(); ++i) {
                Vertex a = b.pattern_image[pattern_set[i].u], c = b.pattern_image[pattern_set[i].v];
                if (covered[a] || covered[c]) usable = false;
                if (a == x || c == x) avoids = false;
                set[i] = Edge(a, c);
            }
            if (!usable) continue;
            size = pattern_set.size();
            std::sort(set.begin(), set.begin() + static_cast<std::ptrdiff_t>(size));
            if (!best || (avoids && !best_avoids) || (avoids == best_avoids && set < *best)) {
                best = set;
                best_avoids = avoids;
            }
        }
        if (!best) {
            Refutation r = block_refutation(Refutation::Kind::stuck_leaf_block, id, b);
            r.vertices = {x};
            return refuted(Method::dh, std::move(r));
        }
        for (std::size_t i = 0; i < size; ++i) {
            const Edge& e = (*best)[i];
            covered[e.u] = covered[e.v] = 1;
            witness.push_back(e);
        }
        removed[id] = 1;
        if (x >= 0 && --count[x] == 1) {
            for (std::size_t c : bd.blocks_of_vertex[x]) {
                if (removed[c] || !is_nonbridge(bd.blocks[c])) continue;
                if (--active[c] <= 1) ready.insert(c);
            }
        }
    }
    return accepted(g, Method::dh, std::move(witness));
}

std::optional<MdStarShape> match_md_star(const Graph& g) {
    const BlockDecomposition bd = block_decomposition(g);
    if (bd.cut_vertices.size() != 1 || !is_connected(g)) return std::nullopt;
    MdStarShape shape;
    shape.cut_vertex = bd.cut_vertices[0];
    for (std::size_t id = 0; id < bd.blocks.size(); ++id) {
        const Block& b = bd.blocks[id];
        switch (b.kind) {
            case BlockKind::bridge:
            case BlockKind::triangle:
                shape.pendant_blocks.push_back(id);
                break;
            case BlockKind::diamond:
                if (shape.diamond_block) return std::nullopt;
                // The cut vertex must be an end of the chord.
                if (b.pattern_image[0] != shape.cut_vertex && b.pattern_image[2] != shape.cut_vertex)
                    return std::nullopt;
                shape.diamond_block = id;
                break;
            default:
                return std::nullopt;
        }
    }
    return shape;
}

Verdict decide_cograph(const Graph& g) {
    if (!is_connected(g) || !is_cograph(g).cograph)
        throw PreconditionError("decide_cograph: graph is not a connected cograph");
    bool shape = g.vertex_count() <= 1 || match_md_star(g).has_value();
    for (const Graph& p : {patterns::complete(2), patterns::triangle(), patterns::square(), patterns::diamond(),
                           patterns::k23()})
        shape = shape || is_isomorphic(p, g);
    Verdict v = decide_dh(g);
    if (shape != v.decyclable())
        throw std::logic_error("decide_cograph: shape match disagrees with the distance-hereditary decision");
    v.method = Method::cograph;
    return v;
}

// --- fairly cubic -------------------------------------------------------------------

Verdict decide_fairly_cubic(const Graph& g, std::uint64_t budget) {
    const DegreeProfile p = degree_profile(g);
    if (!p.is_fairly_cubic || !is_connected(g))
        throw PreconditionError("decide_fairly_cubic: graph is not a connected fairly cubic graph");
    const Vertex s = p.degree2_vertices[0], t = p.degree2_vertices[1];
    HamiltonSearch h = find_hamiltonian_path(g, s, t, budget);
    if (h.status == HamiltonSearch::Status::found) {
        std::vector<Edge> on = path_edges(h.path);
        std::sort(on.begin(), on.end());
        std::vector<Edge> rest;
        std::set_difference(g.edges().begin(), g.edges().end(), on.begin(), on.end(), std::back_inserter(rest));
        Verdict v = accepted(g, Method::fairly_cubic, std::move(rest));
        v.search_nodes = h.nodes;
        return v;
    }
    Refutation r;
    r.vertices = {s, t};
    Verdict v;
    v.method = Method::fairly_cubic;
    v.search_nodes = h.nodes;
    if (h.status == HamiltonSearch::Status::budget_exhausted) {
        r.kind = Refutation::Kind::budget_exhausted;
        v.decision = Decision::unknown;
    } else {
        r.kind = Refutation::Kind::no_hamiltonian_path;
        v.decision = Decision::not_decyclable;
    }
    v.refutation = std::move(r);
    return v;
}

bool check_spanning_tree_characterization(const Graph& g, std::span<const Edge> tree) {
    const Vertex n = g.vertex_count();
    if (!is_connected(g) || !degree_profile(g).is_subcubic)
        throw PreconditionError("spanning tree check needs a connected subcubic graph");
    if (tree.size() + 1 != static_cast<std::size_t>(n) && n > 0)
        throw PreconditionError("not a spanning tree: wrong edge count");
    std::vector<Edge> sorted(tree.begin(), tree.end());
    for (auto& e : sorted) {
        e = Edge(e.u, e.v);
        if (!g.has_edge(e.u, e.v)) throw PreconditionError("not a spanning tree: edge " + to_string(e) + " missing");
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("not a spanning tree: repeated edge");
    Graph t = Graph::build(n, sorted);
    if (!is_connected(t)) throw PreconditionError("not a spanning tree: disconnected");

    for (Vertex v = 0; v < n; ++v)
        if (t.degree(v) == 1 && g.degree(v) > 2) return false;
    std::vector<Edge> rest;
    std::set_difference(g.edges().begin(), g.edges().end(), sorted.begin(), sorted.end(), std::back_inserter(rest));
    if (!validate_matching(g, Matching(rest)))
        throw std::logic_error("spanning tree complement is not a decycling matching");
    return true;
}

// --- dispatch ---------------------------------------------------------------------

Verdict decide_with(const Graph& g, Method method, const DecideOptions& options) {
    switch (method) {
        case Method::chordal: return decide_chordal(g);
        case Method::split: return decide_split(g);
        case Method::dh: return decide_dh(g);
        case Method::cograph: return decide_cograph(g);
        case Method::fairly_cubic: return decide_fairly_cubic(g, options.budget);
        case Method::oracle: return oracle_decide(g, options.max_oracle_n);
    }
    throw std::invalid_argument("unknown method");
}

Verdict decide_auto(const Graph& g, const DecideOptions& options) {
    if (is_chordal(g).chordal) return decide_chordal(g);
    if (is_distance_hereditary(g).distance_hereditary) return decide_dh(g);
    const DegreeProfile p = degree_profile(g);
    if (p.is_fairly_cubic && is_connected(g)) return decide_fairly_cubic(g, options.budget);
    return oracle_decide(g, options.max_oracle_n);
}

}  // namespace mdec
