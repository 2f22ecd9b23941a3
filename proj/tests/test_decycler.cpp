#include <doctest.h>

#include <algorithm>
#include <set>

#include "mdec/blocks.hpp"
#include "mdec/decycler.hpp"
#include "mdec/generators.hpp"
#include "mdec/patterns.hpp"
#include "mdec/reduction.hpp"
#include "mdec/recognizers.hpp"
#include "mdec/sparse.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace mdec;
namespace pat = mdec::patterns;

namespace {

void check_verdict_shape(const Graph& g, const Verdict& v) {
    if (v.decyclable()) {
        REQUIRE(v.witness.has_value());
        CHECK(validate_matching(g, *v.witness));
        CHECK(v.witness->size() >= min_decycling_edge_count(g));
        CHECK_FALSE(v.refutation.has_value());
    } else if (v.decision == Decision::not_decyclable) {
        REQUIRE(v.refutation.has_value());
        CHECK_FALSE(v.witness.has_value());
        if (v.refutation->kind == Refutation::Kind::bad_subgraph ||
            v.refutation->kind == Refutation::Kind::chain_witness) {
            const auto& vs = v.refutation->vertices;
            std::set<Vertex> in(vs.begin(), vs.end());
            std::size_t m = std::count_if(g.edges().begin(), g.edges().end(),
                                          [&](const Edge& e) { return in.count(e.u) && in.count(e.v); });
            CHECK(static_cast<std::int64_t>(m) > sparse_edge_bound(static_cast<std::int64_t>(vs.size())));
        }
    }
}

// Blocks of the given kinds glued at random vertices with no regard for
// decyclability.
Graph random_glued(Vertex n, std::span<const BlockKind> kinds, gen::Rng& rng) {
    std::vector<Edge> edges;
    Vertex size = 1;
    std::uniform_int_distribution<std::size_t> pick_kind(0, kinds.size() - 1);
    while (size < n) {
        const Graph& p = block_pattern(kinds[pick_kind(rng)]);
        std::uniform_int_distribution<Vertex> at(0, size - 1), pos(0, p.vertex_count() - 1);
        Vertex x = at(rng), anchor = pos(rng);
        std::vector<Vertex> image(static_cast<std::size_t>(p.vertex_count()));
        for (Vertex v = 0; v < p.vertex_count(); ++v) image[v] = v == anchor ? x : size++;
        for (const auto& e : p.edges()) edges.emplace_back(image[e.u], image[e.v]);
    }
    return Graph::build(size, edges);
}

// Two cubic blocks joined by a bridge, with one edge removed inside the
// first: both degree-2 vertices end up on the same side.
Graph lopsided_fairly_cubic() {
    // side A: p q r s x, K4 on pqrs minus pq, x joined to p and q; side B likewise.
    std::vector<Edge> edges;
    for (Vertex base : {0, 5}) {
        Vertex p = base, q = base + 1, r = base + 2, s = base + 3, x = base + 4;
        edges.insert(edges.end(), {Edge(p, r), Edge(p, s), Edge(q, r), Edge(q, s), Edge(x, p), Edge(x, q)});
        if (base == 5) edges.emplace_back(r, s);
    }
    edges.emplace_back(4, 9);
    return Graph::build(10, edges);
}

}  // namespace

TEST_CASE("min_decycling_edge_count") {
    gen::Rng rng(2);
    CHECK(min_decycling_edge_count(gen::random_tree(20, rng)) == 0);
    CHECK(min_decycling_edge_count(pat::k24()) == 3);
    CHECK(min_decycling_edge_count(pat::diamond()) == 2);
    CHECK(min_decycling_edge_count(Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})) == 2);
}

TEST_CASE("block decycling sets") {
    const BlockKind kinds[] = {BlockKind::bridge, BlockKind::triangle, BlockKind::square,
                               BlockKind::diamond, BlockKind::k23, BlockKind::k24, BlockKind::k33minus};
    for (BlockKind k : kinds) {
        const Graph& p = block_pattern(k);
        std::set<std::vector<Edge>> expected;
        for (auto m : oracle::decycling_matchings(p))
            if (m.size() == min_decycling_edge_count(p)) {
                std::sort(m.begin(), m.end());
                expected.insert(m);
            }
        std::set<std::vector<Edge>> got;
        for (auto m : block_decycling_sets(k)) {
            std::sort(m.begin(), m.end());
            got.insert(m);
        }
        CHECK(got == expected);
    }
    CHECK(block_decycling_sets(BlockKind::k24).empty());
    CHECK(block_decycling_sets(BlockKind::other).empty());
}

TEST_CASE("oracle examples") {
    auto k24 = oracle_decide(pat::k24());
    CHECK(k24.decision == Decision::not_decyclable);
    REQUIRE(k24.refutation.has_value());
    CHECK(k24.refutation->kind == Refutation::Kind::exhausted);
    CHECK(oracle_decide(pat::k33minus()).decyclable());
    CHECK_THROWS_AS(oracle_decide(pat::cycle(25)), SizeLimitError);
    CHECK(oracle_decide(pat::cycle(25), 25).decyclable());
}

TEST_CASE("oracle agrees with matching enumeration and returns the least witness") {
    for (Vertex n = 1; n <= 7; ++n) {
        CAPTURE(n);
        for (const Graph& g : testsupport::all_graphs(n)) {
            Verdict v = oracle_decide(g);
            auto all = oracle::decycling_matchings(g);
            CHECK(v.decyclable() == !all.empty());
            check_verdict_shape(g, v);
            if (!v.decyclable()) continue;
            std::vector<std::vector<Edge>> least;
            for (auto m : all)
                if (m.size() == min_decycling_edge_count(g)) {
                    std::sort(m.begin(), m.end());
                    least.push_back(m);
                }
            REQUIRE_FALSE(least.empty());
            CHECK(v.witness->edges() == *std::min_element(least.begin(), least.end()));
        }
    }
}

TEST_CASE("oracle is deterministic") {
    gen::Rng rng(4);
    for (int i = 0; i < 30; ++i) {
        Graph g = gen::random_subcubic(16, rng);
        auto a = oracle_decide(g), b = oracle_decide(g);
        CHECK(a.decision == b.decision);
        CHECK(a.witness == b.witness);
    }
}

static Graph with_pendant(const Graph& g) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    edges.emplace_back(0, g.vertex_count());
    return Graph::build(g.vertex_count() + 1, edges);
}

TEST_CASE("decide_chordal examples") {
    Graph d3 = Graph::build(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {0, 6}});
    auto v = decide_chordal(d3);
    CHECK(v.decyclable());
    CHECK(v.witness->size() == 2);
    CHECK(oracle::decyclable(d3));

    // A bare chain already fails the density bound; one pendant vertex
    // lifts the bound so the chain itself has to be found.
    auto bare = decide_chordal(gen::chain(0));
    CHECK(bare.refutation->kind == Refutation::Kind::bad_subgraph);
    Graph padded = with_pendant(gen::chain(0));
    CHECK(density_ok(padded));
    auto c = decide_chordal(padded);
    CHECK(c.decision == Decision::not_decyclable);
    REQUIRE(c.refutation.has_value());
    CHECK(c.refutation->kind == Refutation::Kind::chain_witness);
    CHECK(c.refutation->vertices.size() == 7);
    check_verdict_shape(padded, c);

    auto k4 = decide_chordal(pat::complete(4));
    CHECK(k4.refutation->kind == Refutation::Kind::bad_subgraph);

    CHECK_THROWS_AS(decide_chordal(pat::square()), PreconditionError);
    gen::Rng rng(8);
    auto tree = decide_chordal(gen::random_tree(30, rng));
    CHECK(tree.decyclable());
    CHECK(tree.witness->empty());
}

TEST_CASE("decide_chordal against the oracle on glued blocks") {
    static constexpr BlockKind kinds[] = {BlockKind::bridge, BlockKind::triangle, BlockKind::triangle,
                                          BlockKind::diamond};
    gen::Rng rng(12);
    int positive = 0, negative = 0;
    for (int i = 0; i < 500; ++i) {
        Graph g = random_glued(static_cast<Vertex>(6 + i % 14), kinds, rng);
        if (g.vertex_count() > 20) continue;
        Verdict v = decide_chordal(g);
        CHECK(v.decyclable() == oracle_decide(g).decyclable());
        check_verdict_shape(g, v);
        (v.decyclable() ? positive : negative)++;
    }
    CHECK(positive > 50);
    CHECK(negative > 50);
}

TEST_CASE("witness_size_chordal") {
    CHECK(witness_size_chordal(pat::triangle()) == 1);
    Graph dt = Graph::build(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {1, 4}, {1, 5}, {4, 5}, {3, 6}, {3, 7}, {6, 7}});
    CHECK(witness_size_chordal(dt) == 4);
    CHECK(decide_chordal(dt).witness->size() == 4);
    gen::Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        auto inst = gen::random_decyclable_chordal(60, rng);
        auto v = decide_chordal(inst.graph);
        REQUIRE(v.decyclable());
        CHECK(v.witness->size() == witness_size_chordal(inst.graph));
        CHECK(v.witness->size() == 2 * inst.diamonds + inst.triangles);
    }
    CHECK_THROWS_AS(witness_size_chordal(gen::chain(1)), PreconditionError);
}

TEST_CASE("decide_split") {
    Graph ds = Graph::build(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    auto v = decide_split(ds);
    CHECK(v.decyclable());
    CHECK(v.witness->empty());
    CHECK(match_split_shape(ds) == SplitShape::double_star);

    Graph tp = Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
    auto t = decide_split(tp);
    CHECK(t.decyclable());
    CHECK(t.witness->size() == 1);
    CHECK(match_split_shape(tp) == SplitShape::triangle_with_pendants);

    CHECK_THROWS_AS(decide_split(pat::square()), PreconditionError);

    std::size_t checked = 0;
    for (Vertex n = 1; n <= 7; ++n)
        for (const Graph& g : testsupport::connected_graphs(n)) {
            if (!oracle::split(g)) continue;
            auto s = decide_split(g);
            CHECK(s.decyclable() == oracle::decyclable(g));
            CHECK((match_split_shape(g) != SplitShape::none) == s.decyclable());
            check_verdict_shape(g, s);
            ++checked;
        }
    CHECK(checked > 100);
}

TEST_CASE("decide_dh examples") {
    CHECK(decide_dh(pat::k33minus()).decyclable());
    Graph k24p = Graph::build(7, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {5, 6}});
    auto v = decide_dh(k24p);
    CHECK(v.decision == Decision::not_decyclable);
    REQUIRE(v.refutation.has_value());
    CHECK(v.refutation->kind == Refutation::Kind::k24_block);
    CHECK(v.refutation->block_kind == BlockKind::k24);
    // Sparse and within the density bound, yet not decyclable.
    CHECK_FALSE(find_bad_subgraph(k24p).has_value());
    CHECK(density_ok(k24p));
    CHECK_THROWS_AS(decide_dh(pat::house()), PreconditionError);
}

TEST_CASE("decide_dh agrees with the oracle on connected graphs up to 8") {
    std::size_t checked = 0;
    for (Vertex n = 1; n <= 8; ++n)
        for (const Graph& g : testsupport::connected_graphs(n)) {
            if (!is_distance_hereditary(g).distance_hereditary) continue;
            Verdict v = decide_dh(g);
            CHECK(v.decyclable() == oracle_decide(g).decyclable());
            check_verdict_shape(g, v);
            ++checked;
        }
    CHECK(checked > 1000);
}

TEST_CASE("decide_dh decision does not depend on leaf order") {
    static constexpr BlockKind kinds[] = {BlockKind::bridge, BlockKind::triangle, BlockKind::square,
                                          BlockKind::diamond, BlockKind::k23, BlockKind::k33minus};
    gen::Rng rng(19);
    for (int i = 0; i < 150; ++i) {
        Graph g = random_glued(static_cast<Vertex>(5 + i % 6), kinds, rng);
        if (g.vertex_count() > 10) continue;
        const bool expected = oracle_decide(g).decyclable();
        // Every order, by an odometer over the selector's choices.
        std::vector<std::size_t> script;
        std::size_t orders = 0;
        for (;;) {
            std::vector<std::size_t> sizes;
            LeafSelector sel = [&](std::span<const std::size_t> ready) {
                std::size_t k = sizes.size();
                sizes.push_back(ready.size());
                return k < script.size() ? script[k] : std::size_t{0};
            };
            Verdict v = decide_dh(g, sel);
            CHECK(v.decyclable() == expected);
            ++orders;
            std::vector<std::size_t> chosen(sizes.size());
            for (std::size_t k = 0; k < sizes.size(); ++k) chosen[k] = k < script.size() ? script[k] : 0;
            std::ptrdiff_t k = static_cast<std::ptrdiff_t>(sizes.size()) - 1;
            while (k >= 0 && chosen[k] + 1 >= sizes[k]) --k;
            if (k < 0 || orders > 2000) break;
            script.assign(chosen.begin(), chosen.begin() + k + 1);
            ++script[k];
        }
        CHECK(orders >= 1);
    }
}

TEST_CASE("decide_cograph") {
    CHECK(decide_cograph(pat::k23()).decyclable());
    // Cut vertex 0: a diamond where 0 has degree 3, two triangles and a bridge.
    Graph md = Graph::build(9, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {4, 5},
                                {0, 6}, {0, 7}, {6, 7}, {0, 8}});
    REQUIRE(is_cograph(md).cograph);
    auto v = decide_cograph(md);
    CHECK(v.decyclable());
    auto shape = match_md_star(md);
    REQUIRE(shape.has_value());
    CHECK(shape->cut_vertex == 0);
    CHECK(shape->diamond_block.has_value());
    CHECK(shape->pendant_blocks.size() == 3);
    CHECK_THROWS_AS(decide_cograph(pat::path(4)), PreconditionError);

    std::size_t checked = 0;
    for (Vertex n = 1; n <= 7; ++n)
        for (const Graph& g : testsupport::connected_graphs(n)) {
            if (!oracle::cograph(g)) continue;
            Verdict c = decide_cograph(g);
            CHECK(c.decyclable() == oracle::decyclable(g));
            check_verdict_shape(g, c);
            ++checked;
        }
    CHECK(checked > 100);
}

TEST_CASE("decide_fairly_cubic") {
    Graph lop = lopsided_fairly_cubic();
    REQUIRE(degree_profile(lop).is_fairly_cubic);
    auto v = decide_fairly_cubic(lop);
    CHECK(v.decision == Decision::not_decyclable);
    CHECK(v.refutation->kind == Refutation::Kind::no_hamiltonian_path);
    CHECK_FALSE(oracle_decide(lop).decyclable());

    // Hexagon 0..5 with chords 0-3 and 1-4: 2 and 5 keep degree two.
    Graph hex = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 4}});
    REQUIRE(degree_profile(hex).is_fairly_cubic);
    CHECK(decide_fairly_cubic(hex).decyclable() == oracle_decide(hex).decyclable());

    CHECK_THROWS_AS(decide_fairly_cubic(pat::complete(4)), PreconditionError);

    gen::Rng rng(21);
    int pos = 0, neg = 0;
    for (int i = 0; i < 300; ++i) {
        Vertex n = static_cast<Vertex>(6 + 2 * (i % 5));
        Graph g = gen::random_fairly_cubic(n, rng);
        Verdict f = decide_fairly_cubic(g);
        CHECK(f.decyclable() == oracle_decide(g).decyclable());
        check_verdict_shape(g, f);
        (f.decyclable() ? pos : neg)++;
    }
    CHECK(pos > 0);
    for (Vertex n = 4; n <= 8; ++n)
        for (const Graph& g : testsupport::connected_graphs(n)) {
            if (!degree_profile(g).is_fairly_cubic) continue;
            CHECK(decide_fairly_cubic(g).decyclable() == oracle::decyclable(g));
        }
}

TEST_CASE("fairly cubic with adjacent degree-2 vertices: decyclable iff Hamiltonian") {
    gen::Rng rng(22);
    for (int i = 0; i < 200; ++i) {
        Vertex n = static_cast<Vertex>(4 + 2 * (i % 5));
        Graph c = gen::random_cubic(n, rng);
        // Subdivide one edge twice.
        Edge e = c.edge(static_cast<std::size_t>(i) % c.edge_count());
        std::vector<Edge> edges;
        for (const auto& f : c.edges())
            if (f != e) edges.push_back(f);
        edges.insert(edges.end(), {Edge(e.u, n), Edge(n, n + 1), Edge(n + 1, e.v)});
        Graph g = Graph::build(n + 2, edges);
        REQUIRE(degree_profile(g).is_fairly_cubic);
        if (!oracle::biconnected(g)) continue;
        CHECK(decide_fairly_cubic(g).decyclable() == oracle::hamiltonian_cycle(g));
    }
}

TEST_CASE("budget exhaustion is reported as unknown") {
    ReductionResult r = build_reduction(pat::complete(4), Edge(0, 1));
    auto v = decide_fairly_cubic(r.g, 1000);
    CHECK(v.decision == Decision::unknown);
    REQUIRE(v.refutation.has_value());
    CHECK(v.refutation->kind == Refutation::Kind::budget_exhausted);
    CHECK_FALSE(v.witness.has_value());
    CHECK(decide_fairly_cubic(r.g).decyclable());
}

TEST_CASE("spanning tree characterization") {
    Graph p = pat::path(5);
    CHECK(check_spanning_tree_characterization(p, p.edges()));
    Graph k4 = pat::complete(4);
    std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
    CHECK_FALSE(check_spanning_tree_characterization(k4, star));
    std::vector<Edge> notree{{0, 1}, {1, 2}, {0, 2}};
    CHECK_THROWS_AS(check_spanning_tree_characterization(k4, notree), PreconditionError);

    gen::Rng rng(25);
    for (int i = 0; i < 200; ++i) {
        Graph g = gen::random_subcubic(static_cast<Vertex>(4 + i % 9), rng);
        std::vector<Edge> tree;
        bool exists = oracle::leafy_spanning_tree(g, &tree);
        CHECK(exists == oracle_decide(g).decyclable());
        if (exists) CHECK(check_spanning_tree_characterization(g, tree));
    }
}

TEST_CASE("trees are decyclable with the empty matching under every decider") {
    gen::Rng rng(27);
    for (int i = 0; i < 20; ++i) {
        Graph t = gen::random_tree(12, rng);
        for (Method m : {Method::chordal, Method::dh, Method::oracle}) {
            auto v = decide_with(t, m);
            CHECK(v.decyclable());
            CHECK(v.witness->empty());
        }
    }
    CHECK(decide_split(pat::star(4)).witness->empty());
    CHECK(decide_cograph(pat::star(4)).witness->empty());
}

TEST_CASE("decide_auto picks the first applicable method") {
    CHECK(decide_auto(pat::diamond()).method == Method::chordal);
    CHECK(decide_auto(pat::k24()).method == Method::dh);
    Graph hex = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 4}});
    auto h = decide_auto(hex);
    CHECK((h.method == Method::dh || h.method == Method::fairly_cubic));
    Graph lop = lopsided_fairly_cubic();
    CHECK(decide_auto(lop).method ==
          (is_distance_hereditary(lop).distance_hereditary ? Method::dh : Method::fairly_cubic));
    CHECK_FALSE(decide_auto(lop).decyclable());
    CHECK(decide_auto(pat::cycle(5)).method == Method::oracle);
    CHECK(parse_method("fairly-cubic") == Method::fairly_cubic);
    CHECK(parse_method("auto") == std::nullopt);
}

TEST_CASE("connected decyclable graphs keep a spanning tree") {
    for (Vertex n = 1; n <= 7; ++n)
        for (const Graph& g : testsupport::connected_graphs(n)) {
            auto v = oracle_decide(g);
            if (!v.decyclable()) continue;
            CHECK(v.witness->size() == g.edge_count() - static_cast<std::size_t>(n) + 1);
            Graph rest = remove_edges(g, v.witness->edges());
            CHECK(is_connected(rest));
            CHECK(is_acyclic(rest));
        }
}

TEST_CASE("2-connected DH without a K2,4 block: decyclable iff sparse") {
    for (Vertex n = 3; n <= 8; ++n)
        for (const Graph& g : testsupport::connected_graphs(n)) {
            if (!is_biconnected(g) || !is_distance_hereditary(g).distance_hereditary) continue;
            if (oracle::isomorphic(g, pat::k24())) continue;
            CHECK(oracle_decide(g).decyclable() == !find_bad_subgraph(g).has_value());
        }
}
