#include <doctest.h>

#include <algorithm>

#include "mdec/blocks.hpp"
#include "mdec/generators.hpp"
#include "mdec/patterns.hpp"
#include "mdec/recognizers.hpp"
#include "mdec/sparse.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace mdec;
namespace pat = mdec::patterns;

namespace {

bool is_bad_set(const Graph& g, const std::vector<Vertex>& vs) {
    std::uint32_t mask = 0;
    for (Vertex v : vs) mask |= 1u << v;
    return oracle::induced_edges(g, mask) > sparse_edge_bound(static_cast<std::int64_t>(vs.size()));
}

}  // namespace

TEST_CASE("density bound") {
    CHECK(sparse_edge_bound(6) == 8);
    CHECK(density_ok(Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 4}})));
    CHECK_FALSE(density_ok(pat::complete(4)));
    CHECK(density_ok(pat::k33minus()));
}

TEST_CASE("find_bad_subgraph examples") {
    auto gem = find_bad_subgraph(pat::gem());
    REQUIRE(gem.has_value());
    CHECK(*gem == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK_FALSE(find_bad_subgraph(pat::square()).has_value());
    for (std::size_t k = 0; k <= 3; ++k) {
        Graph c = gen::chain(k);
        CHECK(c.vertex_count() == static_cast<Vertex>(2 * k + 7));
        CHECK(c.edge_count() == 3 * k + 10);
        auto bad = find_bad_subgraph(c);
        REQUIRE(bad.has_value());
        CHECK(bad->size() == 2 * k + 7);
    }
    CHECK_THROWS_AS(find_bad_subgraph(pat::cycle(17)), SizeLimitError);
    CHECK_NOTHROW(find_bad_subgraph(pat::cycle(17), 17));
}

TEST_CASE("find_bad_subgraph agrees with subset enumeration") {
    for (Vertex n = 1; n <= 7; ++n)
        for (const Graph& g : testsupport::all_graphs(n)) {
            auto bad = find_bad_subgraph(g);
            CHECK(bad.has_value() == !oracle::sparse(g));
            if (bad) CHECK(is_bad_set(g, *bad));
        }
}

TEST_CASE("sparse implies density; the converse fails") {
    for (Vertex n = 1; n <= 7; ++n)
        for (const Graph& g : testsupport::all_graphs(n))
            if (!find_bad_subgraph(g)) CHECK(density_ok(g));
    // K4 with a 6-vertex tail: 12 edges on 10 vertices, within the bound.
    Graph padded = Graph::build(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                     {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}});
    CHECK(density_ok(padded));
    CHECK(find_bad_subgraph(padded).has_value());
}

TEST_CASE("sparseness is closed under subgraphs") {
    gen::Rng rng(31);
    for (int i = 0; i < 300; ++i) {
        Graph g = gen::random_decyclable_dh(10, rng).graph;
        if (g.vertex_count() > 16) continue;
        REQUIRE_FALSE(find_bad_subgraph(g).has_value());
        std::vector<Edge> keep;
        std::bernoulli_distribution coin(0.6);
        for (const auto& e : g.edges())
            if (coin(rng)) keep.push_back(e);
        CHECK_FALSE(find_bad_subgraph(Graph::build(g.vertex_count(), keep)).has_value());
    }
}

TEST_CASE("is_sparse_chordal") {
    CHECK(is_sparse_chordal(pat::diamond()));
    CHECK_FALSE(is_sparse_chordal(gen::chain(0)));
    CHECK_FALSE(is_sparse_chordal(gen::chain(2)));
    CHECK_THROWS_AS(is_sparse_chordal(pat::square()), PreconditionError);
    for (Vertex n = 1; n <= 8; ++n)
        for (const Graph& g : testsupport::all_graphs(n))
            if (is_chordal(g).chordal) CHECK(is_sparse_chordal(g) == !find_bad_subgraph(g).has_value());
}

TEST_CASE("is_sparse_2conn_dh") {
    CHECK(is_sparse_2conn_dh(pat::k24()));
    CHECK(is_sparse_2conn_dh(pat::k33minus()));
    CHECK_THROWS_AS(is_sparse_2conn_dh(pat::domino()), PreconditionError);
    CHECK_THROWS_AS(is_sparse_2conn_dh(pat::path(3)), PreconditionError);
    std::size_t checked = 0;
    for (Vertex n = 3; n <= 7; ++n)
        for (const Graph& g : testsupport::all_graphs(n)) {
            if (!oracle::biconnected(g) || !oracle::distance_hereditary(g)) continue;
            CHECK(is_biconnected(g));
            CHECK(is_sparse_2conn_dh(g) == oracle::sparse(g));
            ++checked;
        }
    CHECK(checked > 50);
}

TEST_CASE("sparse graphs have two vertices of degree at most two") {
    for (Vertex n = 2; n <= 7; ++n)
        for (const Graph& g : testsupport::all_graphs(n)) {
            if (find_bad_subgraph(g)) continue;
            int low = 0;
            for (Vertex v = 0; v < n; ++v) low += g.degree(v) <= 2;
            CHECK(low >= 2);
        }
}
