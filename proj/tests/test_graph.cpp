#include <doctest.h>

#include <algorithm>

#include "mdec/decycler.hpp"
#include "mdec/graph.hpp"
#include "mdec/matching.hpp"
#include "mdec/patterns.hpp"
#include "mdec/reduction.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace mdec;
namespace pat = mdec::patterns;

TEST_CASE("build_graph") {
    Graph t = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 3);
    for (Vertex v = 0; v < 3; ++v) CHECK(t.degree(v) == 2);
    CHECK(t.has_edge(2, 0));
    CHECK_FALSE(t.has_edge(1, 1));

    SUBCASE("self-loop") {
        try {
            Graph::build(2, {{0, 0}});
            FAIL("expected GraphError");
        } catch (const GraphError& e) {
            CHECK(e.kind() == GraphError::Kind::self_loop);
            CHECK(e.first() == 0);
            CHECK(e.second() == 0);
        }
    }
    SUBCASE("duplicate in either orientation") {
        try {
            Graph::build(3, {{0, 1}, {1, 0}});
            FAIL("expected GraphError");
        } catch (const GraphError& e) {
            CHECK(e.kind() == GraphError::Kind::duplicate_edge);
            CHECK(std::string(e.what()).find("1") != std::string::npos);
        }
    }
    SUBCASE("out of range") {
        try {
            Graph::build(3, {{0, 3}});
            FAIL("expected GraphError");
        } catch (const GraphError& e) {
            CHECK(e.kind() == GraphError::Kind::out_of_range);
            CHECK(e.second() == 3);
        }
        CHECK_THROWS_AS(Graph::build(3, {{-1, 2}}), GraphError);
    }
    SUBCASE("gadget graph") {
        Graph g = build_gadget_main(true).graph;
        CHECK(g.vertex_count() == 14);
        CHECK(g.edge_count() == 17);
    }
    SUBCASE("adjacency is symmetric and sorted") {
        gen::Rng rng(3);
        for (int i = 0; i < 50; ++i) {
            Graph g = gen::gnp(12, 0.3, rng);
            std::size_t total = 0;
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                auto nb = g.neighbors(v);
                CHECK(std::is_sorted(nb.begin(), nb.end()));
                total += nb.size();
                for (std::size_t k = 0; k < nb.size(); ++k) {
                    CHECK(g.has_edge(nb[k], v));
                    CHECK(g.edge(g.incident_edges(v)[k]) == Edge(v, nb[k]));
                }
            }
            CHECK(total == 2 * g.edge_count());
        }
    }
}

TEST_CASE("is_acyclic") {
    CHECK(is_acyclic(pat::path(4)));
    CHECK_FALSE(is_acyclic(pat::triangle()));
    CHECK(is_acyclic(Graph::build(5, std::span<const Edge>{})));

    // K2,3 minus a maximum matching, against the reference cycle test.
    Graph k23 = pat::k23();
    for (const auto& m : oracle::all_matchings(k23)) {
        if (m.size() != 2) continue;
        Graph rest = remove_edges(k23, m);
        CHECK(is_acyclic(rest) == oracle::acyclic(5, rest.edges()));
    }

    for (Vertex n = 1; n <= 6; ++n)
        for (const Graph& g : testsupport::all_graphs(n)) {
            bool tree_count = g.edge_count() + component_count(g) == static_cast<std::size_t>(n);
            CHECK(is_acyclic(g) == tree_count);
            CHECK(is_acyclic(g) == oracle::acyclic(n, g.edges()));
            CHECK(component_count(g) == oracle::components(n, g.edges()));
        }
}

TEST_CASE("remove_edges") {
    Graph t = pat::triangle();
    Edge e(0, 1);
    Graph p = remove_edges(t, std::span<const Edge>(&e, 1));
    CHECK(p.edge_count() == 2);
    CHECK(p.vertex_count() == 3);
    CHECK(oracle::isomorphic(p, pat::path(3)));
    CHECK(remove_edges(t, std::span<const Edge>{}) == t);
    Edge missing(0, 1);
    CHECK_THROWS_AS(remove_edges(p, std::span<const Edge>(&missing, 1)), GraphError);

    // Every 2-subset of diamond edges.
    Graph d = pat::diamond();
    const auto& edges = d.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            std::vector<Edge> two{edges[i], edges[j]};
            Graph r = remove_edges(d, two);
            CHECK(r.edge_count() == 3);
            CHECK(is_acyclic(r) == oracle::acyclic(4, r.edges()));
        }
}

TEST_CASE("degree_profile") {
    auto k4 = degree_profile(pat::complete(4));
    CHECK(k4.is_cubic);
    CHECK(k4.is_subcubic);
    CHECK_FALSE(k4.is_fairly_cubic);
    CHECK_FALSE(degree_profile(pat::star(4)).is_subcubic);

    ReductionResult r = build_reduction(pat::complete(4), Edge(0, 1));
    auto p = degree_profile(r.g);
    CHECK(p.is_fairly_cubic);
    std::vector<Vertex> st{std::min(r.s, r.t), std::max(r.s, r.t)};
    CHECK(p.degree2_vertices == st);
}

TEST_CASE("validate_matching") {
    CHECK(validate_matching(pat::triangle(), Matching({Edge(0, 1)})));
    CHECK_FALSE(validate_matching(pat::triangle(), Matching{}));
    CHECK_FALSE(validate_matching(pat::triangle(), Matching({Edge(0, 3)})));
    CHECK_FALSE(validate_matching(pat::path(3), Matching({Edge(0, 1), Edge(1, 2)})));

    Graph k24 = pat::k24();
    for (const auto& m : oracle::all_matchings(k24)) CHECK_FALSE(validate_matching(k24, Matching(m)));

    Graph d = pat::diamond();
    std::size_t valid = 0;
    for (const auto& m : oracle::all_matchings(d)) {
        bool ok = oracle::acyclic(4, [&] {
            std::vector<Edge> rest;
            for (const auto& e : d.edges())
                if (std::find(m.begin(), m.end(), e) == m.end()) rest.push_back(e);
            return rest;
        }());
        CHECK(validate_matching(d, Matching(m)) == ok);
        valid += ok;
    }
    // ab+cd and ad+bc are the only ones; the chord ac is never usable.
    CHECK(valid == 2);
}

TEST_CASE("decycling matchings restrict to subgraphs") {
    gen::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        auto inst = gen::random_decyclable_dh(10 + static_cast<Vertex>(i % 15), rng);
        const Graph& g = inst.graph;
        REQUIRE(validate_matching(g, inst.witness));
        std::vector<Vertex> keep;
        std::bernoulli_distribution coin(0.7);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (coin(rng)) keep.push_back(v);
        std::vector<Vertex> original;
        Graph h = induced_subgraph(g, keep, &original);
        std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), -1);
        for (std::size_t k = 0; k < original.size(); ++k) local[original[k]] = static_cast<Vertex>(k);
        std::vector<Edge> m;
        for (const auto& e : inst.witness.edges())
            if (local[e.u] >= 0 && local[e.v] >= 0) m.emplace_back(local[e.u], local[e.v]);
        CHECK(validate_matching(h, Matching(m)));
    }
}

TEST_CASE("restrict_to") {
    Graph d = pat::diamond();
    Matching m({Edge(0, 1), Edge(2, 3)});
    Edge gone(2, 3);
    Graph h = remove_edges(d, std::span<const Edge>(&gone, 1));
    CHECK(restrict_to(m, h) == Matching({Edge(0, 1)}));
}

TEST_CASE("induced_subgraph and components") {
    Graph g = Graph::build(6, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(component_count(g) == 3);
    CHECK_FALSE(is_connected(g));
    std::vector<Vertex> keep{2, 1, 0}, original;
    Graph h = induced_subgraph(g, keep, &original);
    CHECK(h.edge_count() == 2);
    CHECK(original == keep);
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_edge(1, 2));
    auto labels = component_labels(g);
    CHECK(labels[0] == labels[2]);
    CHECK(labels[3] != labels[0]);
    CHECK(labels[5] != labels[3]);
}
