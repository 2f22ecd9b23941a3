#include <doctest.h>

#include "mdec/decycler.hpp"
#include "mdec/generators.hpp"
#include "mdec/patterns.hpp"
#include "mdec/reduction.hpp"
#include "mdec/report.hpp"

using namespace mdec;
namespace pat = mdec::patterns;

TEST_CASE("classification JSON") {
    Json j = to_json(classify(pat::k24()));
    CHECK(j["split"]["value"] == false);
    CHECK(j["distance_hereditary"]["value"] == true);
    CHECK(j["cograph"]["value"] == true);
    CHECK(j["chordal"]["value"] == false);
    CHECK(j["chordal"]["chordless_cycle"].size() == 4);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"chordal", "split", "distance_hereditary", "cograph"});

    Json gem = to_json(classify(pat::gem()));
    CHECK(gem["distance_hereditary"]["obstruction"]["name"] == "gem");
}

TEST_CASE("sparse report") {
    auto k24 = sparse_report(pat::k24());
    CHECK(k24.density_ok);
    CHECK(k24.method == "exhaustive");
    CHECK_FALSE(k24.bad_subgraph.has_value());
    CHECK(k24.sparse == true);

    auto gem = sparse_report(pat::gem());
    REQUIRE(gem.bad_subgraph.has_value());
    CHECK(gem.bad_subgraph->size() == 5);

    Graph empty = Graph::build(4, std::span<const Edge>{});
    auto e = sparse_report(empty);
    CHECK(e.sparse == true);
    Json ej = to_json(classify(empty));
    CHECK(ej["chordal"]["value"] == true);
    CHECK(ej["split"]["value"] == true);
    CHECK(ej["cograph"]["value"] == true);

    // Past the exhaustive limit the class characterizations take over.
    auto dense = sparse_report(gen::chain(3), 8);
    CHECK(dense.method == "density-only");
    CHECK(dense.sparse == false);
    Graph bare = gen::chain(3);
    std::vector<Edge> edges(bare.edges().begin(), bare.edges().end());
    edges.emplace_back(0, 13);
    auto chain = sparse_report(Graph::build(14, edges), 8);
    CHECK(chain.method == "class-characterization");
    CHECK(chain.sparse == false);
    REQUIRE(chain.bad_subgraph.has_value());
    CHECK(chain.bad_subgraph->size() == 13);

    auto k33m = sparse_report(pat::k33minus(), 3);
    CHECK(k33m.method == "class-characterization");
    CHECK(k33m.sparse == true);

    auto c5 = sparse_report(pat::cycle(5), 3);
    CHECK(c5.method == "density-only");
    CHECK_FALSE(c5.sparse.has_value());

    Json sj = to_json(sparse_report(pat::square()));
    CHECK(sj["density_ok"] == true);
    CHECK(sj["bad_subgraph"].is_null());
    CHECK(sj["method"] == "exhaustive");
}

TEST_CASE("verdict JSON") {
    Json d = to_json(decide_auto(pat::diamond()));
    CHECK(d["decyclable"] == true);
    CHECK(d["method"] == "chordal");
    CHECK(d["witness"].size() == 2);
    CHECK(d["refutation"].is_null());

    Json k = to_json(decide_auto(pat::k24()));
    CHECK(k["decyclable"] == false);
    CHECK(k["method"] == "dh");
    CHECK(k["refutation"]["kind"] == "K24_block");
    CHECK(k["witness"].is_null());

    ReductionResult r = build_reduction(pat::complete(4), Edge(0, 1));
    Json u = to_json(decide_fairly_cubic(r.g, 10));
    CHECK(u["decyclable"].is_null());
    CHECK(u["status"] == "unknown");
    CHECK(u["method"] == "fairly-cubic");

    CHECK(to_json(decide_auto(pat::diamond())).dump() == d.dump());
}

TEST_CASE("roles JSON") {
    ReductionResult r = build_reduction(pat::complete(4), Edge(0, 1));
    Json j = roles_json(r);
    CHECK(j["vertices"].size() == 86);
    CHECK(j["port_edges"].size() == 6);
    CHECK(j["chain_edges"].size() == 4);
    CHECK(j["s"] == r.s);
    CHECK(j["vertices"][r.s]["role"] == "s");
}
