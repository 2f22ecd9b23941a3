#include <doctest.h>

#include "mdec/patterns.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace testsupport;
namespace pat = mdec::patterns;

TEST_CASE("non-isomorphic graph counts") {
    const std::size_t all[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
    const std::size_t conn[] = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (Vertex n = 1; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(all_graphs(n).size() == all[n - 1]);
        CHECK(connected_graphs(n).size() == conn[n - 1]);
    }
}

TEST_CASE("canonical code is a relabeling invariant") {
    mdec::gen::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Graph g = mdec::gen::gnp(8, 0.4, rng);
        CHECK(canonical_code(g) == canonical_code(permuted(g, rng)));
    }
    CHECK(canonical_code(pat::cycle(6)) != canonical_code(Graph::build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
    // C6 with its three long diagonals is K3,3.
    CHECK(canonical_code(pat::k33()) ==
          canonical_code(Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {1, 4}, {2, 5}})));
}

TEST_CASE("reference oracles on small named graphs") {
    CHECK_FALSE(oracle::decyclable(pat::k24()));
    CHECK(oracle::decyclable(pat::k33minus()));
    CHECK(oracle::decyclable(pat::diamond()));
    CHECK_FALSE(oracle::decyclable(pat::complete(4)));
    CHECK(oracle::sparse(pat::k24()));
    CHECK_FALSE(oracle::sparse(pat::gem()));
    CHECK(oracle::chordal(pat::diamond()));
    CHECK_FALSE(oracle::chordal(pat::cycle(4)));
    CHECK_FALSE(oracle::distance_hereditary(pat::house()));
    CHECK(oracle::distance_hereditary(pat::k23()));
    CHECK_FALSE(oracle::cograph(pat::path(4)));
    CHECK_FALSE(oracle::split(pat::two_k2()));
    CHECK(oracle::split(pat::star(5)));
    CHECK(oracle::hamiltonian_cycle(pat::complete(4)));
    CHECK_FALSE(oracle::hamiltonian_cycle(pat::k23()));
    CHECK(oracle::biconnected(pat::cycle(5)));
    CHECK_FALSE(oracle::biconnected(pat::path(3)));
    CHECK(oracle::blocks(pat::diamond()).size() == 1);
    CHECK(oracle::blocks(pat::path(4)).size() == 3);
}
