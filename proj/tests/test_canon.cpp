#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wpi/canon.hpp"

using namespace wpi;

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_connected(rng, 3 + static_cast<int>(rng() % 18), static_cast<int>(rng() % 10));
    CHECK(canonical_form(g) == canonical_form(oracle::shuffled(g, rng)));
  }
  // Highly symmetric graphs exercise the backtracking.
  for (const Graph& g : {oracle::cycle_graph(12), oracle::complete_bipartite(3, 4), oracle::complete_graph(6)})
    CHECK(canonical_form(g) == canonical_form(oracle::shuffled(g, rng)));
}

TEST_CASE("canonical form agrees with brute-force isomorphism") {
  std::mt19937 rng(29);
  int iso = 0, non_iso = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int extra = static_cast<int>(rng() % 4);
    Graph a = oracle::random_connected(rng, n, extra);
    Graph b = oracle::random_connected(rng, n, extra);
    const bool expect = oracle::isomorphic_brute(a, b);
    (expect ? iso : non_iso)++;
    CHECK(isomorphic(a, b) == expect);
  }
  CHECK(iso > 20);
  CHECK(non_iso > 20);
}

TEST_CASE("canonical form separates near misses") {
  // C6 versus two triangles joined by nothing would be disconnected; use
  // C6 versus the triangular prism minus matching edges: same degree sequence.
  Graph c6 = oracle::cycle_graph(6);
  Graph two_c3 = parse_edge_list("0 1\n1 2\n2 0\n3 4\n4 5\n5 3");
  CHECK_FALSE(isomorphic(c6, two_c3));
  CHECK(canonical_form(c6).order == 6);
  CHECK(canonical_form(Graph{}).edges.empty());
}
