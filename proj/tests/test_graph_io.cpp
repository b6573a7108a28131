#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gfr/graph_io.hpp"

using gfr::Graph;

namespace {
Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}
}  // namespace

TEST_CASE("graph basics") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.adj(0, 1));
  CHECK(g.adj(1, 0));
  CHECK_FALSE(g.adj(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
}

TEST_CASE("connectivity") {
  Graph g(1);
  CHECK(gfr::connected(g));
  Graph h(4);
  h.add_edge(0, 1);
  h.add_edge(2, 3);
  CHECK_FALSE(gfr::connected(h));
  h.add_edge(1, 2);
  CHECK(gfr::connected(h));
}

TEST_CASE("graph6 of K2 is A_") {
  Graph k2(2);
  k2.add_edge(0, 1);
  CHECK(gfr::to_graph6(k2) == "A_");
  CHECK(gfr::to_graph6(k2, true) == ">>graph6<<A_");
  CHECK(gfr::from_graph6("A_") == k2);
  CHECK(gfr::from_graph6(">>graph6<<A_") == k2);
}

TEST_CASE("round trips") {
  std::mt19937 rng(2024);
  for (int n : {0, 1, 5, 62, 63, 100}) {
    Graph g = random_graph(n, rng);
    CHECK(gfr::from_graph6(gfr::to_graph6(g)) == g);
    if (g.edge_count() > 0) CHECK(gfr::from_edge_list(gfr::to_edge_list(g)).edge_count() == g.edge_count());
  }
}

TEST_CASE("edge list shape") {
  Graph g(3);
  g.add_edge(2, 0);
  g.add_edge(1, 2);
  CHECK(gfr::to_edge_list(g) == "0 2\n1 2\n");
  Graph h = gfr::from_edge_list("0 2\n1 2\n");
  CHECK(h.n() == 3);
  CHECK(h.adj(0, 2));
  CHECK(h.adj(1, 2));
  CHECK_FALSE(h.adj(0, 1));
  CHECK_THROWS_AS(gfr::from_edge_list("0 x"), std::invalid_argument);
}

TEST_CASE("format sniffing") {
  Graph k2(2);
  k2.add_edge(0, 1);
  CHECK(gfr::parse_graph("A_") == k2);
  CHECK(gfr::parse_graph("0 1\n").adj(0, 1));
}

TEST_CASE("graph6 corpus values") {
  // K4 and the 4-cycle against independently hand-packed bytes:
  // K4 triangle bits 111111 -> '~'; C4 (edges 01,12,23,03) bits 101101 = 45 -> 'l'
  Graph k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  CHECK(gfr::to_graph6(k4) == "C~");
  Graph c4(4);
  c4.add_edge(0, 1);
  c4.add_edge(1, 2);
  c4.add_edge(2, 3);
  c4.add_edge(3, 0);
  CHECK(gfr::to_graph6(c4) == "Cl");
}
