#include <doctest.h>

#include <sstream>

#include "pgv/errors.hpp"
#include "pgv/graph.hpp"
#include "support/oracles.hpp"

using namespace pgv;

TEST_CASE("construction validates edges") {
  CHECK_THROWS_AS(SymGraph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SymGraph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(SymGraph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SymGraph::from_adjacency({{1}, {}}), std::invalid_argument);
  const SymGraph g = SymGraph::from_edges(4, {{2, 1}, {0, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.arc_index(1, 0).has_value());
  CHECK_FALSE(g.arc_index(0, 2).has_value());
  CHECK_FALSE(g.valency().has_value());
}

TEST_CASE("predicates") {
  const auto c5 = graph_predicates(oracle::circulant(5, {1}));
  CHECK(c5.connected);
  CHECK_FALSE(c5.bipartite);
  CHECK(c5.valency == std::optional<std::size_t>(2));
  CHECK(graph_predicates(oracle::circulant(6, {1})).bipartite);
  const auto two_triangles = SymGraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(graph_predicates(two_triangles).connected);
}

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    const SymGraph g = oracle::random_graph(30 + i, 0.2, rng);
    std::stringstream ss;
    write_edge_list(ss, g);
    CHECK(read_edge_list(ss) == g);
  }
  std::stringstream out;
  write_edge_list(out, SymGraph::from_edges(3, {{0, 2}}));
  CHECK(out.str() == "3 1\n1 3\n");
}

TEST_CASE("edge list errors carry positions") {
  std::istringstream bad("3 1\n1 x\n");
  try {
    read_edge_list(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream short_list("3 2\n1 2\n");
  CHECK_THROWS_AS(read_edge_list(short_list), ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_edge_list(empty), ParseError);
  std::istringstream loop("3 1\n2 2\n");
  CHECK_THROWS_AS(read_edge_list(loop), ParseError);
}

TEST_CASE("graph6") {
  CHECK(to_graph6(oracle::circulant(3, {1})) == "Bw");
  CHECK(to_graph6(SymGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})) == "Dhc");
  std::mt19937_64 rng(11);
  for (std::size_t n : {1, 2, 7, 62, 63, 200}) {
    const SymGraph g = oracle::random_graph(n, 0.3, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  CHECK_THROWS_AS(from_graph6("B"), ParseError);
  CHECK_THROWS_AS(from_graph6("Bw!"), ParseError);
}

TEST_CASE("relabeling and automorphism test") {
  const SymGraph c4 = oracle::circulant(4, {1});
  const std::vector<Vertex> labels{1, 2, 3, 0};
  CHECK(c4.relabeled(labels) == c4);
  CHECK(c4.is_automorphism(parse_cycles("(1,2,3,4)", 4)));
  CHECK_FALSE(c4.is_automorphism(parse_cycles("(1,2)", 4)));
}

TEST_CASE("quotients") {
  // C10 modulo the half-turn is C5.
  std::vector<std::vector<Vertex>> blocks;
  for (Vertex i = 0; i < 5; ++i) blocks.push_back({i, static_cast<Vertex>(i + 5)});
  const QuotientResult q = quotient_graph(oracle::circulant(10, {1}), blocks);
  CHECK(q.graph == oracle::circulant(5, {1}));
  CHECK_FALSE(q.loops_discarded);
  CHECK_FALSE(q.multi_edges_collapsed);
  // C6 modulo <2> has two blocks joined once, from three edges per vertex pair.
  const QuotientResult r = quotient_graph(oracle::circulant(6, {1}), {{0, 2, 4}, {1, 3, 5}});
  CHECK(r.graph.edge_count() == 1);
  CHECK(r.multi_edges_collapsed);
  CHECK_THROWS_AS(quotient_graph(oracle::circulant(4, {1}), {{0, 1}, {1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(quotient_graph(oracle::circulant(4, {1}), {{0, 1}}), std::invalid_argument);
}
