#include <doctest.h>

#include "pgv/automorphism.hpp"
#include "pgv/errors.hpp"
#include "support/oracles.hpp"

using namespace pgv;

namespace {
SymGraph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  for (auto& [u, v] : e) {
    if (u > v) std::swap(u, v);
  }
  return SymGraph::from_edges(10, e);
}
}  // namespace

TEST_CASE("classical automorphism groups") {
  CHECK(automorphism_group(petersen()).group.order() == 120);
  CHECK(automorphism_group(oracle::circulant(7, {1})).group.order() == 14);
  CHECK(automorphism_group(oracle::circulant(12, {1})).group.order() == 24);
  std::vector<Edge> k33;
  for (Vertex u = 0; u < 3; ++u) {
    for (Vertex v = 3; v < 6; ++v) k33.emplace_back(u, v);
  }
  CHECK(automorphism_group(SymGraph::from_edges(6, k33)).group.order() == 72);
  CHECK(automorphism_group(SymGraph::from_edges(12, {})).group.order() == Integer("479001600"));
}

TEST_CASE("generators are automorphisms and transitivity is reported") {
  const SymGraph g = petersen();
  const AutResult a = automorphism_group(g);
  for (const auto& x : a.group.generators()) CHECK(g.is_automorphism(x));
  CHECK(a.vertex_transitive);
  const SymGraph star = SymGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(automorphism_group(star).vertex_transitive);
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  const SymGraph c6 = oracle::circulant(6, {1});
  const SymGraph two_c3 = SymGraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(automorphism_group(c6).canonical_graph == automorphism_group(two_c3).canonical_graph);
  std::mt19937_64 rng(5);
  const SymGraph p = petersen();
  const SymGraph q = p.relabeled(oracle::random_permutation(10, rng).images());
  CHECK(automorphism_group(p).canonical_graph == automorphism_group(q).canonical_graph);
  CHECK(automorphism_group(p).fingerprint == automorphism_group(q).fingerprint);
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(automorphism_group(oracle::circulant(20, {1}), 10), BudgetExceeded);
  CHECK_THROWS_AS(automorphism_group(SymGraph::from_edges(0, {})), std::invalid_argument);
  CHECK(automorphism_group(SymGraph::from_edges(1, {})).group.order() == 1);
}
