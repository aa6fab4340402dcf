#include <doctest.h>

#include "pgv/coset.hpp"
#include "pgv/errors.hpp"
#include "pgv/symmetry.hpp"
#include "support/oracles.hpp"

using namespace pgv;

namespace {
PermGroup s4() { return PermGroup({parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,2)", 4)}); }
}  // namespace

TEST_CASE("coset enumeration") {
  const PermGroup g = s4();
  const CosetSpace space = enumerate_cosets(g, g.point_stabilizer(3));
  CHECK(space.size() == 4);
  CHECK(space.coset_of(Permutation::identity(4)) == 0);
  // Hg = Hg' iff g' g^-1 in H.
  for (const auto& x : g.elements(100)) {
    for (const auto& y : g.elements(100)) {
      const bool same = space.subgroup().contains(y * x.inverse());
      CHECK((space.coset_of(x) == space.coset_of(y)) == same);
    }
  }
  for (Vertex v = 0; v < space.size(); ++v) CHECK(space.coset_of(space.representative(v)) == v);
  CHECK_FALSE(space.index_of(parse_cycles("(1,2)", 5)).has_value());
  CHECK_THROWS_AS(enumerate_cosets(g, PermGroup({parse_cycles("(1,2)", 5)})), std::invalid_argument);
}

TEST_CASE("coset enumeration budgets") {
  RunConfig small;
  small.vertex_budget = 3;
  CHECK_THROWS_AS(enumerate_cosets(s4(), s4().point_stabilizer(3), small), BudgetExceeded);
  RunConfig tiny_h;
  tiny_h.enumeration_bound = 2;
  CHECK_THROWS_AS(enumerate_cosets(s4(), s4().point_stabilizer(3), tiny_h), BudgetExceeded);
}

TEST_CASE("coset action is the natural action") {
  const PermGroup g = s4();
  const CosetSpace space = enumerate_cosets(g, g.point_stabilizer(3));
  const GroupAction& act = space.action();
  CHECK(act.image_group().order() == 24);
  CHECK(act.orbits().size() == 1);
  CHECK(coset_action_kernel(space).size() == 1);
  const CosetSpace onto_v4 = enumerate_cosets(g, PermGroup({parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)}));
  CHECK(coset_action_kernel(onto_v4).size() == 4);
}

TEST_CASE("coset graph of S4 on 2-subsets") {
  // 2-subsets of {1..4}, adjacent when they share one point: the octahedron.
  const PermGroup g = s4();
  const PermGroup h({parse_cycles("(1,2)", 4), parse_cycles("(3,4)", 4)});
  const CosetGraph cg = coset_graph(g, h, double_coset(h, parse_cycles("(2,3)", 4)));
  CHECK(cg.graph.vertex_count() == 6);
  CHECK(cg.graph.valency() == std::optional<std::size_t>(4));
  CHECK(is_arc_transitive(cg.graph, cg.action));
}

TEST_CASE("coset graph connection checks") {
  const PermGroup g = s4();
  const PermGroup h({parse_cycles("(1,2)", 4)});
  // Not inverse-closed.
  CHECK_THROWS_AS(coset_graph(g, h, std::vector<Permutation>{parse_cycles("(1,3,4)", 4)}), std::invalid_argument);
  // Meets H.
  CHECK_THROWS_AS(coset_graph(g, h, double_coset(h, parse_cycles("(1,2)", 4))), std::invalid_argument);
  // Not a union of double cosets.
  CHECK_THROWS_AS(coset_graph(g, h, std::vector<Permutation>{parse_cycles("(3,4)", 4)}), std::invalid_argument);
}

TEST_CASE("Cayley graphs") {
  const PermGroup z7({parse_cycles("(1,2,3,4,5,6,7)", 7)});
  const Permutation x = z7.generators().front();
  const CosetGraph cay = cayley_graph(z7, {x, x.inverse()});
  CHECK(cay.graph.vertex_count() == 7);
  CHECK(graph_predicates(cay.graph).valency == std::optional<std::size_t>(2));
  CHECK(graph_predicates(cay.graph).connected);
  CHECK_THROWS_AS(cayley_graph(z7, {x}), std::invalid_argument);
  CHECK_THROWS_AS(cayley_graph(z7, {Permutation::identity(7)}), std::invalid_argument);
  CHECK_THROWS_AS(cayley_graph(z7, {parse_cycles("(1,2)", 7)}), std::invalid_argument);
}

TEST_CASE("connection set by membership") {
  const PermGroup g = s4();
  const PermGroup h({parse_cycles("(1,2)", 4)});
  const DoubleCosetSet d = double_coset(h, parse_cycles("(2,3)", 4));
  const PermGroup l({parse_cycles("(1,2,3,4)", 4)});
  const ConnectionSet s = connection_set(d, l);
  auto want = oracle::filter_members(oracle::closure(l.generators()), d.elements());
  CHECK(s.elements == want);
}
