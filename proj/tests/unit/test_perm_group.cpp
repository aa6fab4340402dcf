#include <doctest.h>

#include "pgv/errors.hpp"
#include "pgv/perm_group.hpp"
#include "support/oracles.hpp"

using namespace pgv;

namespace {
PermGroup symmetric(std::size_t n) {
  std::string cycle = "(";
  for (std::size_t i = 1; i <= n; ++i) cycle += std::to_string(i) + (i < n ? "," : ")");
  return PermGroup({parse_cycles(cycle, n), parse_cycles("(1,2)", n)});
}
PermGroup alternating5() { return PermGroup({parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(1,2,3)", 5)}); }
}  // namespace

TEST_CASE("orders and membership") {
  CHECK(symmetric(6).order() == 720);
  CHECK(alternating5().order() == 60);
  const PermGroup psl({parse_cycles("(1,11,8,3,6,9,4,10,2,7,5)", 11), parse_cycles("(2,5)(3,9)(6,11)(8,10)", 11)});
  CHECK(psl.order() == 660);
  CHECK(alternating5().contains(parse_cycles("(1,2)(3,4)", 5)));
  CHECK_FALSE(alternating5().contains(parse_cycles("(1,2)", 5)));
  CHECK(PermGroup::trivial(4).is_trivial());
  CHECK(PermGroup({Permutation::identity(3)}).order() == 1);
  CHECK_THROWS_AS(PermGroup(std::vector<Permutation>{}), std::invalid_argument);
}

TEST_CASE("orbits and stabilizers") {
  const PermGroup g({parse_cycles("(1,2)(3,4,5)", 6)});
  CHECK(g.orbits().size() == 3);
  CHECK_FALSE(g.is_transitive());
  CHECK(g.orbit(2).size() == 3);
  CHECK(symmetric(5).point_stabilizer(0).order() == 24);
  CHECK_THROWS_AS(g.orbit(6), std::out_of_range);
}

TEST_CASE("element listing agrees with closure") {
  const PermGroup g = symmetric(4);
  auto a = g.elements(100);
  auto b = oracle::closure(g.generators());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
  CHECK_THROWS_AS(g.elements(10), BudgetExceeded);
}

TEST_CASE("derived series and simplicity fingerprint") {
  CHECK(is_solvable(symmetric(4)));
  CHECK_FALSE(is_solvable(alternating5()));
  CHECK(derived_series(alternating5()).is_perfect());
  CHECK(derived_series(symmetric(4)).chain.size() == 4);  // S4 > A4 > V4 > 1
  const auto f = simplicity_fingerprint(alternating5(), 1000);
  CHECK(f.perfect);
  REQUIRE(f.exhaustive_simple.has_value());
  CHECK(*f.exhaustive_simple);
  CHECK_FALSE(simplicity_fingerprint(alternating5(), 10).exhaustive_simple.has_value());
  CHECK_FALSE(simplicity_fingerprint(symmetric(4), 1000).perfect);
}

TEST_CASE("normality and normal closure") {
  const PermGroup s4 = symmetric(4);
  const PermGroup v4({parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)});
  CHECK(is_normal_in(v4, s4));
  CHECK_FALSE(is_normal_in(PermGroup({parse_cycles("(1,2)", 4)}), s4));
  CHECK(normal_closure({parse_cycles("(1,2,3)", 4)}, s4).order() == 12);
  CHECK_THROWS_AS(is_normal_in(PermGroup({parse_cycles("(1,2)", 4)}), v4), std::invalid_argument);
}

TEST_CASE("double cosets and intersections") {
  const PermGroup h({parse_cycles("(1,2)", 4)});
  const Permutation t = parse_cycles("(2,3)", 4);
  const DoubleCosetSet d = double_coset(h, t);
  CHECK(d.size() == 4);  // |H|^2 / |H ∩ H^t| = 4 / 1
  CHECK(d.contains(t));
  CHECK(d.is_inverse_closed());
  CHECK(double_coset(h, parse_cycles("(3,4)", 4)).size() == 2);
  CHECK(subgroup_intersection_small(symmetric(4), PermGroup({parse_cycles("(1,2,3,4)", 4)})).order() == 4);
  CHECK_THROWS_AS(double_coset(symmetric(4), t, 10), BudgetExceeded);
  CHECK_THROWS_AS(double_coset(symmetric(6), t), std::invalid_argument);
}

TEST_CASE("core of a subgroup") {
  const PermGroup s4 = symmetric(4);
  const PermGroup d8({parse_cycles("(1,2,3,4)", 4), parse_cycles("(1,3)", 4)});
  CHECK(core_elements(s4, d8.elements(100)).size() == 4);  // V4
  CHECK(core_elements(s4, s4.point_stabilizer(0).elements(100)).size() == 1);
}

TEST_CASE("primes and factorial valuations") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(nu_factorial(10, 2) == 8);
  CHECK(nu_factorial(25, 5) == 6);
  CHECK(nu_factorial(4, 5) == 0);
  CHECK(nu_factorial(100, 3) == oracle::factorial_valuation(100, 3));
  CHECK_THROWS_AS(nu_factorial(10, 4), std::invalid_argument);
}
