#include <doctest.h>

#include "pgv/errors.hpp"
#include "pgv/permutation.hpp"

using namespace pgv;

TEST_CASE("products apply the left factor first") {
  const auto a = parse_cycles("(1,2)", 3);
  const auto b = parse_cycles("(2,3)", 3);
  // 1 -a-> 2 -b-> 3
  CHECK((a * b)(0) == 2);
  CHECK(a * b == parse_cycles("(1,3,2)", 3));
  CHECK(b * a == parse_cycles("(1,2,3)", 3));
  CHECK_THROWS_AS(compose(a, parse_cycles("()", 4)), std::invalid_argument);
}

TEST_CASE("conjugation relabels cycles") {
  const auto g = parse_cycles("(1,2,3)", 4);
  const auto c = parse_cycles("(1,4)", 4);
  CHECK(conjugate(g, c) == parse_cycles("(4,2,3)", 4));
  CHECK(conjugate(g, Permutation::identity(4)) == g);
  CHECK(commutator(g, g).is_identity());
}

TEST_CASE("order, support, parity, powers") {
  const auto g = parse_cycles("(1,2,3)(4,5)", 7);
  CHECK(order(g) == 6);
  CHECK(support(g) == 5);
  CHECK(parity(g) == Parity::odd);
  CHECK(parity(parse_cycles("(1,2)(3,4)", 4)) == Parity::even);
  CHECK(power(g, 6).is_identity());
  CHECK(power(g, -1) == g.inverse());
  CHECK(power(g, 7) == g);
  CHECK(order(Permutation::identity(5)) == 1);
  CHECK(smallest_moved_point(g) == 0);
  CHECK(smallest_moved_point(Permutation::identity(3)) == 3);
}

TEST_CASE("cycle text round trip") {
  const std::string text = "(1,11,8,3,6,9,4,10,2,7,5)";
  const auto g = parse_cycles(text, 11);
  CHECK(to_cycle_string(g) == text);
  CHECK(to_cycle_string(Permutation::identity(3)) == "()");
  CHECK(parse_cycles(" ( 1 , 2 ) ", 2) == parse_cycles("(1,2)", 2));
  CHECK(parse_cycles("", 4).is_identity());
  CHECK(cycles(g).cycle_type() == std::vector<std::size_t>{11});
  CHECK(cycles(g).to_permutation() == g);
}

TEST_CASE("malformed cycle text reports a column") {
  CHECK_THROWS_AS(parse_cycles("(1,2", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2,1)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0,1)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,x)", 3), ParseError);
  try {
    parse_cycles("(1,2)(3,9)", 5);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() > 6);
  }
}

TEST_CASE("from_images rejects non-bijections") {
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_images({0, 3}), std::invalid_argument);
  CHECK(Permutation::from_images({1, 0}) == parse_cycles("(1,2)", 2));
}
