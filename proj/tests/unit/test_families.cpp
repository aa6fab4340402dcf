#include <doctest.h>

#include "pgv/coset.hpp"
#include "pgv/families.hpp"
#include "pgv/symmetry.hpp"
#include "support/oracles.hpp"

using namespace pgv;

TEST_CASE("family names") {
  for (const auto f : {Family::psl2_11, Family::psl2_29, Family::m23, Family::alt_p}) {
    CHECK(parse_family(to_string(f)) == f);
  }
  CHECK_FALSE(parse_family("psl2_11").has_value());
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS((FamilySpec{Family::alt_p, 3, false}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FamilySpec{Family::alt_p, 9, false}.validate()), std::invalid_argument);
  CHECK_NOTHROW((FamilySpec{Family::alt_p, 13, false}.validate()));
  CHECK((FamilySpec{Family::m23, 0, false}.valency()) == 23);
  CHECK_FALSE((FamilySpec{Family::alt_p, 11, false}.graph_allowed()));
  CHECK((FamilySpec{Family::alt_p, 11, true}.graph_allowed()));
  CHECK((FamilySpec{Family::alt_p, 7, false}.graph_allowed()));
}

TEST_CASE("embedded generators have the stated cycle types") {
  for (const FamilySpec spec : {FamilySpec{Family::psl2_11, 0, false}, FamilySpec{Family::psl2_29, 0, false},
                                FamilySpec{Family::m23, 0, false}, FamilySpec{Family::alt_p, 11, false}}) {
    CHECK(transcription_mismatches(build_family(spec)).empty());
  }
}

TEST_CASE("bundle orders") {
  const auto a = build_family({Family::psl2_11, 0, false});
  CHECK(a.T.order() == 660);
  CHECK(a.H.order() == 11);
  CHECK(a.G.order() == 60);
  const auto b = build_family({Family::psl2_29, 0, false});
  CHECK(b.T.order() == 12180);
  CHECK(b.H.order() == 203);
  CHECK(order(b.named.at("z")) == 7);
  const auto c = build_family({Family::alt_p, 7, false});
  CHECK(c.T.order() == 2520);
  CHECK(c.G.order() == 360);
}

TEST_CASE("closed-form S for p = 7 written out") {
  const auto s = closed_form_S(7);
  REQUIRE(s.size() == 7);
  CHECK(s[0] == parse_cycles("(1,2)(3,4)", 7));
  CHECK(s[1] == parse_cycles("(2,3)(4,5)", 7));
  CHECK(s[2] == parse_cycles("(3,4)(5,6)", 7));
  CHECK(s[4] == parse_cycles("(1,6,4,3,2)", 7));
  CHECK(s[6] == parse_cycles("(1,6,5,4,3)", 7));
  CHECK((s[3] * s[4]).is_identity());
  CHECK((s[5] * s[6]).is_identity());
  CHECK_THROWS_AS(closed_form_S(4), std::invalid_argument);
}

TEST_CASE("closed-form S equals membership filtering") {
  for (const std::uint64_t p : {5, 7, 11, 13}) {
    CAPTURE(p);
    const auto b = build_family({Family::alt_p, p, false});
    const DoubleCosetSet d = double_coset(b.H, b.t);
    std::vector<Permutation> filtered;
    if (p <= 7) {
      filtered = oracle::filter_members(oracle::closure(b.G.generators()), d.elements());
    } else {
      // G is the stabilizer of the last point inside A_p, and D lies in A_p.
      for (const auto& g : d.elements()) {
        if (g(static_cast<Point>(p - 1)) == p - 1) filtered.push_back(g);
      }
    }
    auto closed = closed_form_S(p);
    std::sort(closed.begin(), closed.end());
    CHECK(closed == filtered);
    CHECK(connection_set(d, b.G).elements == filtered);
  }
}

TEST_CASE("support table spot values") {
  const auto y = alt_p_involutions(11);
  CHECK(support(y[0] * y[1]) == 5);
  CHECK(support(y[0] * y[10]) == 5);
  CHECK(support(y[0] * y[2]) == 4);
  CHECK(support(y[0] * y[3]) == 7);
  CHECK(support(y[0] * y[5]) == 8);
  CHECK(support_table_check(11));
  CHECK(support_table_check(13));
  CHECK(sigma_cycle_check(11));
  CHECK(sigma_cycle_check(13));
  CHECK_THROWS_AS(support_table_check(7), std::invalid_argument);
}

TEST_CASE("h identities") {
  for (const std::uint64_t p : {5, 7, 11, 13, 17}) {
    CAPTURE(p);
    CHECK(alt_p_h_checks(p).all());
    const bool even = parity(build_family({Family::alt_p, p, false}).named.at("h")) == Parity::even;
    CHECK(even == (p % 4 == 1));
  }
}

TEST_CASE("printed M23 list") {
  const auto s = m23_printed_S();
  REQUIRE(s.size() == 23);
  const auto b = build_family({Family::m23, 0, false});
  CHECK(s[0] == b.named.at("y"));
  CHECK(s[19] == b.t);
  for (const auto& g : s) CHECK(b.G.contains(g));
}

TEST_CASE("classifier on the PSL(2,11) family") {
  const auto b = build_family({Family::psl2_11, 0, false});
  const CosetGraph cg = coset_graph(b.T, b.H, double_coset(b.H, b.t));
  const RegularClassification r = classify_by_regular_subgroup(cg.graph, cg.space.action_of(b.G));
  CHECK(r.branch == Branch::overgroup);
  CHECK(r.aut_order == 1320);
  CHECK(r.stabilizer_order == 22);
  REQUIRE(r.t_order.has_value());
  CHECK(*r.t_order == 660);
  CHECK(r.t_arc_transitive);
  REQUIRE(r.t_fingerprint.has_value());
  CHECK(r.t_fingerprint->perfect);
}
