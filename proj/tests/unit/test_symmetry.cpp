#include <doctest.h>

#include "pgv/automorphism.hpp"
#include "pgv/coset.hpp"
#include "pgv/errors.hpp"
#include "pgv/symmetry.hpp"
#include "support/oracles.hpp"

using namespace pgv;

namespace {
GroupAction rotations(std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  return natural_action(PermGroup({Permutation::from_images(images)}));
}
}  // namespace

TEST_CASE("arc transitivity and regularity") {
  const SymGraph c7 = oracle::circulant(7, {1});
  const GroupAction rot = rotations(7);
  CHECK(arc_orbit_size(c7, rot) == 7);
  CHECK_FALSE(is_arc_transitive(c7, rot));
  CHECK(is_regular_action(rot) == Regularity::regular);
  const AutResult aut = automorphism_group(c7);
  CHECK(is_arc_transitive(c7, natural_action(aut.group)));
  CHECK(is_regular_action(natural_action(aut.group)) == Regularity::neither);
  const GroupAction half = natural_action(PermGroup({parse_cycles("(1,2)(3,4)", 4)}));
  CHECK(is_regular_action(half) == Regularity::semiregular);
  CHECK_THROWS_AS(require_edge_preserving(c7, natural_action(PermGroup({parse_cycles("(1,2)", 7)}))),
                  std::invalid_argument);
}

TEST_CASE("local action on the Petersen graph") {
  // Petersen: Aut = S5, stabilizer S3 x 2 acting on three neighbours as S3.
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
    e.emplace_back(i, i + 5);
    const Vertex a = i + 5, b = (i + 2) % 5 + 5;
    e.emplace_back(std::min(a, b), std::max(a, b));
  }
  const SymGraph g = SymGraph::from_edges(10, e);
  const PermGroup stab = automorphism_group(g).group.point_stabilizer(0);
  const LocalAction la = local_action(stab, g, 0);
  CHECK(la.image.order() == 6);
  CHECK(la.kernel_order == 2);
  CHECK(solvability_transfer_check(natural_action(stab), g, 0));
  CHECK_THROWS_AS(local_action(automorphism_group(g).group, g, 0), std::invalid_argument);
}

TEST_CASE("stabilizer profile preconditions") {
  const SymGraph c7 = oracle::circulant(7, {1});
  const PermGroup stab = automorphism_group(c7).group.point_stabilizer(0);
  CHECK_THROWS_AS(stabilizer_profile(stab, c7, 0), std::invalid_argument);  // valency 2
}

TEST_CASE("profile on K6") {
  // Full stabilizer S5 is nonsolvable and rejected; its 5-cycle subgroup is fine.
  std::vector<Edge> e;
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) e.emplace_back(u, v);
  }
  const SymGraph k6 = SymGraph::from_edges(6, e);
  const PermGroup stab = automorphism_group(k6).group.point_stabilizer(0);
  CHECK_THROWS_AS(stabilizer_profile(stab, k6, 0), std::invalid_argument);
  const PermGroup c5({parse_cycles("(2,3,4,5,6)", 6)});
  const StabilizerProfile p = stabilizer_profile(c5, k6, 0);
  CHECK(p.p == 5);
  CHECK(p.k == 1);
  CHECK(p.ell == 1);
  CHECK(p.holds());
}

TEST_CASE("normalizer checks") {
  const PermGroup g({parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(1,2,3)", 5)});
  const PermGroup h({parse_cycles("(1,2,3,4,5)", 5)});
  const DoubleCosetSet d = double_coset(h, parse_cycles("(1,2)(3,4)", 5));
  const auto out = normalizer_formula_check(g, h, d, {Permutation::identity(5), parse_cycles("(1,2,3)", 5)});
  CHECK(out[0].fixes_subgroup);
  CHECK(out[0].fixes_connection);
  CHECK_FALSE(out[1].fixes_subgroup);
  CHECK_THROWS_AS(normalizer_formula_check(g, h, d, {Permutation::identity(6)}), std::invalid_argument);
}

TEST_CASE("triple arithmetic") {
  CHECK(triple_passes_arithmetic_filter(7, 2, 2));
  CHECK_FALSE(triple_passes_arithmetic_filter(5, 1, 2));
  CHECK_FALSE(triple_passes_arithmetic_filter(11, 1, 3));
  CHECK(triple_status(7, 2, 2) == TripleStatus::known_not_conceivable);
  CHECK(triple_status(7, 2, 6) == TripleStatus::known_conceivable);
  CHECK(triple_status(11, 1, 1) == TripleStatus::known_conceivable);
  CHECK(triple_status(11, 2, 10) == TripleStatus::open);
  CHECK(triple_status(11, 1, 2) == TripleStatus::excluded);
  CHECK_FALSE(conceivable_triple_check(5, 2, 2));
  CHECK(conceivable_triple_check(5, 2, 4));
  CHECK_THROWS_AS(conceivable_triple_check(9, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(conceivable_triple_check(3, 1, 1), std::invalid_argument);
}

TEST_CASE("classifier on a cycle") {
  const SymGraph c7 = oracle::circulant(7, {1});
  const RegularClassification r = classify_by_regular_subgroup(c7, rotations(7));
  CHECK(r.branch == Branch::normal);
  CHECK(r.aut_order == 14);
  CHECK_FALSE(r.t_order.has_value());
  CHECK_THROWS_AS(classify_by_regular_subgroup(c7, natural_action(automorphism_group(c7).group)), std::invalid_argument);
}
