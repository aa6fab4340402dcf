#include <doctest.h>

#include "support/properties.hpp"

// Smaller runs of the acceptance property suites; the acceptance runner uses
// the full sizes.
namespace {
void check(const props::Tally& t) {
  CAPTURE(t.name);
  CAPTURE(t.detail);
  for (const auto& f : t.failures) CAPTURE(f);
  CHECK(t.trials > 0);
  CHECK(t.failures.empty());
}
}  // namespace

TEST_CASE("orbit-stabilizer") { check(props::orbit_stabilizer(40, 101)); }
TEST_CASE("double-coset law") { check(props::double_coset_law(30, 102)); }
TEST_CASE("nu bound") { check(props::nu_bound(2000)); }
TEST_CASE("canonical relabeling") { check(props::canonical_relabeling(25, 103)); }
TEST_CASE("brute-force Aut") { check(props::brute_force_aut()); }
TEST_CASE("quotient valency") { check(props::quotient_valency()); }
TEST_CASE("Frattini") { check(props::frattini(30, 104)); }
TEST_CASE("transfer on families") { check(props::transfer_on_families(false)); }
