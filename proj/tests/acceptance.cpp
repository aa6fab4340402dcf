// Acceptance runner: one PASS/FAIL line per criterion, each under a fixed
// wall-clock limit. Exit status is non-zero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "pgv/families.hpp"
#include "pgv/report.hpp"
#include "pgv/symmetry.hpp"
#include "support/properties.hpp"

namespace {

using pgv::Json;

struct Outcome {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << " [" << what << "]";
    }
  }
};

// Checks a computed value in a report against a constant pinned here, not
// against the report's own expected column.
void expect_claim(Outcome& out, const pgv::VerificationReport& r, const std::string& name, const Json& value) {
  const pgv::Claim* c = r.find(name);
  if (!c) {
    out.require(false, name + " missing");
    return;
  }
  out.require(c->computed == value, name + " = " + c->computed.dump() + ", want " + value.dump());
  out.require(c->pass, name + " failed in report");
}

pgv::VerificationReport run(pgv::Family f, std::uint64_t p = 0) {
  return pgv::verify_family({f, p, false}, pgv::default_config());
}

void criterion1(Outcome& out) {
  const auto r = run(pgv::Family::psl2_11);
  out.require(r.all_pass(), "report has failing claims");
  expect_claim(out, r, "T_order", 660);
  expect_claim(out, r, "H_order", 11);
  expect_claim(out, r, "H_meet_Ht_order", 1);
  expect_claim(out, r, "vertices", 60);
  expect_claim(out, r, "valency", 11);
  expect_claim(out, r, "connected", true);
  expect_claim(out, r, "non_bipartite", true);
  expect_claim(out, r, "G_order", 60);
  expect_claim(out, r, "G_action", "regular");
  expect_claim(out, r, "T_arc_orbit_size", 660);
  expect_claim(out, r, "aut_order", 1320);
  expect_claim(out, r, "aut_vertex_transitive", true);
  expect_claim(out, r, "aut_stabilizer_order", 22);
  expect_claim(out, r, "aut_stabilizer_solvable", true);
  expect_claim(out, r, "aut_stabilizer_profile", Json::array({11, 1, 2}));
  expect_claim(out, r, "G_not_normal_in_aut", true);
  expect_claim(out, r, "branch", "overgroup");
  expect_claim(out, r, "branch_T_order", 660);
}

void criterion2(Outcome& out) {
  const auto r = run(pgv::Family::psl2_29);
  out.require(r.all_pass(), "report has failing claims");
  expect_claim(out, r, "T_order", 12180);
  expect_claim(out, r, "H_order", 203);
  expect_claim(out, r, "H_meet_Ht_order", 7);
  expect_claim(out, r, "HtH_size", 5887);
  expect_claim(out, r, "vertices", 60);
  expect_claim(out, r, "valency", 29);
  expect_claim(out, r, "aut_order", 24360);
  expect_claim(out, r, "aut_stabilizer_order", 406);
  expect_claim(out, r, "aut_stabilizer_profile", Json::array({29, 1, 14}));
  expect_claim(out, r, "aut_stabilizer_solvable", true);
  expect_claim(out, r, "branch", "overgroup");
}

void criterion3(Outcome& out) {
  const auto r = run(pgv::Family::m23);
  out.require(r.all_pass(), "report has failing claims");
  expect_claim(out, r, "T_order", 10200960);
  expect_claim(out, r, "H_order", 23);
  expect_claim(out, r, "H_meet_Ht_order", 1);
  expect_claim(out, r, "vertices", 443520);
  expect_claim(out, r, "valency", 23);
  expect_claim(out, r, "T_arc_orbit_size", 10200960);
  expect_claim(out, r, "G_order", 443520);
  expect_claim(out, r, "G_action", "regular");
  expect_claim(out, r, "S_equals_printed", true);
  expect_claim(out, r, "s1_squared_not_in_S_cubed", true);
  expect_claim(out, r, "b_fixes_H", true);
  expect_claim(out, r, "b_moves_HtH", true);
}

void criterion4(Outcome& out) {
  struct Row {
    std::uint64_t p;
    std::uint64_t t_order, vertices, aut, stabilizer;
  };
  for (const Row row : {Row{5, 60, 12, 120, 10}, Row{7, 2520, 360, 5040, 14}}) {
    const auto r = run(pgv::Family::alt_p, row.p);
    out.require(r.all_pass(), "p=" + std::to_string(row.p) + " report has failing claims");
    expect_claim(out, r, "T_order", row.t_order);
    expect_claim(out, r, "valency", row.p);
    expect_claim(out, r, "vertices", row.vertices);
    expect_claim(out, r, "G_action", "regular");
    expect_claim(out, r, "S_equals_closed_form", true);
    expect_claim(out, r, "aut_order", row.aut);
    expect_claim(out, r, "aut_center_order", row.p % 4 == 1 ? 2 : 1);
    expect_claim(out, r, "aut_stabilizer_order", row.stabilizer);
    expect_claim(out, r, "aut_stabilizer_solvable", true);
    expect_claim(out, r, "aut_stabilizer_profile", Json::array({row.p, 1, 2}));
  }
}

void criterion5(Outcome& out) {
  for (const std::uint64_t p : {11, 13}) {
    const std::string tag = "p=" + std::to_string(p) + " ";
    out.require(pgv::support_table_check(p), tag + "support table");
    out.require(pgv::sigma_cycle_check(p), tag + "sigma cycle");
    const pgv::AltHChecks h = pgv::alt_p_h_checks(p);
    out.require(h.all(), tag + "h checks");
    out.require(h.parity_matches, tag + "h parity vs p mod 4");
    out.require(h.connection_fixed, tag + "(HtH)^h = HtH");
    const auto bundle = pgv::build_family({pgv::Family::alt_p, p, false});
    const bool even = pgv::parity(bundle.named.at("h")) == pgv::Parity::even;
    out.require(even == (p % 4 == 1), tag + "h parity");
  }
}

void criterion6(Outcome& out) {
  const std::vector<props::Tally> tallies{
      props::orbit_stabilizer(200, 1),       props::double_coset_law(100, 2),
      props::nu_bound(10000),                props::canonical_relabeling(100, 3),
      props::brute_force_aut(),              props::quotient_valency(),
      props::frattini(50, 4),                props::transfer_on_families(true),
  };
  for (const auto& t : tallies) {
    std::string what = t.name + " (" + std::to_string(t.trials) + " trials";
    for (const auto& f : t.failures) what += "; " + f;
    out.require(t.ok(), what + ")");
  }
}

void criterion7(Outcome& out) {
  for (std::uint64_t p = 5; p <= 100; ++p) {
    if (pgv::is_prime(p)) out.require(pgv::conceivable_triple_check(p, 1, 1), "(" + std::to_string(p) + ",1,1)");
  }
  out.require(pgv::conceivable_triple_check(5, 2, 4), "p=5 l=4 k=2 should be conceivable");
  out.require(!pgv::conceivable_triple_check(5, 1, 2), "p=5 l=2 k=1 should not be conceivable");
  const std::set<std::pair<std::uint64_t, std::uint64_t>> allowed{{1, 1}, {3, 1}, {3, 3}, {6, 2}};
  for (std::uint64_t ell = 1; ell <= 6; ++ell) {
    if (6 % ell != 0) continue;
    for (std::uint64_t k = 1; k <= ell; ++k) {
      if (ell % k != 0) continue;
      const bool want = allowed.count({ell, k}) != 0;
      out.require(pgv::conceivable_triple_check(7, k, ell) == want,
                  "p=7 l=" + std::to_string(ell) + " k=" + std::to_string(k));
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<void(Outcome&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "PSL(2,11) family", 10, criterion1},
      {2, "PSL(2,29) family", 30, criterion2},
      {3, "M23 family", 600, criterion3},
      {4, "alternating family p = 5, 7", 60, criterion4},
      {5, "alternating combinatorics p = 11, 13", 10, criterion5},
      {6, "property suites", 300, criterion6},
      {7, "triple arithmetic", 1, criterion7},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(secs < c.limit_s, "over the time limit");
    all = all && out.ok;
    std::cout << "criterion " << c.id << " " << (out.ok ? "PASS" : "FAIL") << "  " << c.title << "  (" << std::fixed
              << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << c.limit_s << " s)"
              << out.why.str() << std::endl;
  }
  return all ? 0 : 1;
}
