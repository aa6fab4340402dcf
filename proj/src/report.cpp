#include "pgv/report.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

#include "pgv/automorphism.hpp"
#include "pgv/coset.hpp"
#include "pgv/errors.hpp"
#include "pgv/graph.hpp"
#include "pgv/perm_group.hpp"
#include "pgv/symmetry.hpp"

namespace pgv {

Json to_json(const Integer& n) {
  if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(n);
  return to_decimal(n);
}

bool VerificationReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

const Claim* VerificationReport::find(const std::string& name) const {
  const auto it = std::find_if(claims.begin(), claims.end(), [&](const Claim& c) { return c.name == name; });
  return it == claims.end() ? nullptr : &*it;
}

Json VerificationReport::to_json() const {
  Json out;
  out["family"] = pgv::to_string(spec.family);
  out["p"] = spec.valency();
  out["deep"] = spec.deep;
  out["config"] = {{"vertex_budget", config.vertex_budget},
                   {"aut_vertex_limit", config.aut_vertex_limit},
                   {"enumeration_bound", config.enumeration_bound},
                   {"simplicity_budget", config.simplicity_budget},
                   {"threads", config.threads}};
  Json list = Json::array();
  for (const auto& c : claims) {
    list.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
  }
  out["claims"] = std::move(list);
  out["budget_notes"] = budget_notes;
  out["observations"] = observations;
  out["all_pass"] = all_pass();
  if (timings) out["timings_ms"] = *timings;
  return out;
}

namespace {

Integer factorial(std::uint64_t n) {
  Integer f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

struct Expected {
  Integer t_order, h_order, h_meet, d_size, g_order;
  std::uint64_t stabilizer_ell = 0;  // T_v = H has profile (p, 1, |H|/p)
  Integer aut_order, aut_stabilizer;
  std::uint64_t aut_ell = 0;
};

Expected expected_for(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::psl2_11: return {660, 11, 1, 121, 60, 1, 1320, 22, 2};
    case Family::psl2_29: return {12180, 203, 7, 5887, 60, 7, 24360, 406, 14};
    case Family::m23: return {10200960, 23, 1, 529, 443520, 1, 0, 0, 0};
    case Family::alt_p: {
      const std::uint64_t p = spec.p;
      // Aut is A_p x Z_2 or S_p; both have order p!.
      return {factorial(p) / 2, p, 1, Integer(p) * p, factorial(p - 1) / 2, 1, factorial(p), 2 * p, 2};
    }
  }
  return {};
}

class Recorder {
 public:
  explicit Recorder(VerificationReport& report) : report_(report) {}

  void claim(std::string name, Json expected, Json computed) {
    const bool pass = expected == computed;
    report_.claims.push_back({std::move(name), std::move(expected), std::move(computed), pass});
  }
  void check(std::string name, bool holds) { claim(std::move(name), true, holds); }

  template <class F>
  bool stage(const std::string& name, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      body();
      ok = true;
    } catch (const BudgetExceeded& e) {
      report_.budget_notes.push_back(name + ": " + e.what());
    } catch (const std::exception& e) {
      claim(name + ".completed", true, std::string("error: ") + e.what());
    }
    if (report_.timings) {
      (*report_.timings)[name] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return ok;
  }

  void note(std::string text) { report_.budget_notes.push_back(std::move(text)); }
  Json& observations() { return report_.observations; }

 private:
  VerificationReport& report_;
};

Json profile_json(const StabilizerProfile& s) {
  return Json::array({s.p, to_json(s.k), to_json(s.ell)});
}

// Image of l under the natural map Cay(G, S) -> Cos(T, H, D), l -> Hl.
// True iff it is a bijection that carries edges to edges.
bool cayley_map_is_isomorphism(const CosetGraph& cayley, const CosetGraph& coset) {
  const std::size_t n = cayley.graph.vertex_count();
  if (n != coset.graph.vertex_count()) return false;
  std::vector<Vertex> image(n);
  std::vector<char> hit(n, 0);
  for (Vertex l = 0; l < n; ++l) {
    image[l] = coset.space.coset_of(cayley.space.representative(l));
    if (hit[image[l]]) return false;
    hit[image[l]] = 1;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (const Vertex v : cayley.graph.neighbors(u)) {
      if (!coset.graph.has_edge(image[u], image[v])) return false;
    }
  }
  return cayley.graph.edge_count() == coset.graph.edge_count();
}

// Conjugation by c acts on T and fixes H and D. Used for Aut(T, H, D) when
// T = A_p, whose automorphisms are all conjugations inside S_p.
std::size_t count_symmetric_normalizers(const FamilyBundle& bundle, const DoubleCosetSet& d) {
  const std::size_t p = bundle.degree;
  std::vector<Point> images(p);
  std::iota(images.begin(), images.end(), Point{0});
  std::size_t count = 0;
  do {
    const Permutation c = Permutation::from_images(images);
    const bool fixes_h = std::all_of(bundle.H.generators().begin(), bundle.H.generators().end(),
                                     [&](const Permutation& h) { return bundle.H.contains(conjugate(h, c)); });
    if (!fixes_h) continue;
    const bool fixes_d = std::all_of(d.elements().begin(), d.elements().end(),
                                     [&](const Permutation& g) { return d.contains(conjugate(g, c)); });
    if (fixes_d) ++count;
  } while (std::next_permutation(images.begin(), images.end()));
  return count;
}

std::size_t center_order(const PermGroup& group, std::size_t bound) {
  std::size_t count = 0;
  for (const auto& z : group.elements(bound)) {
    const bool central = std::all_of(group.generators().begin(), group.generators().end(),
                                     [&](const Permutation& g) { return z * g == g * z; });
    if (central) ++count;
  }
  return count;
}

}  // namespace

VerificationReport verify_family(const FamilySpec& spec, const RunConfig& config) {
  spec.validate();
  config.validate();
  VerificationReport report;
  report.spec = spec;
  report.config = config;
  if (config.include_timings) report.timings = Json::object();

  Recorder rec(report);
  const Expected exp = expected_for(spec);
  const std::uint64_t p = spec.valency();
  const unsigned threads = config.effective_threads();
  const std::size_t simplicity_budget =
      spec.deep ? std::max<std::size_t>(config.simplicity_budget, 20000) : config.simplicity_budget;

  std::optional<FamilyBundle> bundle;
  std::optional<DoubleCosetSet> d;
  rec.stage("groups", [&] {
    bundle = build_family(spec);
    rec.claim("transcription_mismatches", Json::array(), transcription_mismatches(*bundle));
    rec.claim("T_order", to_json(exp.t_order), to_json(bundle->T.order()));
    rec.claim("H_order", to_json(exp.h_order), to_json(bundle->H.order()));
    rec.claim("G_order", to_json(exp.g_order), to_json(bundle->G.order()));
    rec.check("G_inside_T", bundle->G.is_subgroup_of(bundle->T));
    rec.check("p_not_dividing_G_order", bundle->G.order() % p != 0);

    std::vector<Permutation> conj;
    for (const auto& h : bundle->H.generators()) conj.push_back(conjugate(h, bundle->t));
    const PermGroup meet = subgroup_intersection_small(bundle->H, PermGroup(conj), config.enumeration_bound);
    rec.claim("H_meet_Ht_order", to_json(exp.h_meet), to_json(meet.order()));
    rec.claim("valency_from_index", p, to_json(bundle->H.order() / meet.order()));

    d = double_coset(bundle->H, bundle->t, config.enumeration_bound);
    rec.claim("HtH_size", to_json(exp.d_size), d->size());
    rec.check("HtH_inverse_closed", d->is_inverse_closed());
    rec.check("HtH_avoids_H", std::none_of(d->elements().begin(), d->elements().end(),
                                           [&](const Permutation& g) { return bundle->H.contains(g); }));
    if (spec.family == Family::psl2_29) rec.observations()["z_order"] = to_json(order(bundle->named.at("z")));
  });
  if (!bundle || !d) return report;

  rec.stage("T_simplicity", [&] {
    const SimplicityFingerprint f = simplicity_fingerprint(bundle->T, simplicity_budget);
    rec.check("T_perfect", f.perfect);
    if (f.exhaustive_simple) {
      rec.check("T_simple", *f.exhaustive_simple);
    } else {
      rec.note("T_simplicity: exhaustive sweep skipped, |T| = " + to_decimal(f.order) + " > simplicity budget " +
               std::to_string(simplicity_budget));
    }
  });

  std::vector<Permutation> s;
  rec.stage("connection_set", [&] {
    const ConnectionSet cs = connection_set(*d, bundle->G);
    s = cs.elements;
    rec.claim("S_size", p, s.size());
    rec.check("S_inverse_closed", cs.inverse_closed);
    rec.check("S_identity_free", !cs.contains_identity);
    if (spec.family == Family::alt_p) {
      auto closed = closed_form_S(p);
      std::sort(closed.begin(), closed.end());
      rec.check("S_equals_closed_form", closed == s);
      std::size_t long_support = 0, short_support = 0;
      for (const auto& g : s) {
        const std::size_t k = support(g);
        if (k == p - 2) ++long_support;
        if (k == 4) ++short_support;
      }
      rec.claim("S_support_split", Json::array({4, p - 4}), Json::array({long_support, short_support}));
    }
  });

  if (spec.family == Family::alt_p) {
    rec.stage("h_checks", [&] {
      const AltHChecks h = alt_p_h_checks(p);
      rec.check("h_inverts_x", h.x_inverted);
      rec.check("t_h_formula", h.t_image_formula);
      rec.check("t_h_in_involutions", h.t_image_in_involutions);
      rec.claim("h_parity", p % 4 == 1 ? "even" : "odd",
                parity(bundle->named.at("h")) == Parity::even ? "even" : "odd");
      rec.check("h_parity_matches_p_mod_4", h.parity_matches);
      rec.check("h_fixes_HtH", h.connection_fixed);
    });
    if (p >= 11) {
      rec.stage("support_table", [&] { rec.check("support_table", support_table_check(p)); });
      rec.stage("sigma_cycle", [&] { rec.check("sigma_is_p_cycle", sigma_cycle_check(p)); });
    }
  }

  if (spec.family == Family::m23) {
    rec.stage("m23_checks", [&] {
      const M23DeepChecks m = m23_deep_checks(*bundle, s);
      rec.claim("S_matches_printed_count", 23, m.s_size);
      rec.check("S_equals_printed", m.s_matches_printed);
      rec.observations()["S_cubed_size"] = m.s_cubed_size;
      rec.check("s1_squared_not_in_S_cubed", !m.s1_squared_in_s_cubed);
      rec.claim("b_order", 11, to_json(m.b_order));
      rec.check("b_fixes_H", m.b_fixes_subgroup);
      rec.check("b_moves_HtH", !m.b_fixes_connection);
      rec.claim("s11_order", 5, to_json(m.s11_order));
      rec.check("s11_five_cycle", m.five_cycle);
    });
  }

  std::optional<CosetGraph> cg;
  if (!spec.graph_allowed()) {
    rec.note("graph: alt-p with p >= 11 has " + to_decimal(exp.g_order) +
             " vertices; pass --deep with a vertex budget at least that large");
  } else {
    rec.stage("graph", [&] {
      cg = coset_graph(bundle->T, bundle->H, *d, config);
      const GraphPredicates pred = graph_predicates(cg->graph);
      rec.claim("vertices", to_json(exp.g_order), cg->graph.vertex_count());
      rec.claim("valency", p, pred.valency ? Json(*pred.valency) : Json("irregular"));
      rec.claim("edges", to_json(exp.g_order * p / 2), cg->graph.edge_count());
      rec.check("connected", pred.connected);
      rec.check("non_bipartite", !pred.bipartite);
    });
  }

  std::optional<GroupAction> g_action;
  if (cg) {
    rec.stage("actions", [&] {
      rec.claim("T_arc_orbit_size", cg->graph.arc_count(), arc_orbit_size(cg->graph, cg->action));
      g_action = cg->space.action_of(bundle->G, threads);
      rec.claim("G_action", "regular", to_string(is_regular_action(*g_action)));
      const GroupAction tv = cg->space.action_of(bundle->H, threads);
      const StabilizerProfile prof = stabilizer_profile(tv, cg->graph, 0, config.enumeration_bound);
      rec.claim("T_stabilizer_profile", Json::array({p, 1, exp.stabilizer_ell}), profile_json(prof));
      rec.check("T_stabilizer_profile_structure", prof.holds());
      rec.check("T_solvability_transfer", solvability_transfer_check(tv, cg->graph, 0));
    });

    if (spec.family != Family::m23 || spec.deep) {
      rec.stage("cayley_isomorphism", [&] {
        const CosetGraph cay = cayley_graph(bundle->G, s, config);
        rec.check("cayley_map_is_isomorphism", cayley_map_is_isomorphism(cay, *cg));
      });
    } else {
      rec.note("cayley_isomorphism: explicit Cay(G,S) check on 443520 vertices runs with --deep");
    }

    if (cg->graph.vertex_count() > config.aut_vertex_limit) {
      rec.note("automorphisms: " + std::to_string(cg->graph.vertex_count()) + " vertices > aut_vertex_limit " +
               std::to_string(config.aut_vertex_limit));
    } else if (g_action) {
      rec.stage("automorphisms", [&] {
        const AutResult aut = automorphism_group(cg->graph, config.aut_vertex_limit);
        rec.claim("aut_order", to_json(exp.aut_order), to_json(aut.group.order()));
        rec.check("aut_vertex_transitive", aut.vertex_transitive);
        const PermGroup stab = aut.group.point_stabilizer(0);
        rec.claim("aut_stabilizer_order", to_json(exp.aut_stabilizer), to_json(stab.order()));
        rec.check("aut_stabilizer_solvable", is_solvable(stab));
        const StabilizerProfile prof = stabilizer_profile(stab, cg->graph, 0, config.enumeration_bound);
        rec.claim("aut_stabilizer_profile", Json::array({p, 1, exp.aut_ell}), profile_json(prof));
        rec.check("aut_stabilizer_profile_structure", prof.holds());
        rec.check("aut_solvability_transfer", solvability_transfer_check(natural_action(stab), cg->graph, 0));

        const RegularClassification cls = classify_by_regular_subgroup(cg->graph, *g_action, aut, simplicity_budget);
        rec.check("G_not_normal_in_aut", cls.branch == Branch::overgroup);
        rec.claim("branch", "overgroup", to_string(cls.branch));
        rec.claim("branch_T_order", to_json(exp.t_order), cls.t_order ? to_json(*cls.t_order) : Json(nullptr));
        rec.check("branch_T_arc_transitive", cls.t_arc_transitive);

        const CosetGraph cay = cayley_graph(bundle->G, s, config);
        rec.check("cayley_canonical_form_matches",
                  automorphism_group(cay.graph, config.aut_vertex_limit).canonical_graph == aut.canonical_graph);

        if (spec.family == Family::alt_p && p <= 7) {
          const std::size_t normalizers = count_symmetric_normalizers(*bundle, *d);
          rec.claim("aut_THD_order", 2 * p, normalizers);
          rec.claim("aut_order_from_THD", to_json(aut.group.order()),
                    to_json(bundle->T.order() * normalizers / bundle->H.order()));
          rec.claim("aut_center_order", p % 4 == 1 ? 2 : 1, center_order(aut.group, config.enumeration_bound));

          const Permutation& h = bundle->named.at("h");
          std::vector<Point> images(cg->graph.vertex_count());
          for (Vertex v = 0; v < images.size(); ++v) {
            images[v] = cg->space.coset_of(conjugate(cg->space.representative(v), h));
          }
          rec.check("h_induces_automorphism", cg->graph.is_automorphism(Permutation::from_images(std::move(images))));
        }
      });
    }
  }
  return report;
}

}  // namespace pgv
