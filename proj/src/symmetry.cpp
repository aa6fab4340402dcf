#include "pgv/symmetry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "pgv/errors.hpp"

namespace pgv {

void require_edge_preserving(const SymGraph& graph, const GroupAction& action) {
  if (action.space_size != graph.vertex_count())
    throw std::invalid_argument("action space and graph have different sizes");
  for (const auto& g : action.generator_images) {
    if (!graph.is_automorphism(g)) throw std::invalid_argument("action does not preserve the edge set");
  }
}

std::size_t arc_orbit_size(const SymGraph& graph, const GroupAction& action) {
  require_edge_preserving(graph, action);
  const std::size_t arcs = graph.arc_count();
  if (arcs == 0) return 0;
  if (arcs > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("too many arcs");
  const std::size_t n = graph.vertex_count();
  auto source = [&](std::size_t arc) {
    Vertex lo = 0, hi = static_cast<Vertex>(n);  // last vertex whose first arc is <= arc
    while (hi - lo > 1) {
      const Vertex mid = lo + (hi - lo) / 2;
      if (graph.arc_offset(mid) <= arc) lo = mid;
      else hi = mid;
    }
    return lo;
  };

  Vertex start = 0;
  while (graph.degree(start) == 0) ++start;
  std::vector<char> seen(arcs, 0);
  std::vector<std::uint32_t> orbit{static_cast<std::uint32_t>(graph.arc_offset(start))};
  seen[orbit[0]] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    const std::size_t arc = orbit[i];
    const Vertex u = source(arc);
    const Vertex v = graph.neighbors(u)[arc - graph.arc_offset(u)];
    for (const auto& g : action.generator_images) {
      const auto image = graph.arc_index(g(u), g(v));
      if (!image) throw std::logic_error("edge-preserving image lost an arc");
      if (!seen[*image]) {
        seen[*image] = 1;
        orbit.push_back(static_cast<std::uint32_t>(*image));
      }
    }
  }
  return orbit.size();
}

bool is_arc_transitive(const SymGraph& graph, const GroupAction& action) {
  return graph.arc_count() > 0 && arc_orbit_size(graph, action) == graph.arc_count();
}

std::string to_string(Regularity r) {
  switch (r) {
    case Regularity::regular: return "regular";
    case Regularity::semiregular: return "semiregular";
    case Regularity::neither: return "neither";
  }
  return "neither";
}

Regularity is_regular_action(const GroupAction& action) {
  const auto orbits = action.orbits();
  const Integer& order = action.group.order();
  for (const auto& o : orbits) {
    if (Integer(o.size()) != order) return Regularity::neither;
  }
  return orbits.size() == 1 ? Regularity::regular : Regularity::semiregular;
}

GroupAction natural_action(const PermGroup& group) {
  return GroupAction{group, group.degree(), group.generators()};
}

LocalAction local_action(const GroupAction& stabilizer, const SymGraph& graph, Vertex v) {
  const auto nbrs = graph.neighbors(v);
  const std::size_t p = nbrs.size();
  if (p == 0) throw std::invalid_argument("local action of an isolated vertex");
  const std::size_t d = stabilizer.group.degree();
  const auto& gens = stabilizer.group.generators();

  std::vector<Permutation> local, diagonal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Permutation& img = stabilizer.generator_images[i];
    if (img(v) != v) throw std::invalid_argument("stabilizer generator moves the vertex");
    std::vector<Point> restricted(p), joined(d + p);
    for (std::size_t j = 0; j < p; ++j) {
      const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), img(nbrs[j]));
      if (it == nbrs.end() || *it != img(nbrs[j])) throw std::invalid_argument("stabilizer does not preserve the neighbourhood");
      restricted[j] = static_cast<Point>(it - nbrs.begin());
    }
    for (std::size_t j = 0; j < d; ++j) joined[j] = gens[i](static_cast<Point>(j));
    for (std::size_t j = 0; j < p; ++j) joined[d + j] = static_cast<Point>(d + restricted[j]);
    local.push_back(Permutation::from_images(std::move(restricted)));
    diagonal.push_back(Permutation::from_images(std::move(joined)));
  }
  PermGroup image = local.empty() ? PermGroup::trivial(p) : PermGroup(local);

  // Kernel: pointwise stabilizer of the neighbour block inside the diagonal group.
  PermGroup joined = diagonal.empty() ? PermGroup::trivial(d + p) : PermGroup(diagonal);
  for (std::size_t j = 0; j < p && !joined.is_trivial(); ++j) joined = joined.point_stabilizer(static_cast<Point>(d + j));
  std::vector<Permutation> kernel_gens;
  for (const auto& g : joined.generators()) {
    std::vector<Point> part(g.images().begin(), g.images().begin() + static_cast<std::ptrdiff_t>(d));
    Permutation k = Permutation::from_images(std::move(part));
    if (!k.is_identity()) kernel_gens.push_back(std::move(k));
  }
  PermGroup kernel = kernel_gens.empty() ? PermGroup::trivial(d) : PermGroup(kernel_gens);
  Integer kernel_order = kernel.order();
  if (kernel_order * image.order() != stabilizer.group.order())
    throw VerificationError("local action and kernel orders do not multiply to the stabilizer order");
  return LocalAction{std::move(image), std::move(kernel), std::move(kernel_order)};
}

LocalAction local_action(const PermGroup& stabilizer_on_vertices, const SymGraph& graph, Vertex v) {
  return local_action(natural_action(stabilizer_on_vertices), graph, v);
}

StabilizerProfile stabilizer_profile(const GroupAction& stabilizer, const SymGraph& graph, Vertex v,
                                     std::size_t enumeration_bound) {
  const std::size_t p = graph.degree(v);
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("stabilizer profile needs prime valency >= 5");
  if (!is_solvable(stabilizer.group)) throw std::invalid_argument("stabilizer is not solvable");
  const LocalAction local = local_action(stabilizer, graph, v);

  StabilizerProfile profile;
  profile.p = p;
  profile.order = stabilizer.group.order();
  profile.k = local.kernel_order;
  const Integer& image_order = local.image.order();
  profile.local_transitive = local.image.is_transitive() && image_order % p == 0;
  profile.ell = image_order / p;

  const auto kernel_elements = local.kernel.elements(enumeration_bound);
  profile.kernel_cyclic = std::any_of(kernel_elements.begin(), kernel_elements.end(),
                                      [&](const Permutation& g) { return order(g) == profile.k; });

  const Integer pm1 = p - 1;
  profile.divisibility = profile.ell != 0 && profile.ell % profile.k == 0 && pm1 % profile.ell == 0 &&
                         profile.order == Integer(p) * profile.k * profile.ell;

  std::size_t order_p = 0;
  for (const auto& g : stabilizer.group.elements(enumeration_bound)) order_p += order(g) == p;
  profile.unique_sylow_p = order_p == p - 1;

  if (!profile.holds()) {
    std::string failed;
    if (!profile.unique_sylow_p) failed += " sylow";
    if (!profile.kernel_cyclic) failed += " kernel";
    if (!profile.local_transitive) failed += " local";
    if (!profile.divisibility) failed += " divisibility";
    throw VerificationError("stabilizer structure check failed:" + failed);
  }
  return profile;
}

StabilizerProfile stabilizer_profile(const PermGroup& stabilizer_on_vertices, const SymGraph& graph, Vertex v,
                                     std::size_t enumeration_bound) {
  return stabilizer_profile(natural_action(stabilizer_on_vertices), graph, v, enumeration_bound);
}

bool solvability_transfer_check(const GroupAction& stabilizer, const SymGraph& graph, Vertex v) {
  const LocalAction local = local_action(stabilizer, graph, v);
  return is_solvable(stabilizer.group) == is_solvable(local.image);
}

bool solvability_transfer_check(const SymGraph& graph, const GroupAction& action, Vertex v) {
  require_edge_preserving(graph, action);
  const PermGroup stabilizer = action.image_group().point_stabilizer(v);
  return solvability_transfer_check(natural_action(stabilizer), graph, v);
}

std::vector<NormalizerCheck> normalizer_formula_check(const PermGroup& group, const PermGroup& subgroup,
                                                      const DoubleCosetSet& connection,
                                                      const std::vector<Permutation>& candidates) {
  if (group.degree() != subgroup.degree() || connection.left().degree() != group.degree())
    throw std::invalid_argument("degree mismatch in normalizer check");
  std::vector<NormalizerCheck> out;
  for (const auto& c : candidates) {
    if (c.degree() != group.degree()) throw std::invalid_argument("candidate has the wrong degree");
    NormalizerCheck check{c};
    check.fixes_subgroup = std::all_of(subgroup.generators().begin(), subgroup.generators().end(),
                                       [&](const Permutation& h) { return subgroup.contains(conjugate(h, c)); });
    check.fixes_connection = std::all_of(connection.elements().begin(), connection.elements().end(),
                                         [&](const Permutation& d) { return connection.contains(conjugate(d, c)); });
    out.push_back(std::move(check));
  }
  return out;
}

bool triple_passes_arithmetic_filter(std::uint64_t p, std::uint64_t k, std::uint64_t ell) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("triple check needs a prime p >= 5");
  if (k == 0 || ell == 0) return false;
  return ell % k == 0 && (p - 1) % ell == 0 && k % 2 == ell % 2;
}

std::string to_string(TripleStatus s) {
  switch (s) {
    case TripleStatus::excluded: return "excluded";
    case TripleStatus::known_conceivable: return "known_conceivable";
    case TripleStatus::known_not_conceivable: return "known_not_conceivable";
    case TripleStatus::open: return "open";
  }
  return "open";
}

TripleStatus triple_status(std::uint64_t p, std::uint64_t k, std::uint64_t ell) {
  if (!triple_passes_arithmetic_filter(p, k, ell)) return TripleStatus::excluded;
  if (k == 1 && ell == 1) return TripleStatus::known_conceivable;
  if (p == 5) {
    if (ell == 4 && k == 2) return TripleStatus::known_conceivable;
    if (ell == 2 && k == 2) return TripleStatus::known_not_conceivable;
  }
  if (p == 7) {
    // Complete list for valency 7: (ell, k) in {(1,1), (3,1), (3,3), (6,2)}.
    const bool listed = (ell == 3 && (k == 1 || k == 3)) || (ell == 6 && k == 2);
    return listed ? TripleStatus::known_conceivable : TripleStatus::known_not_conceivable;
  }
  return TripleStatus::open;
}

bool conceivable_triple_check(std::uint64_t p, std::uint64_t k, std::uint64_t ell) {
  const TripleStatus s = triple_status(p, k, ell);
  return s != TripleStatus::excluded && s != TripleStatus::known_not_conceivable;
}

std::string to_string(Branch b) { return b == Branch::normal ? "normal" : "overgroup"; }

RegularClassification classify_by_regular_subgroup(const SymGraph& graph, const GroupAction& regular, const AutResult& aut,
                                 std::size_t simplicity_budget) {
  require_edge_preserving(graph, regular);
  if (is_regular_action(regular) != Regularity::regular) throw std::invalid_argument("group is not regular on the vertices");
  const PermGroup& a = aut.group;
  const PermGroup r = regular.image_group();
  if (!r.is_subgroup_of(a)) throw std::logic_error("regular group is not inside the automorphism group");

  RegularClassification result;
  result.aut_order = a.order();
  const PermGroup stabilizer = a.point_stabilizer(0);
  result.stabilizer_order = stabilizer.order();
  result.stabilizer_solvable = is_solvable(stabilizer);
  if (!result.stabilizer_solvable) throw std::invalid_argument("automorphism stabilizer is not solvable");

  bool normal = true;
  for (const auto& g : a.generators()) {
    for (const auto& x : r.generators()) normal = normal && r.contains(conjugate(x, g));
  }
  if (normal) {
    result.branch = Branch::normal;
    return result;
  }
  result.branch = Branch::overgroup;
  const PermGroup t = normal_closure(r.generators(), a);
  result.t_order = t.order();
  result.t_arc_transitive = is_arc_transitive(graph, natural_action(t));
  result.t_fingerprint = simplicity_fingerprint(t, simplicity_budget);
  return result;
}

RegularClassification classify_by_regular_subgroup(const SymGraph& graph, const GroupAction& regular, std::size_t vertex_limit,
                                 std::size_t simplicity_budget) {
  return classify_by_regular_subgroup(graph, regular, automorphism_group(graph, vertex_limit), simplicity_budget);
}

}  // namespace pgv
