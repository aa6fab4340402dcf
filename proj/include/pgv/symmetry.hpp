#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pgv/automorphism.hpp"
#include "pgv/coset.hpp"
#include "pgv/graph.hpp"
#include "pgv/perm_group.hpp"

namespace pgv {

// Throws std::invalid_argument when an image does not preserve the edge set.
void require_edge_preserving(const SymGraph& graph, const GroupAction& action);

// Size of the orbit of the arc (0, first neighbour of 0) under the action.
std::size_t arc_orbit_size(const SymGraph& graph, const GroupAction& action);
bool is_arc_transitive(const SymGraph& graph, const GroupAction& action);

enum class Regularity { regular, semiregular, neither };
std::string to_string(Regularity r);
// Semiregular iff every orbit has length |group|.
Regularity is_regular_action(const GroupAction& action);

// The action of a permutation group on its own points, as a GroupAction.
GroupAction natural_action(const PermGroup& group);

// A vertex stabilizer given abstractly: `stabilizer.group` may live on any
// domain, `stabilizer.generator_images` are its images on the vertices.
struct LocalAction {
  PermGroup image;      // on positions of the sorted neighbour list
  PermGroup kernel;     // elements fixing every neighbour, in stabilizer.group's domain
  Integer kernel_order;
};

// Throws std::invalid_argument if some generator moves v.
LocalAction local_action(const GroupAction& stabilizer, const SymGraph& graph, Vertex v);
LocalAction local_action(const PermGroup& stabilizer_on_vertices, const SymGraph& graph, Vertex v);

struct StabilizerProfile {
  std::size_t p = 0;
  Integer k;
  Integer ell;
  Integer order;
  bool unique_sylow_p = false;
  bool kernel_cyclic = false;
  bool local_transitive = false;
  bool divisibility = false;  // k | ell | p - 1 and order = p k ell

  bool holds() const { return unique_sylow_p && kernel_cyclic && local_transitive && divisibility; }
};

// Structure of a solvable stabilizer of a prime-valent arc-transitive graph.
// Throws std::invalid_argument for composite or small valency or a nonsolvable
// stabilizer, VerificationError when a structural check fails.
StabilizerProfile stabilizer_profile(const GroupAction& stabilizer, const SymGraph& graph, Vertex v,
                                     std::size_t enumeration_bound = 1000000);
StabilizerProfile stabilizer_profile(const PermGroup& stabilizer_on_vertices, const SymGraph& graph, Vertex v,
                                     std::size_t enumeration_bound = 1000000);

// solvable(G_v) == solvable(local action of G_v) for a vertex-transitive action.
bool solvability_transfer_check(const SymGraph& graph, const GroupAction& action, Vertex v);
bool solvability_transfer_check(const GroupAction& stabilizer, const SymGraph& graph, Vertex v);

struct NormalizerCheck {
  Permutation candidate;
  bool fixes_subgroup = false;    // H^c = H
  bool fixes_connection = false;  // D^c = D
};

// Throws std::invalid_argument on degree mismatch.
std::vector<NormalizerCheck> normalizer_formula_check(const PermGroup& group, const PermGroup& subgroup,
                                                      const DoubleCosetSet& connection,
                                                      const std::vector<Permutation>& candidates);

// k | ell | p - 1 and k = ell (mod 2). Throws std::invalid_argument unless p is
// a prime >= 5.
bool triple_passes_arithmetic_filter(std::uint64_t p, std::uint64_t k, std::uint64_t ell);

enum class TripleStatus { excluded, known_conceivable, known_not_conceivable, open };
std::string to_string(TripleStatus s);
// The arithmetic filter refined by the published classifications for p = 5
// and p = 7 and the (p, 1, 1) family.
TripleStatus triple_status(std::uint64_t p, std::uint64_t k, std::uint64_t ell);
// True unless the triple is excluded by the filter or known not conceivable.
bool conceivable_triple_check(std::uint64_t p, std::uint64_t k, std::uint64_t ell);

enum class Branch { normal, overgroup };
std::string to_string(Branch b);

struct RegularClassification {
  Branch branch = Branch::normal;
  Integer aut_order;
  Integer stabilizer_order;
  bool stabilizer_solvable = false;
  std::optional<Integer> t_order;
  std::optional<SimplicityFingerprint> t_fingerprint;
  bool t_arc_transitive = false;
};

// Decides whether the regular group is normal in Aut(graph); otherwise reports
// its normal closure T in Aut(graph). `aut` may be passed to reuse a search.
// Throws std::invalid_argument when the action is not regular or the
// Aut stabilizer is nonsolvable.
RegularClassification classify_by_regular_subgroup(const SymGraph& graph, const GroupAction& regular, const AutResult& aut,
                                 std::size_t simplicity_budget = 10000);
RegularClassification classify_by_regular_subgroup(const SymGraph& graph, const GroupAction& regular, std::size_t vertex_limit = 10000,
                                 std::size_t simplicity_budget = 10000);

}  // namespace pgv
