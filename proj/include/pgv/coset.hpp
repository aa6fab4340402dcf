#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pgv/config.hpp"
#include "pgv/graph.hpp"
#include "pgv/perm_group.hpp"
#include "pgv/permutation.hpp"

namespace pgv {

// A group acting on {0..space_size-1} through explicit generator images.
struct GroupAction {
  PermGroup group;
  std::size_t space_size = 0;
  std::vector<Permutation> generator_images;  // one per group.generators()[i]

  // Orbit of a point under the images, in discovery order.
  std::vector<Vertex> orbit(Vertex point) const;
  std::vector<std::vector<Vertex>> orbits() const;
  // The permutation group on the space generated by the images. Only sensible
  // for small spaces: its stabilizer chain stores explicit transversals.
  PermGroup image_group() const;
};

// The right cosets [G:H]. A coset is keyed by its lexicographically least
// element, which also serves as its representative. Vertex ids follow
// breadth-first discovery from H under right multiplication by G's generators.
class CosetSpace {
 public:
  const PermGroup& group() const { return group_; }
  const PermGroup& subgroup() const { return subgroup_; }
  const std::vector<Permutation>& subgroup_elements() const { return subgroup_elements_; }
  std::size_t size() const { return size_; }
  std::size_t degree() const { return degree_; }

  Permutation representative(Vertex v) const;
  // Canonical key (least element) of the coset H g.
  Permutation canonical_key(const Permutation& g) const;
  // Vertex id of H g, or nullopt if g is outside G's cosets seen so far.
  std::optional<Vertex> index_of(const Permutation& g) const;
  // Throws std::invalid_argument when g is not in G.
  Vertex coset_of(const Permutation& g) const;

  // The permutation Hx -> Hxg of the coset space.
  Permutation right_multiplication(const Permutation& g, unsigned threads = 1) const;
  // Images of the given group's generators; the group must lie in G.
  GroupAction action_of(const PermGroup& subgroup_of_g, unsigned threads = 1) const;
  // The action of G recorded during enumeration.
  const GroupAction& action() const { return action_; }

 private:
  friend CosetSpace enumerate_cosets(const PermGroup&, const PermGroup&, const RunConfig&);

  CosetSpace(PermGroup group, PermGroup subgroup);

  void key_into(std::span<const Point> g, std::span<Point> out) const;
  std::optional<Vertex> lookup(std::span<const Point> key) const;
  Vertex insert(std::span<const Point> key);
  std::span<const Point> key_of(Vertex v) const {
    return {keys_.data() + static_cast<std::size_t>(v) * degree_, degree_};
  }
  void grow_table();

  PermGroup group_;
  PermGroup subgroup_;
  std::vector<Permutation> subgroup_elements_;
  std::size_t degree_ = 0;
  std::size_t size_ = 0;
  std::vector<Point> keys_;         // size_ * degree_, row v is the key of vertex v
  std::vector<std::uint32_t> table_;  // open addressing, stores vertex + 1
  GroupAction action_;
};

// Throws BudgetExceeded when |G|/|H| exceeds config.vertex_budget or |H|
// exceeds config.enumeration_bound, std::invalid_argument when H is not in G.
CosetSpace enumerate_cosets(const PermGroup& group, const PermGroup& subgroup, const RunConfig& config = {});

struct CosetGraph {
  CosetSpace space;
  SymGraph graph;
  GroupAction action;  // right multiplication by G
};

// Cos(G, H, D). D must be inverse-closed, avoid H, and be a union of double
// cosets of H; valency is |D|/|H|.
CosetGraph coset_graph(const PermGroup& group, const PermGroup& subgroup, const DoubleCosetSet& connection,
                       const RunConfig& config = {});
// Same construction from an explicit element set.
CosetGraph coset_graph(const PermGroup& group, const PermGroup& subgroup, const std::vector<Permutation>& connection,
                       const RunConfig& config = {});

struct ConnectionSet {
  std::vector<Permutation> elements;  // sorted
  bool inverse_closed = true;
  bool contains_identity = false;
  bool empty() const { return elements.empty(); }
};

// S = L ∩ D by membership filtering.
ConnectionSet connection_set(const DoubleCosetSet& connection, const PermGroup& regular);

// Cay(L, S): vertices are elements of L (breadth-first from the identity),
// g ~ s g. Throws std::invalid_argument if S is not inverse-closed, contains
// the identity, or leaves L.
CosetGraph cayley_graph(const PermGroup& group, const std::vector<Permutation>& connection,
                        const RunConfig& config = {});

// Elements h of H acting trivially on every coset (rep h rep^-1 in H for all reps).
std::vector<Permutation> coset_action_kernel(const CosetSpace& space);

}  // namespace pgv
