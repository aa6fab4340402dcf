#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "pgv/integer.hpp"
#include "pgv/permutation.hpp"

namespace pgv {

// A permutation group given by generators, with a base and strong generating
// set built eagerly by deterministic Schreier-Sims. Immutable once built.
class PermGroup {
 public:
  // Throws std::invalid_argument on an empty list or mixed degrees.
  explicit PermGroup(std::vector<Permutation> generators);
  // base_prefix is placed at the front of the base; further base points are
  // chosen smallest-moved-point-first.
  PermGroup(std::vector<Permutation> generators, std::vector<Point> base_prefix);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const Integer& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;
  // Fundamental orbit lengths, one per base point.
  std::vector<std::size_t> transversal_sizes() const;

  // Throws std::invalid_argument on degree mismatch.
  bool contains(const Permutation& g) const;
  bool contains_all(const std::vector<Permutation>& gs) const;
  bool is_subgroup_of(const PermGroup& other) const;

  // Throws std::out_of_range for a point outside {0..n-1}.
  std::vector<Point> orbit(Point point) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;
  PermGroup point_stabilizer(Point point) const;

  // All elements in a deterministic order. Throws BudgetExceeded when the
  // order is above bound.
  std::vector<Permutation> elements(std::size_t bound) const;
  Permutation random_element(std::mt19937_64& rng) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;  // point -> index into orbit, -1 if absent
    std::vector<Permutation> transversal;
    std::vector<Permutation> transversal_inverse;
  };

  void build(std::vector<Point> base_prefix);
  void compute_orbit(Level& level) const;
  // Strips g through the chain starting at `from`; returns the residue and the
  // level at which it dropped out (chain_.size() when it sifted through).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> chain_;
  Integer order_ = 1;
};

// Normal closure of `gens` under conjugation by the generators of `ambient`.
PermGroup normal_closure(const std::vector<Permutation>& gens, const PermGroup& ambient);
PermGroup derived_subgroup(const PermGroup& group);

struct DerivedSeries {
  std::vector<PermGroup> chain;  // G = chain[0] > chain[1] > ... stable term last

  bool is_solvable() const { return chain.back().is_trivial(); }
  bool is_perfect() const { return chain.size() == 1 && !chain.front().is_trivial(); }
};

DerivedSeries derived_series(const PermGroup& group);
bool is_solvable(const PermGroup& group);

// Throws std::invalid_argument unless N's generators lie in G.
bool is_normal_in(const PermGroup& normal, const PermGroup& group);

struct SimplicityFingerprint {
  bool perfect = false;
  std::optional<bool> exhaustive_simple;  // empty when the order exceeds the budget
  Integer order;
};

SimplicityFingerprint simplicity_fingerprint(const PermGroup& group, std::size_t budget);

// The double coset H t H as an explicit, deduplicated element set.
class DoubleCosetSet {
 public:
  DoubleCosetSet(PermGroup left, Permutation middle, std::vector<Permutation> elements);

  const PermGroup& left() const { return left_; }
  const Permutation& middle() const { return middle_; }
  // Sorted lexicographically by image table.
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Permutation& g) const { return lookup_.count(g) != 0; }
  bool is_inverse_closed() const;

 private:
  PermGroup left_;
  Permutation middle_;
  std::vector<Permutation> elements_;
  std::unordered_set<Permutation, PermutationHash> lookup_;
};

// Throws BudgetExceeded when |H| > bound.
DoubleCosetSet double_coset(const PermGroup& subgroup, const Permutation& t, std::size_t bound = 1000000);

// H ∩ K by enumerating the smaller group and sifting through the larger.
PermGroup subgroup_intersection_small(const PermGroup& a, const PermGroup& b, std::size_t bound = 1000000);

// The largest subgroup of the enumerated subgroup that is normal in `group`,
// returned as its element set.
std::vector<Permutation> core_elements(const PermGroup& group, const std::vector<Permutation>& subgroup_elements);

bool is_prime(std::uint64_t n);
// Exponent of p in n!. Throws std::invalid_argument if p is not prime.
std::uint64_t nu_factorial(std::uint64_t n, std::uint64_t p);

}  // namespace pgv
