#include "pgv/coset.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "pgv/errors.hpp"
#include "pgv/parallel.hpp"

namespace pgv {

namespace {

std::uint64_t hash_points(std::span<const Point> key) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ key.size();
  for (const Point p : key) {
    h ^= p + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return h ^ (h >> 29);
}

PermGroup group_from_images(const std::vector<Permutation>& images, std::size_t space_size) {
  if (images.empty()) return PermGroup::trivial(space_size);
  return PermGroup(images);
}

}  // namespace

std::vector<Vertex> GroupAction::orbit(Vertex point) const {
  if (point >= space_size) throw std::out_of_range("orbit point outside the action's space");
  std::vector<char> seen(space_size, 0);
  std::vector<Vertex> result{point};
  seen[point] = 1;
  for (std::size_t i = 0; i < result.size(); ++i) {
    for (const auto& g : generator_images) {
      const Vertex next = g(result[i]);
      if (!seen[next]) {
        seen[next] = 1;
        result.push_back(next);
      }
    }
  }
  return result;
}

std::vector<std::vector<Vertex>> GroupAction::orbits() const {
  std::vector<char> seen(space_size, 0);
  std::vector<std::vector<Vertex>> result;
  for (Vertex v = 0; v < space_size; ++v) {
    if (seen[v]) continue;
    auto o = orbit(v);
    for (const Vertex w : o) seen[w] = 1;
    result.push_back(std::move(o));
  }
  return result;
}

PermGroup GroupAction::image_group() const { return group_from_images(generator_images, space_size); }

CosetSpace::CosetSpace(PermGroup group, PermGroup subgroup)
    : group_(std::move(group)),
      subgroup_(std::move(subgroup)),
      degree_(group_.degree()),
      action_{group_, 0, {}} {}

void CosetSpace::key_into(std::span<const Point> g, std::span<Point> out) const {
  // Candidate for h is i -> g(h(i)); keep the lexicographically least one.
  bool first = true;
  for (const auto& h : subgroup_elements_) {
    const auto hi = h.images();
    if (first) {
      for (std::size_t i = 0; i < degree_; ++i) out[i] = g[hi[i]];
      first = false;
      continue;
    }
    std::size_t i = 0;
    while (i < degree_ && g[hi[i]] == out[i]) ++i;
    if (i < degree_ && g[hi[i]] < out[i]) {
      for (; i < degree_; ++i) out[i] = g[hi[i]];
    }
  }
}

std::optional<Vertex> CosetSpace::lookup(std::span<const Point> key) const {
  if (table_.empty()) return std::nullopt;
  const std::size_t mask = table_.size() - 1;
  for (std::size_t slot = hash_points(key) & mask;; slot = (slot + 1) & mask) {
    const std::uint32_t entry = table_[slot];
    if (entry == 0) return std::nullopt;
    const auto stored = key_of(entry - 1);
    if (std::equal(stored.begin(), stored.end(), key.begin())) return entry - 1;
  }
}

void CosetSpace::grow_table() {
  std::vector<std::uint32_t> next(std::max<std::size_t>(64, table_.size() * 2), 0);
  const std::size_t mask = next.size() - 1;
  for (Vertex v = 0; v < size_; ++v) {
    std::size_t slot = hash_points(key_of(v)) & mask;
    while (next[slot] != 0) slot = (slot + 1) & mask;
    next[slot] = v + 1;
  }
  table_ = std::move(next);
}

Vertex CosetSpace::insert(std::span<const Point> key) {
  if (2 * (size_ + 1) > table_.size()) grow_table();
  const auto v = static_cast<Vertex>(size_);
  keys_.insert(keys_.end(), key.begin(), key.end());
  ++size_;
  const std::size_t mask = table_.size() - 1;
  std::size_t slot = hash_points(key) & mask;
  while (table_[slot] != 0) slot = (slot + 1) & mask;
  table_[slot] = v + 1;
  return v;
}

Permutation CosetSpace::representative(Vertex v) const {
  if (v >= size_) throw std::out_of_range("coset index out of range");
  const auto key = key_of(v);
  return Permutation::from_images(std::vector<Point>(key.begin(), key.end()));
}

Permutation CosetSpace::canonical_key(const Permutation& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("degree mismatch in canonical_key");
  std::vector<Point> out(degree_);
  key_into(g.images(), out);
  return Permutation::from_images(std::move(out));
}

std::optional<Vertex> CosetSpace::index_of(const Permutation& g) const {
  if (g.degree() != degree_) return std::nullopt;
  std::vector<Point> out(degree_);
  key_into(g.images(), out);
  return lookup(out);
}

Vertex CosetSpace::coset_of(const Permutation& g) const {
  if (!group_.contains(g)) throw std::invalid_argument("element is not in the group");
  const auto v = index_of(g);
  if (!v) throw std::logic_error("coset missing from an enumerated coset space");
  return *v;
}

Permutation CosetSpace::right_multiplication(const Permutation& g, unsigned threads) const {
  if (g.degree() != degree_) throw std::invalid_argument("degree mismatch in right_multiplication");
  std::vector<Point> images(size_);
  const auto gi = g.images();
  parallel_for(size_, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<Point> product(degree_), key(degree_);
    for (std::size_t v = begin; v < end; ++v) {
      const auto rep = key_of(static_cast<Vertex>(v));
      for (std::size_t i = 0; i < degree_; ++i) product[i] = gi[rep[i]];
      key_into(product, key);
      const auto w = lookup(key);
      if (!w) throw std::invalid_argument("element does not act on this coset space");
      images[v] = *w;
    }
  });
  return Permutation::from_images(std::move(images));
}

GroupAction CosetSpace::action_of(const PermGroup& subgroup_of_g, unsigned threads) const {
  GroupAction result{subgroup_of_g, size_, {}};
  for (const auto& g : subgroup_of_g.generators()) result.generator_images.push_back(right_multiplication(g, threads));
  return result;
}

CosetSpace enumerate_cosets(const PermGroup& group, const PermGroup& subgroup, const RunConfig& config) {
  config.validate();
  if (group.degree() != subgroup.degree()) throw std::invalid_argument("group and subgroup degrees differ");
  if (!subgroup.is_subgroup_of(group)) throw std::invalid_argument("subgroup is not contained in the group");
  const Integer index = group.order() / subgroup.order();
  if (index > config.vertex_budget)
    throw BudgetExceeded("vertex_budget", to_decimal(index), std::to_string(config.vertex_budget));
  if (subgroup.order() > config.enumeration_bound)
    throw BudgetExceeded("enumeration_bound", to_decimal(subgroup.order()), std::to_string(config.enumeration_bound));

  CosetSpace space(group, subgroup);
  space.subgroup_elements_ = subgroup.elements(config.enumeration_bound);
  const std::size_t n = space.degree_;
  const std::size_t total = static_cast<std::size_t>(index);
  space.keys_.reserve(total * n);

  const auto& gens = group.generators();
  std::vector<std::vector<Point>> images(gens.size(), std::vector<Point>(total));
  std::vector<Point> key(n), product(n);
  space.key_into(Permutation::identity(n).images(), key);
  space.insert(key);
  for (Vertex v = 0; v < space.size_; ++v) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const auto gi = gens[s].images();
      const auto rep = space.key_of(v);
      for (std::size_t i = 0; i < n; ++i) product[i] = gi[rep[i]];
      space.key_into(product, key);
      auto w = space.lookup(key);
      if (!w) {
        if (space.size_ >= total) throw std::logic_error("coset enumeration overran the index");
        w = space.insert(key);
      }
      images[s][v] = *w;
    }
  }
  if (space.size_ != total) throw std::logic_error("coset enumeration did not reach the index");
  for (auto& row : images) space.action_.generator_images.push_back(Permutation::from_images(std::move(row)));
  space.action_.space_size = total;
  return space;
}

namespace {

CosetGraph build_coset_graph(CosetSpace space, const std::vector<Permutation>& connection, unsigned threads) {
  const PermGroup& group = space.group();
  const auto& h_elements = space.subgroup_elements();
  std::unordered_set<Permutation, PermutationHash> members(connection.begin(), connection.end());
  if (members.size() != connection.size()) throw std::invalid_argument("connection set has repeated elements");
  for (const auto& d : connection) {
    if (d.degree() != group.degree() || !group.contains(d))
      throw std::invalid_argument("connection set leaves the group");
    if (space.subgroup().contains(d)) throw std::invalid_argument("connection set meets the subgroup");
    if (!members.count(d.inverse())) throw std::invalid_argument("connection set is not inverse-closed");
    for (const auto& h : space.subgroup().generators()) {
      if (!members.count(h * d) || !members.count(d * h))
        throw std::invalid_argument("connection set is not a union of double cosets");
    }
  }

  // Distinct right cosets H r inside D; the neighbours of Hg are H r g.
  std::vector<Permutation> reps;
  {
    std::unordered_set<Permutation, PermutationHash> seen;
    for (const auto& d : connection) {
      auto key = space.canonical_key(d);
      if (seen.insert(key).second) reps.push_back(std::move(key));
    }
    std::sort(reps.begin(), reps.end());
  }
  if (reps.size() * h_elements.size() != connection.size())
    throw std::logic_error("connection set size is not a multiple of the subgroup order");

  const std::size_t n = space.degree();
  std::vector<std::vector<Vertex>> adjacency(space.size());
  parallel_for(space.size(), threads, [&](std::size_t begin, std::size_t end) {
    std::vector<Point> product(n);
    for (std::size_t v = begin; v < end; ++v) {
      const Permutation rep = space.representative(static_cast<Vertex>(v));
      const auto g = rep.images();
      auto& row = adjacency[v];
      row.reserve(reps.size());
      for (const auto& r : reps) {
        const auto ri = r.images();
        for (std::size_t i = 0; i < n; ++i) product[i] = g[ri[i]];
        const auto w = space.index_of(Permutation::from_images(product));
        if (!w) throw std::logic_error("neighbour coset missing");
        row.push_back(*w);
      }
      std::sort(row.begin(), row.end());
    }
  });
  SymGraph graph = SymGraph::from_adjacency(adjacency);
  GroupAction action = space.action();
  return CosetGraph{std::move(space), std::move(graph), std::move(action)};
}

}  // namespace

CosetGraph coset_graph(const PermGroup& group, const PermGroup& subgroup, const std::vector<Permutation>& connection,
                       const RunConfig& config) {
  return build_coset_graph(enumerate_cosets(group, subgroup, config), connection, config.effective_threads());
}

CosetGraph coset_graph(const PermGroup& group, const PermGroup& subgroup, const DoubleCosetSet& connection,
                       const RunConfig& config) {
  return coset_graph(group, subgroup, connection.elements(), config);
}

ConnectionSet connection_set(const DoubleCosetSet& connection, const PermGroup& regular) {
  ConnectionSet result;
  for (const auto& d : connection.elements()) {
    if (regular.contains(d)) result.elements.push_back(d);
  }
  std::unordered_set<Permutation, PermutationHash> members(result.elements.begin(), result.elements.end());
  for (const auto& s : result.elements) {
    if (s.is_identity()) result.contains_identity = true;
    if (!members.count(s.inverse())) result.inverse_closed = false;
  }
  return result;
}

CosetGraph cayley_graph(const PermGroup& group, const std::vector<Permutation>& connection, const RunConfig& config) {
  for (const auto& s : connection) {
    if (s.degree() == group.degree() && s.is_identity())
      throw std::invalid_argument("Cayley connection set contains the identity");
  }
  return coset_graph(group, PermGroup::trivial(group.degree()), connection, config);
}

std::vector<Permutation> coset_action_kernel(const CosetSpace& space) {
  std::vector<Permutation> kernel;
  for (const auto& h : space.subgroup_elements()) {
    bool trivial_everywhere = true;
    for (Vertex v = 0; v < space.size() && trivial_everywhere; ++v) {
      const Permutation rep = space.representative(v);
      trivial_everywhere = space.subgroup().contains(rep * h * rep.inverse());
    }
    if (trivial_everywhere) kernel.push_back(h);
  }
  return kernel;
}

}  // namespace pgv
