#include "pgv/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "pgv/errors.hpp"

namespace pgv {

namespace {

std::vector<Permutation> nontrivial_unique(const std::vector<Permutation>& gens) {
  std::vector<Permutation> out;
  std::unordered_set<Permutation, PermutationHash> seen;
  for (const auto& g : gens) {
    if (!g.is_identity() && seen.insert(g).second) out.push_back(g);
  }
  return out;
}

bool fixes_all(const Permutation& g, const std::vector<Point>& points, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (g(points[i]) != points[i]) return false;
  }
  return true;
}

}  // namespace

PermGroup::PermGroup(std::vector<Permutation> generators) : PermGroup(std::move(generators), {}) {}

PermGroup::PermGroup(std::vector<Permutation> generators, std::vector<Point> base_prefix)
    : generators_(std::move(generators)) {
  if (generators_.empty()) throw std::invalid_argument("a group needs at least one generator");
  degree_ = generators_.front().degree();
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw std::invalid_argument("generators of mixed degree");
  }
  for (Point b : base_prefix) {
    if (b >= degree_) throw std::out_of_range("base point outside the domain");
  }
  build(std::move(base_prefix));
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup({Permutation::identity(degree)}); }

void PermGroup::compute_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.slot.assign(degree_, -1);
  level.slot[level.base_point] = 0;
  level.transversal.assign(1, Permutation::identity(degree_));
  level.transversal_inverse.assign(1, Permutation::identity(degree_));
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const Point beta = level.orbit[i];
    for (const auto& s : level.generators) {
      const Point gamma = s(beta);
      if (level.slot[gamma] >= 0) continue;
      level.slot[gamma] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(gamma);
      // Copy before push_back: the reference would dangle on reallocation.
      Permutation u = level.transversal[i] * s;
      level.transversal_inverse.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < chain_.size(); ++l) {
    const Level& level = chain_[l];
    const std::int32_t idx = level.slot[g(level.base_point)];
    if (idx < 0) return {std::move(g), l};
    g = g * level.transversal_inverse[static_cast<std::size_t>(idx)];
  }
  return {std::move(g), chain_.size()};
}

void PermGroup::build(std::vector<Point> base_prefix) {
  const std::vector<Permutation> strong = nontrivial_unique(generators_);
  chain_.clear();

  std::vector<Point> base = std::move(base_prefix);
  {
    std::vector<Point> dedup;
    for (Point b : base) {
      if (std::find(dedup.begin(), dedup.end(), b) == dedup.end()) dedup.push_back(b);
    }
    base = std::move(dedup);
  }
  for (const auto& s : strong) {
    if (fixes_all(s, base, base.size())) base.push_back(static_cast<Point>(smallest_moved_point(s)));
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    Level level;
    level.base_point = base[i];
    for (const auto& s : strong) {
      if (fixes_all(s, base, i)) level.generators.push_back(s);
    }
    chain_.push_back(std::move(level));
  }
  for (auto& level : chain_) compute_orbit(level);

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < chain_[li].orbit.size() && !restarted; ++oi) {
      for (std::size_t si = 0; si < chain_[li].generators.size(); ++si) {
        const Level& level = chain_[li];
        const Permutation& s = level.generators[si];
        const Point gamma = s(level.orbit[oi]);
        Permutation schreier =
            level.transversal[oi] * s * level.transversal_inverse[static_cast<std::size_t>(level.slot[gamma])];
        if (schreier.is_identity()) continue;
        auto [residue, drop] = sift(std::move(schreier), li + 1);
        if (drop == chain_.size() && residue.is_identity()) continue;
        if (drop == chain_.size()) {
          Level fresh;
          fresh.base_point = static_cast<Point>(smallest_moved_point(residue));
          chain_.push_back(std::move(fresh));
        }
        for (std::size_t l = li + 1; l <= drop; ++l) {
          chain_[l].generators.push_back(residue);
          compute_orbit(chain_[l]);
        }
        i = static_cast<std::ptrdiff_t>(drop);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }

  order_ = 1;
  for (const auto& level : chain_) order_ *= level.orbit.size();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const auto& level : chain_) out.push_back(level.base_point);
  return out;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  return chain_.empty() ? std::vector<Permutation>{} : chain_.front().generators;
}

std::vector<std::size_t> PermGroup::transversal_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& level : chain_) out.push_back(level.orbit.size());
  return out;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("contains: degree mismatch");
  auto [residue, drop] = sift(g, 0);
  return drop == chain_.size() && residue.is_identity();
}

bool PermGroup::contains_all(const std::vector<Permutation>& gs) const {
  return std::all_of(gs.begin(), gs.end(), [&](const Permutation& g) { return contains(g); });
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return degree_ == other.degree_ && other.contains_all(generators_);
}

std::vector<Point> PermGroup::orbit(Point point) const {
  if (point >= degree_) throw std::out_of_range("orbit: point outside the domain");
  std::vector<Point> out{point};
  std::vector<bool> seen(degree_, false);
  seen[point] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators_) {
      const Point q = g(out[i]);
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree_, false);
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto o = orbit(p);
    for (Point q : o) seen[q] = true;
    out.push_back(std::move(o));
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == degree_; }

PermGroup PermGroup::point_stabilizer(Point point) const {
  if (point >= degree_) throw std::out_of_range("point_stabilizer: point outside the domain");
  PermGroup rebased(generators_, {point});
  if (rebased.chain_.size() < 2) return trivial(degree_);
  const std::vector<Point> base = rebased.base();
  std::vector<Point> rest(base.begin() + 1, base.end());
  return PermGroup(rebased.chain_[1].generators, std::move(rest));
}

std::vector<Permutation> PermGroup::elements(std::size_t bound) const {
  if (order_ > bound) throw BudgetExceeded("enumeration_bound", to_decimal(order_), std::to_string(bound));
  std::vector<Permutation> out{Permutation::identity(degree_)};
  for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(out.size() * it->transversal.size());
    for (const auto& e : out) {
      for (const auto& u : it->transversal) next.push_back(e * u);
    }
    out = std::move(next);
  }
  return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (auto it = chain_.rbegin(); it != chain_.rend(); ++it) {
    std::uniform_int_distribution<std::size_t> pick(0, it->transversal.size() - 1);
    g = g * it->transversal[pick(rng)];
  }
  return g;
}

PermGroup normal_closure(const std::vector<Permutation>& gens, const PermGroup& ambient) {
  std::vector<Permutation> closure = nontrivial_unique(gens);
  if (closure.empty()) return PermGroup::trivial(ambient.degree());
  PermGroup current(closure);
  std::deque<Permutation> pending(closure.begin(), closure.end());
  while (!pending.empty()) {
    Permutation n = std::move(pending.front());
    pending.pop_front();
    for (const auto& a : ambient.generators()) {
      Permutation c = conjugate(n, a);
      if (current.contains(c)) continue;
      closure.push_back(c);
      pending.push_back(std::move(c));
      current = PermGroup(closure, current.base());
    }
  }
  return current;
}

PermGroup derived_subgroup(const PermGroup& group) {
  std::vector<Permutation> commutators;
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) commutators.push_back(commutator(gens[i], gens[j]));
  }
  if (commutators.empty()) return PermGroup::trivial(group.degree());
  return normal_closure(commutators, group);
}

DerivedSeries derived_series(const PermGroup& group) {
  DerivedSeries series;
  series.chain.push_back(group);
  while (!series.chain.back().is_trivial()) {
    PermGroup next = derived_subgroup(series.chain.back());
    if (next.order() == series.chain.back().order()) break;
    series.chain.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const PermGroup& group) { return derived_series(group).is_solvable(); }

bool is_normal_in(const PermGroup& normal, const PermGroup& group) {
  if (!normal.is_subgroup_of(group)) throw std::invalid_argument("is_normal_in: N is not a subgroup of G");
  for (const auto& n : normal.generators()) {
    for (const auto& g : group.generators()) {
      if (!normal.contains(conjugate(n, g))) return false;
    }
  }
  return true;
}

SimplicityFingerprint simplicity_fingerprint(const PermGroup& group, std::size_t budget) {
  SimplicityFingerprint fp;
  fp.order = group.order();
  fp.perfect = !group.is_trivial() && derived_subgroup(group).order() == group.order();
  if (group.order() > budget) return fp;
  if (group.is_trivial()) {
    fp.exhaustive_simple = false;
    return fp;
  }
  // One normal-closure test per conjugacy class.
  std::unordered_set<Permutation, PermutationHash> covered;
  for (const auto& e : group.elements(budget)) {
    if (e.is_identity() || covered.count(e)) continue;
    if (normal_closure({e}, group).order() != group.order()) {
      fp.exhaustive_simple = false;
      return fp;
    }
    std::vector<Permutation> klass{e};
    covered.insert(e);
    for (std::size_t i = 0; i < klass.size(); ++i) {
      for (const auto& g : group.generators()) {
        Permutation c = conjugate(klass[i], g);
        if (covered.insert(c).second) klass.push_back(std::move(c));
      }
    }
  }
  fp.exhaustive_simple = true;
  return fp;
}

DoubleCosetSet::DoubleCosetSet(PermGroup left, Permutation middle, std::vector<Permutation> elements)
    : left_(std::move(left)), middle_(std::move(middle)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  lookup_.insert(elements_.begin(), elements_.end());
}

bool DoubleCosetSet::is_inverse_closed() const {
  return std::all_of(elements_.begin(), elements_.end(), [&](const Permutation& g) { return contains(g.inverse()); });
}

DoubleCosetSet double_coset(const PermGroup& subgroup, const Permutation& t, std::size_t bound) {
  if (t.degree() != subgroup.degree()) throw std::invalid_argument("double_coset: degree mismatch");
  const auto hs = subgroup.elements(bound);
  std::unordered_set<Permutation, PermutationHash> products;
  for (const auto& h1 : hs) {
    const Permutation left = h1 * t;
    for (const auto& h2 : hs) products.insert(left * h2);
  }
  return DoubleCosetSet(subgroup, t, std::vector<Permutation>(products.begin(), products.end()));
}

PermGroup subgroup_intersection_small(const PermGroup& a, const PermGroup& b, std::size_t bound) {
  if (a.degree() != b.degree()) throw std::invalid_argument("intersection: degree mismatch");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  std::vector<Permutation> gens;
  std::optional<PermGroup> current;
  for (const auto& e : small.elements(bound)) {
    if (e.is_identity() || !large.contains(e)) continue;
    if (current && current->contains(e)) continue;
    gens.push_back(e);
    current.emplace(gens);
  }
  return current ? *current : PermGroup::trivial(a.degree());
}

std::vector<Permutation> core_elements(const PermGroup& group, const std::vector<Permutation>& subgroup_elements) {
  std::set<Permutation> kept(subgroup_elements.begin(), subgroup_elements.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = kept.begin(); it != kept.end();) {
      bool stays = true;
      for (const auto& g : group.generators()) {
        if (!kept.count(conjugate(*it, g))) {
          stays = false;
          break;
        }
      }
      if (stays) {
        ++it;
      } else {
        it = kept.erase(it);
        changed = true;
      }
    }
  }
  return {kept.begin(), kept.end()};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t nu_factorial(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("nu_factorial: " + std::to_string(p) + " is not prime");
  std::uint64_t total = 0;
  for (std::uint64_t q = p; q <= n; q *= p) {
    total += n / q;
    if (q > n / p) break;
  }
  return total;
}

}  // namespace pgv
