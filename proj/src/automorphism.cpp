#include "pgv/automorphism.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "pgv/errors.hpp"

namespace pgv {

namespace {

constexpr std::size_t no_jump = std::numeric_limits<std::size_t>::max();

std::uint64_t mix(std::uint64_t h, std::uint64_t value) {
  h ^= value + 0x9e3779b97f4a7c15ull + (h << 12) + (h >> 4);
  h *= 0xbf58476d1ce4e5b9ull;
  return h ^ (h >> 31);
}

// Ordered partition: cells are contiguous ranges of `lab`.
struct Partition {
  std::vector<Vertex> lab;          // position -> vertex
  std::vector<std::uint32_t> pos;   // vertex -> position
  std::vector<std::uint32_t> cell;  // vertex -> start of its cell
  std::vector<std::uint32_t> end;   // cell start -> one past its last position
  std::size_t cells = 0;

  explicit Partition(std::size_t n) : lab(n), pos(n), cell(n, 0), end(n, 0), cells(n ? 1 : 0) {
    std::iota(lab.begin(), lab.end(), Vertex{0});
    std::iota(pos.begin(), pos.end(), std::uint32_t{0});
    if (n) end[0] = static_cast<std::uint32_t>(n);
  }
  bool discrete() const { return cells == lab.size(); }
};

class Refiner {
 public:
  explicit Refiner(const SymGraph& graph)
      : graph_(graph), count_(graph.vertex_count(), 0), marked_(graph.vertex_count(), 0),
        queued_(graph.vertex_count(), 0) {}

  // Refines to the coarsest equitable partition finer than p, starting from
  // the given splitter cells. Returns an isomorphism-invariant trace hash.
  std::uint64_t refine(Partition& p, std::vector<std::uint32_t> splitters) {
    std::uint64_t h = 0x1234567;
    std::vector<std::uint32_t> queue = std::move(splitters);
    for (const auto c : queue) queued_[c] = 1;
    std::size_t head = 0;
    while (head < queue.size() && !p.discrete()) {
      const std::uint32_t w = queue[head++];
      queued_[w] = 0;
      touched_.clear();
      for (std::uint32_t i = w; i < p.end[w]; ++i) {
        for (const Vertex u : graph_.neighbors(p.lab[i])) {
          if (count_[u]++ == 0) touched_.push_back(u);
        }
      }
      cells_.clear();
      for (const Vertex u : touched_) {
        const auto c = p.cell[u];
        if (!marked_[c]) {
          marked_[c] = 1;
          cells_.push_back(c);
        }
      }
      std::sort(cells_.begin(), cells_.end());
      for (const auto c : cells_) {
        marked_[c] = 0;
        h = split(p, c, h, queue);
      }
      for (const Vertex u : touched_) count_[u] = 0;
      h = mix(mix(h, w), p.cells);
    }
    for (std::size_t i = head; i < queue.size(); ++i) queued_[queue[i]] = 0;
    return mix(h, p.cells);
  }

 private:
  std::uint64_t split(Partition& p, std::uint32_t c, std::uint64_t h, std::vector<std::uint32_t>& queue) {
    const std::uint32_t e = p.end[c];
    auto first = p.lab.begin() + c;
    auto last = p.lab.begin() + e;
    const std::uint32_t k = count_[*first];
    if (std::all_of(first, last, [&](Vertex v) { return count_[v] == k; })) return mix(mix(h, c), k);
    std::sort(first, last, [&](Vertex a, Vertex b) {
      return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
    });

    h = mix(h, c);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> fragments;  // [start, end)
    std::uint32_t start = c;
    for (std::uint32_t i = c; i < e; ++i) {
      p.pos[p.lab[i]] = i;
      if (i + 1 == e || count_[p.lab[i + 1]] != count_[p.lab[i]]) {
        fragments.emplace_back(start, i + 1);
        h = mix(mix(h, count_[p.lab[i]]), i + 1 - start);
        start = i + 1;
      }
    }
    for (const auto& [fs, fe] : fragments) {
      p.end[fs] = fe;
      for (std::uint32_t i = fs; i < fe; ++i) p.cell[p.lab[i]] = fs;
    }
    p.cells += fragments.size() - 1;

    std::size_t largest = 0;
    if (!queued_[c]) {
      for (std::size_t f = 1; f < fragments.size(); ++f) {
        if (fragments[f].second - fragments[f].first > fragments[largest].second - fragments[largest].first)
          largest = f;
      }
    }
    for (std::size_t f = 0; f < fragments.size(); ++f) {
      const auto fs = fragments[f].first;
      if (queued_[fs]) continue;
      if (!queued_[c] && f == largest) continue;
      queued_[fs] = 1;
      queue.push_back(fs);
    }
    return h;
  }

  const SymGraph& graph_;
  std::vector<std::uint32_t> count_;
  std::vector<char> marked_;
  std::vector<char> queued_;
  std::vector<Vertex> touched_;
  std::vector<std::uint32_t> cells_;
};

struct Leaf {
  std::vector<std::uint64_t> trace;
  std::vector<Vertex> path;
  std::vector<Vertex> lab;
  std::vector<std::uint32_t> certificate;
};

class Search {
 public:
  explicit Search(const SymGraph& graph) : graph_(graph), n_(graph.vertex_count()), refiner_(graph) {}

  void run() {
    Partition root(n_);
    trace_.push_back(refiner_.refine(root, {0}));
    search(root);
  }

  const std::vector<Permutation>& generators() const { return generators_; }
  const Leaf& best() const { return best_; }
  std::size_t nodes() const { return nodes_; }
  // Product of first-path orbit lengths; equals |Aut| once the search is complete.
  Integer orbit_product() const {
    Integer product = 1;
    for (const auto size : first_path_orbits_) product *= size;
    return product;
  }

 private:
  std::size_t search(Partition& p) {
    ++nodes_;
    const std::size_t depth = path_.size();
    if (p.discrete()) return leaf(p);

    std::uint32_t target = 0;
    std::uint32_t target_size = std::numeric_limits<std::uint32_t>::max();
    for (std::uint32_t i = 0; i < n_; i = p.end[i]) {
      const std::uint32_t size = p.end[i] - i;
      if (size > 1 && size < target_size) {
        target = i;
        target_size = size;
      }
    }
    std::vector<Vertex> children(p.lab.begin() + target, p.lab.begin() + p.end[target]);
    std::sort(children.begin(), children.end());
    const bool on_first_path = !have_first_;

    std::vector<Vertex> explored;
    for (const Vertex w : children) {
      if (!explored.empty() && equivalent_to_explored(w, explored)) continue;
      Partition child = p;
      individualize(child, w);
      trace_.push_back(refiner_.refine(child, {child.cell[w]}));
      path_.push_back(w);
      std::size_t jump = no_jump;
      if (worth_exploring()) jump = search(child);
      trace_.pop_back();
      path_.pop_back();
      explored.push_back(w);
      if (jump != no_jump && jump < depth) return jump;
    }
    if (on_first_path) {
      if (first_path_orbits_.size() <= depth) first_path_orbits_.resize(depth + 1, 1);
      first_path_orbits_[depth] = orbit_size(children.front());
    }
    return no_jump;
  }

  void individualize(Partition& p, Vertex w) const {
    const std::uint32_t s = p.cell[w];
    const std::uint32_t e = p.end[s];
    const std::uint32_t at = p.pos[w];
    std::swap(p.lab[s], p.lab[at]);
    p.pos[p.lab[at]] = at;
    p.pos[w] = s;
    p.end[s] = s + 1;
    p.end[s + 1] = e;
    for (std::uint32_t i = s + 1; i < e; ++i) p.cell[p.lab[i]] = s + 1;
    ++p.cells;
  }

  // Prune a node whose trace already loses to the best leaf, unless it still
  // matches the first leaf's trace (it may yield automorphisms).
  bool worth_exploring() const {
    if (!have_first_) return true;
    const auto& f = first_.trace;
    if (trace_.size() <= f.size() && std::equal(trace_.begin(), trace_.end(), f.begin())) return true;
    const auto& b = best_.trace;
    const std::size_t m = std::min(b.size(), trace_.size());
    const auto [bi, ti] = std::mismatch(b.begin(), b.begin() + m, trace_.begin());
    if (bi != b.begin() + m) return *ti < *bi;
    return b.size() >= trace_.size();
  }

  std::size_t leaf(const Partition& p) {
    std::vector<std::uint32_t> cert = certificate(p.lab);
    if (!have_first_) {
      first_ = Leaf{trace_, path_, p.lab, std::move(cert)};
      best_ = first_;
      have_first_ = true;
      return no_jump;
    }
    if (trace_ == first_.trace && cert == first_.certificate) {
      record_automorphism(first_.lab, p.lab);
      return common_prefix(first_.path);
    }
    int cmp = trace_ < best_.trace ? -1 : (best_.trace < trace_ ? 1 : 0);
    if (cmp == 0) cmp = cert < best_.certificate ? -1 : (best_.certificate < cert ? 1 : 0);
    if (cmp < 0) {
      best_ = Leaf{trace_, path_, p.lab, std::move(cert)};
      return no_jump;
    }
    if (cmp == 0) {
      record_automorphism(best_.lab, p.lab);
      return common_prefix(best_.path);
    }
    return no_jump;
  }

  std::vector<std::uint32_t> certificate(const std::vector<Vertex>& lab) const {
    std::vector<std::uint32_t> position(n_);
    for (std::uint32_t i = 0; i < n_; ++i) position[lab[i]] = i;
    std::vector<std::uint32_t> cert;
    cert.reserve(n_ + graph_.arc_count());
    std::vector<std::uint32_t> row;
    for (std::uint32_t i = 0; i < n_; ++i) {
      row.clear();
      for (const Vertex u : graph_.neighbors(lab[i])) row.push_back(position[u]);
      std::sort(row.begin(), row.end());
      cert.push_back(static_cast<std::uint32_t>(row.size()));
      cert.insert(cert.end(), row.begin(), row.end());
    }
    return cert;
  }

  void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Point> images(n_);
    for (std::size_t i = 0; i < n_; ++i) images[from[i]] = to[i];
    Permutation g = Permutation::from_images(std::move(images));
    if (g.is_identity()) return;
    if (!graph_.is_automorphism(g)) throw VerificationError("automorphism search produced a non-automorphism");
    generators_.push_back(std::move(g));
  }

  std::size_t common_prefix(const std::vector<Vertex>& other) const {
    std::size_t d = 0;
    while (d < path_.size() && d < other.size() && path_[d] == other[d]) ++d;
    return d;
  }

  std::vector<const Permutation*> prefix_fixers() const {
    std::vector<const Permutation*> fixers;
    for (const auto& g : generators_) {
      bool fixes = true;
      for (const Vertex v : path_) fixes = fixes && g(v) == v;
      if (fixes) fixers.push_back(&g);
    }
    return fixers;
  }

  std::vector<Vertex> orbit_of(Vertex start) const {
    const auto fixers = prefix_fixers();
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> orbit{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto* g : fixers) {
        const Vertex next = (*g)(orbit[i]);
        if (!seen[next]) {
          seen[next] = 1;
          orbit.push_back(next);
        }
      }
    }
    return orbit;
  }

  bool equivalent_to_explored(Vertex w, const std::vector<Vertex>& explored) const {
    const auto orbit = orbit_of(w);
    return std::any_of(orbit.begin(), orbit.end(),
                       [&](Vertex u) { return std::find(explored.begin(), explored.end(), u) != explored.end(); });
  }

  std::size_t orbit_size(Vertex v) const { return orbit_of(v).size(); }

  const SymGraph& graph_;
  std::uint32_t n_;
  Refiner refiner_;
  std::vector<std::uint64_t> trace_;
  std::vector<Vertex> path_;
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<Permutation> generators_;
  std::vector<std::size_t> first_path_orbits_;
  std::size_t nodes_ = 0;
};

}  // namespace

AutResult automorphism_group(const SymGraph& graph, std::size_t vertex_limit) {
  const std::size_t n = graph.vertex_count();
  if (n > vertex_limit) throw BudgetExceeded("aut_vertex_limit", std::to_string(n), std::to_string(vertex_limit));
  if (n == 0) throw std::invalid_argument("automorphism_group needs a nonempty graph");

  Search search(graph);
  search.run();

  std::vector<Permutation> gens = search.generators();
  PermGroup group = gens.empty() ? PermGroup::trivial(n) : PermGroup(std::move(gens));
  if (group.order() != search.orbit_product())
    throw VerificationError("automorphism group order " + to_decimal(group.order()) +
                            " disagrees with the search tree orbit product " + to_decimal(search.orbit_product()));

  const Leaf& best = search.best();
  std::vector<Vertex> labeling(n);
  for (std::size_t i = 0; i < n; ++i) labeling[best.lab[i]] = static_cast<Vertex>(i);
  SymGraph canonical = graph.relabeled(labeling);
  std::uint64_t fingerprint = mix(0, n);
  for (const auto& [u, v] : canonical.edges()) fingerprint = mix(fingerprint, (std::uint64_t{u} << 32) | v);

  const bool transitive = group.orbit(0).size() == n;
  return AutResult{std::move(group), std::move(labeling), std::move(canonical), fingerprint, transitive, search.nodes()};
}

}  // namespace pgv
