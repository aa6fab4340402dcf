#include "pgv/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pgv/errors.hpp"

namespace pgv {

namespace {

void require_same_degree(const Permutation& a, const Permutation& b, const char* op) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument(std::string(op) + ": degree mismatch (" + std::to_string(a.degree()) +
                                " vs " + std::to_string(b.degree()) + ")");
  }
}

}  // namespace

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.empty()) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) throw std::invalid_argument("image table is not a bijection");
    seen[p] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b, "compose");
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = b.images_[a.images_[i]];
  return Permutation(std::move(out));
}

Permutation conjugate(const Permutation& g, const Permutation& c) {
  require_same_degree(g, c, "conjugate");
  // c^-1 g c maps c(i) to c(g(i)).
  std::vector<Point> out(g.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[c(static_cast<Point>(i))] = c(g(static_cast<Point>(i)));
  return Permutation::from_images(std::move(out));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

Permutation power(const Permutation& g, long long exponent) {
  Permutation base = exponent < 0 ? g.inverse() : g;
  unsigned long long e = exponent < 0 ? 0ull - static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = Permutation::identity(g.degree());
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Integer order(const Permutation& g) {
  Integer result = 1;
  for (const auto& cycle : cycles(g).cycles) {
    Integer len = cycle.size();
    result = result / boost::multiprecision::gcd(result, len) * len;
  }
  return result;
}

std::size_t support(const Permutation& g) {
  std::size_t moved = 0;
  for (std::size_t i = 0; i < g.degree(); ++i) moved += g(static_cast<Point>(i)) != i;
  return moved;
}

std::size_t smallest_moved_point(const Permutation& g) {
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (g(static_cast<Point>(i)) != i) return i;
  }
  return g.degree();
}

Parity parity(const Permutation& g) {
  // A k-cycle is a product of k-1 transpositions.
  std::size_t transpositions = 0;
  for (const auto& cycle : cycles(g).cycles) transpositions += cycle.size() - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

CycleDecomposition cycles(const Permutation& g) {
  CycleDecomposition out;
  out.degree = g.degree();
  std::vector<bool> seen(g.degree(), false);
  for (Point start = 0; start < g.degree(); ++start) {
    if (seen[start] || g(start) == start) continue;
    std::vector<Point> cycle;
    for (Point p = start; !seen[p]; p = g(p)) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

Permutation CycleDecomposition::to_permutation() const {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) throw std::invalid_argument("cycle of length < 2");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point p = cycle[i];
      if (p >= degree || used[p]) throw std::invalid_argument("cycles are not disjoint or out of range");
      used[p] = true;
      images[p] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation::from_images(std::move(images));
}

std::vector<std::size_t> CycleDecomposition::cycle_type() const {
  std::vector<std::size_t> lengths;
  for (const auto& cycle : cycles) lengths.push_back(cycle.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  auto fail = [&](const std::string& msg, std::size_t pos) -> void {
    throw ParseError("cycle notation: " + msg + " at column " + std::to_string(pos + 1), 1, pos + 1);
  };
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };

  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };

  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('", i);
    ++i;
    std::vector<Point> cycle;
    skip_space();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip_space();
      continue;
    }
    while (true) {
      skip_space();
      const std::size_t start = i;
      unsigned long long value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<unsigned>(text[i] - '0');
        if (value > degree + 1ull) value = degree + 1ull;  // saturate; reported below
        ++i;
      }
      if (i == start) fail("expected a point", i);
      if (value < 1 || value > degree) {
        fail("point " + std::string(text.substr(start, i - start)) + " outside 1.." + std::to_string(degree), start);
      }
      const Point p = static_cast<Point>(value - 1);
      if (used[p]) fail("repeated point " + std::to_string(value), start);
      used[p] = true;
      cycle.push_back(p);
      skip_space();
      if (i >= text.size()) fail("unterminated cycle", i);
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      fail(std::string("unexpected character '") + text[i] + "'", i);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return Permutation::from_images(std::move(images));
}

std::string to_cycle_string(const Permutation& g) {
  const auto decomposition = cycles(g);
  if (decomposition.cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : decomposition.cycles) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(cycle[k] + 1);
    }
    out += ')';
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& g) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ g.degree();
  for (Point p : g.images()) {
    h ^= p + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace pgv
