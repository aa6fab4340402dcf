#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pgv/integer.hpp"

namespace pgv {

using Point = std::uint32_t;

// A bijection of {0..n-1}. Text I/O is 1-based; everything else is 0-based.
//
// Products follow the right-action convention used by exponent notation:
// (a * b)(i) = b(a(i)), i.e. a is applied first. With that convention
// conjugate(g, c) = c^-1 * g * c is g^c.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);
  // Throws std::invalid_argument unless images is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  // Lexicographic on the image table; degree mismatch compares by length.
  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;

  friend Permutation compose(const Permutation& a, const Permutation& b);
};

// i -> b(a(i)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

// c^-1 * g * c.
Permutation conjugate(const Permutation& g, const Permutation& c);
// a^-1 * b^-1 * a * b.
Permutation commutator(const Permutation& a, const Permutation& b);
Permutation power(const Permutation& g, long long exponent);

Integer order(const Permutation& g);
std::size_t support(const Permutation& g);
std::size_t smallest_moved_point(const Permutation& g);  // degree() if identity

enum class Parity { even, odd };
Parity parity(const Permutation& g);

struct CycleDecomposition {
  std::size_t degree = 0;
  std::vector<std::vector<Point>> cycles;  // 0-based, each of length >= 2

  Permutation to_permutation() const;
  // Multiset of cycle lengths in ascending order.
  std::vector<std::size_t> cycle_type() const;
};

CycleDecomposition cycles(const Permutation& g);

// Parses `(a,b,...)(c,...)` with 1-based points. Whitespace is ignored, `()`
// and the empty string denote the identity. Throws ParseError with a 1-based
// column on malformed text, out-of-range or repeated points.
Permutation parse_cycles(std::string_view text, std::size_t degree);
// Inverse of parse_cycles; fixed points omitted, identity prints as "()".
std::string to_cycle_string(const Permutation& g);

struct PermutationHash {
  std::size_t operator()(const Permutation& g) const noexcept;
};

}  // namespace pgv
