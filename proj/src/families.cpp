#include "pgv/families.hpp"

#include "pgv/graph.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

namespace pgv {

namespace {

constexpr const char* psl2_11_x = "(1,11,8,3,6,9,4,10,2,7,5)";
constexpr const char* psl2_11_y = "(2,10,6)(3,11,4)(7,8,9)";
constexpr const char* psl2_11_t = "(2,5)(3,9)(6,11)(8,10)";

constexpr const char* psl2_29_x =
    "(1,21,10,9,22,28,13,15,30,6,19,18,7,27,23,4,25,17,20,2,12,29,16,26,8,11,3,24,5)";
constexpr const char* psl2_29_y =
    "(1,24,9)(2,6,5)(3,27,21)(4,12,20)(7,25,26)(8,10,13)(11,14,16)(15,30,23)(17,28,29)(18,22,19)";
constexpr const char* psl2_29_t =
    "(1,3)(2,10)(4,11)(5,19)(6,24)(7,16)(8,17)(9,28)(12,27)(13,20)(14,22)(15,26)(18,30)(21,23)";
constexpr const char* psl2_29_z = "(2,18,23,10,29,9,17)(3,7,19,20,4,24,30)(5,22,27,13,28,6,16)(8,12,15,21,11,25,26)";

constexpr const char* m23_x = "(1,4,6,7,2,19,3,11,9,20,13,23,16,8,21,5,14,22,18,15,17,10,12)";
constexpr const char* m23_y = "(1,14,6,5,9,2,10,3,15,13,11)(4,22,16,19,17,8,21,7,12,18,23)";
constexpr const char* m23_t = "(1,17)(3,9)(5,18)(6,13)(7,12)(10,19)(14,22)(21,23)";
constexpr const char* m23_b = "(2,14,18,7,16,6,9,20,8,3,4)(5,21,13,22,12,15,11,19,17,23,10)";

constexpr std::array<const char*, 23> m23_s = {
    "(1,14,6,5,9,2,10,3,15,13,11)(4,22,16,19,17,8,21,7,12,18,23)",
    "(1,11,13,15,3,10,2,9,5,6,14)(4,23,18,12,7,21,8,17,19,16,22)",
    "(1,15,5,2,12,18,16,14,21,13,7)(3,6,4,22,8,19,10,17,9,23,11)",
    "(1,7,13,21,14,16,18,12,2,5,15)(3,11,23,9,17,10,19,8,22,4,6)",
    "(1,9,14)(2,19,5,4,22,12)(3,21,6)(7,23,15,11,8,18)(10,13)(16,17)",
    "(1,14,9)(2,12,22,4,5,19)(3,6,21)(7,18,8,11,15,23)(10,13)(16,17)",
    "(1,4,3)(2,6)(5,8,7,10,14,21)(9,12,17,22,16,13)(11,19,23)(15,18)",
    "(1,3,4)(2,6)(5,21,14,10,7,8)(9,13,16,22,17,12)(11,23,19)(15,18)",
    "(1,12)(2,19,3)(4,6,18,5,8,10)(7,11,23,16,14,22)(9,13)(15,17,21)",
    "(1,12)(2,3,19)(4,10,8,5,18,6)(7,22,14,16,23,11)(9,13)(15,21,17)",
    "(1,7,3,16,12)(2,11,23,22,14)(4,15,5,18,10)(6,9,13,8,17)",
    "(1,12,16,3,7)(2,14,22,23,11)(4,10,18,5,15)(6,17,8,13,9)",
    "(3,16,23,12,6)(4,11,22,18,10)(5,17,7,19,9)(8,14,15,21,13)",
    "(3,6,12,23,16)(4,10,18,22,11)(5,9,19,7,17)(8,13,21,15,14)",
    "(1,15,12,6,19)(2,11,13,14,7)(3,16,21,22,4)(5,10,17,9,23)",
    "(1,19,6,12,15)(2,7,14,13,11)(3,4,22,21,16)(5,23,9,17,10)",
    "(1,7)(3,8)(4,6)(9,19)(11,23)(12,15)(13,18)(14,21)",
    "(2,6)(3,10)(4,22)(8,16)(11,13)(12,18)(14,15)(21,23)",
    "(1,11)(2,16)(4,19)(6,12)(8,14)(9,13)(15,18)(17,22)",
    "(1,17)(3,9)(5,18)(6,13)(7,12)(10,19)(14,22)(21,23)",
    "(1,15)(5,16)(6,18)(7,19)(8,21)(9,23)(11,12)(17,22)",
    "(1,17)(2,9)(5,11)(6,19)(7,13)(8,23)(10,12)(14,15)",
    "(1,5)(2,4)(3,11)(8,13)(9,19)(10,15)(14,16)(18,23)",
};

void require_alt_prime(std::uint64_t p) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("alt-p needs a prime p >= 5, got " + std::to_string(p));
}

// 1-based cycle to a permutation of {0..n-1}.
Permutation from_cycle(const std::vector<Point>& one_based, std::size_t n) {
  CycleDecomposition c{n, {{}}};
  for (const Point v : one_based) c.cycles[0].push_back(v - 1);
  return c.to_permutation();
}

Permutation long_cycle(std::uint64_t p) {
  std::vector<Point> images(p);
  for (std::uint64_t i = 0; i < p; ++i) images[i] = static_cast<Point>((i + 1) % p);
  return Permutation::from_images(std::move(images));
}

Permutation double_transposition(std::uint64_t p, Point a, Point b, Point c, Point d) {
  CycleDecomposition cd{p, {{a - 1, b - 1}, {c - 1, d - 1}}};
  return cd.to_permutation();
}

Permutation reversal(std::uint64_t p) {
  // (2,p)(3,p-1)...((p+1)/2,(p+3)/2): fixes 1, i <-> p + 2 - i.
  std::vector<Point> images(p);
  images[0] = 0;
  for (std::uint64_t i = 2; i <= p; ++i) images[i - 1] = static_cast<Point>(p + 2 - i - 1);
  return Permutation::from_images(std::move(images));
}

std::size_t circular_distance(std::uint64_t i, std::uint64_t j, std::uint64_t p) {
  const std::uint64_t d = i > j ? i - j : j - i;
  return static_cast<std::size_t>(std::min(d, p - d));
}

std::vector<std::size_t> cycle_type_of(const Permutation& g) { return cycles(g).cycle_type(); }

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::psl2_11: return "psl2-11";
    case Family::psl2_29: return "psl2-29";
    case Family::m23: return "m23";
    case Family::alt_p: return "alt-p";
  }
  return "psl2-11";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "psl2-11") return Family::psl2_11;
  if (name == "psl2-29") return Family::psl2_29;
  if (name == "m23") return Family::m23;
  if (name == "alt-p") return Family::alt_p;
  return std::nullopt;
}

void FamilySpec::validate() const {
  if (family == Family::alt_p) require_alt_prime(p);
}

std::uint64_t FamilySpec::valency() const {
  switch (family) {
    case Family::psl2_11: return 11;
    case Family::psl2_29: return 29;
    case Family::m23: return 23;
    case Family::alt_p: return p;
  }
  return 0;
}

FamilyBundle build_family(const FamilySpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::psl2_11: {
      const std::size_t n = 11;
      auto x = parse_cycles(psl2_11_x, n), y = parse_cycles(psl2_11_y, n), t = parse_cycles(psl2_11_t, n);
      return FamilyBundle{spec, n, PermGroup({x, t}), PermGroup({x}), PermGroup({y, t}), t, {{"x", x}, {"y", y}, {"t", t}}};
    }
    case Family::psl2_29: {
      const std::size_t n = 30;
      auto x = parse_cycles(psl2_29_x, n), y = parse_cycles(psl2_29_y, n), t = parse_cycles(psl2_29_t, n),
           z = parse_cycles(psl2_29_z, n);
      return FamilyBundle{spec, n, PermGroup({x, t}), PermGroup({x, z}), PermGroup({y, t}), t,
                          {{"x", x}, {"y", y}, {"t", t}, {"z", z}}};
    }
    case Family::m23: {
      const std::size_t n = 23;
      auto x = parse_cycles(m23_x, n), y = parse_cycles(m23_y, n), t = parse_cycles(m23_t, n), b = parse_cycles(m23_b, n);
      return FamilyBundle{spec, n, PermGroup({x, t}), PermGroup({x}), PermGroup({y, t}), t,
                          {{"x", x}, {"y", y}, {"t", t}, {"b", b}}};
    }
    case Family::alt_p: {
      const std::uint64_t p = spec.p;
      const Permutation x = long_cycle(p);
      const Permutation t = double_transposition(p, 1, 2, 3, 4);
      const Permutation h = reversal(p);
      PermGroup T({x, t});
      PermGroup G = T.point_stabilizer(static_cast<Point>(p - 1));
      return FamilyBundle{spec, p, std::move(T), PermGroup({x}), std::move(G), t, {{"x", x}, {"t", t}, {"h", h}}};
    }
  }
  throw std::logic_error("unknown family");
}

std::vector<Permutation> closed_form_S(std::uint64_t p) {
  require_alt_prime(p);
  std::vector<Permutation> s;
  for (Point i = 0; i + 5 <= p; ++i) s.push_back(double_transposition(p, 1 + i, 2 + i, 3 + i, 4 + i));

  // s_{p-2} = (1, p-1, p-3, p-4, ..., 3, 2), s_p = (1, p-1, p-2, ..., 4, 3).
  std::vector<Point> a{1, static_cast<Point>(p - 1)};
  for (Point v = static_cast<Point>(p - 3); v >= 2; --v) a.push_back(v);
  std::vector<Point> b{1};
  for (Point v = static_cast<Point>(p - 1); v >= 3; --v) b.push_back(v);
  const Permutation sp2 = from_cycle(a, p);
  const Permutation sp = from_cycle(b, p);
  s.push_back(sp2.inverse());
  s.push_back(sp2);
  s.push_back(sp.inverse());
  s.push_back(sp);
  return s;
}

std::vector<Permutation> alt_p_involutions(std::uint64_t p) {
  require_alt_prime(p);
  const Permutation x = long_cycle(p);
  const Permutation t = double_transposition(p, 1, 2, 3, 4);
  std::vector<Permutation> out;
  Permutation xi = Permutation::identity(p);
  for (std::uint64_t i = 0; i < p; ++i, xi = xi * x) out.push_back(conjugate(t, xi));
  return out;
}

bool support_table_check(std::uint64_t p) {
  if (p < 11) throw std::invalid_argument("support table rule needs p >= 11");
  const auto inv = alt_p_involutions(p);
  for (std::uint64_t i = 0; i < p; ++i) {
    for (std::uint64_t j = 0; j < p; ++j) {
      if (i == j) continue;
      const std::size_t d = circular_distance(i, j, p);
      const std::size_t expected = d == 1 ? 5 : d == 2 ? 4 : d == 3 ? 7 : 8;
      if (support(inv[i] * inv[j]) != expected) return false;
    }
  }
  return true;
}

bool sigma_cycle_check(std::uint64_t p) {
  if (p < 11) throw std::invalid_argument("sigma cycle check needs p >= 11");
  const auto inv = alt_p_involutions(p);
  std::vector<Edge> edges;
  for (std::uint64_t i = 0; i < p; ++i) {
    for (std::uint64_t j = i + 1; j < p; ++j) {
      if (support(inv[i] * inv[j]) == 5) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  const SymGraph sigma = SymGraph::from_edges(p, std::move(edges));
  const GraphPredicates pred = graph_predicates(sigma);
  return pred.connected && pred.valency == std::size_t{2} && sigma.edge_count() == p;
}

AltHChecks alt_p_h_checks(std::uint64_t p) {
  require_alt_prime(p);
  const Permutation x = long_cycle(p);
  const Permutation t = double_transposition(p, 1, 2, 3, 4);
  const Permutation h = reversal(p);
  AltHChecks c;
  c.x_inverted = conjugate(x, h) == x.inverse();
  const Permutation th = conjugate(t, h);
  const Permutation formula = double_transposition(p, 1, static_cast<Point>(p), static_cast<Point>(p - 1),
                                                   static_cast<Point>(p - 2));
  c.t_image_formula = th == formula && th == conjugate(t, power(x, static_cast<long long>(p - 3)));
  const auto inv = alt_p_involutions(p);
  c.t_image_in_involutions = std::find(inv.begin(), inv.end(), th) != inv.end();
  c.parity_matches = (parity(h) == Parity::even) == (p % 4 == 1);
  const PermGroup H({x});
  const DoubleCosetSet d = double_coset(H, t);
  c.connection_fixed = std::all_of(d.elements().begin(), d.elements().end(),
                                   [&](const Permutation& g) { return d.contains(conjugate(g, h)); });
  return c;
}

std::vector<Permutation> m23_printed_S() {
  std::vector<Permutation> out;
  for (const char* s : m23_s) out.push_back(parse_cycles(s, 23));
  return out;
}

M23DeepChecks m23_deep_checks(const FamilyBundle& bundle, const std::vector<Permutation>& connection_set) {
  if (bundle.spec.family != Family::m23) throw std::invalid_argument("m23 checks need the m23 bundle");
  M23DeepChecks c;
  const auto printed = m23_printed_S();
  c.s_size = connection_set.size();
  {
    auto a = connection_set, b = printed;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    c.s_matches_printed = a == b;
  }
  std::unordered_set<Permutation, PermutationHash> cubed;
  for (const auto& a : connection_set) {
    for (const auto& b : connection_set) {
      const Permutation ab = a * b;
      for (const auto& d : connection_set) cubed.insert(ab * d);
    }
  }
  c.s_cubed_size = cubed.size();
  c.s1_squared_in_s_cubed = cubed.count(printed[0] * printed[0]) != 0;

  const Permutation& b = bundle.named.at("b");
  c.b_order = order(b);
  const DoubleCosetSet d = double_coset(bundle.H, bundle.t);
  c.b_fixes_subgroup = std::all_of(bundle.H.generators().begin(), bundle.H.generators().end(),
                                   [&](const Permutation& h) { return bundle.H.contains(conjugate(h, b)); });
  c.b_fixes_connection = std::all_of(d.elements().begin(), d.elements().end(),
                                     [&](const Permutation& g) { return d.contains(conjugate(g, b)); });

  const Permutation& s11 = printed[10];
  c.s11_order = order(s11);
  std::unordered_set<Permutation, PermutationHash> in_s(connection_set.begin(), connection_set.end());
  // Consecutive vertices g, s11 g differ by s11 on the left; the walk closes
  // after five steps and visits five distinct vertices iff s11 has order 5.
  c.five_cycle = in_s.count(s11) != 0 && c.s11_order == 5;
  return c;
}

std::vector<std::string> transcription_mismatches(const FamilyBundle& bundle) {
  std::vector<std::string> bad;
  auto expect_type = [&](const std::string& name, const Permutation& g, std::vector<std::size_t> type) {
    std::sort(type.begin(), type.end());
    if (cycle_type_of(g) != type) bad.push_back(name);
  };
  const auto& n = bundle.named;
  switch (bundle.spec.family) {
    case Family::psl2_11:
      expect_type("x", n.at("x"), {11});
      expect_type("y", n.at("y"), {3, 3, 3});
      expect_type("t", n.at("t"), {2, 2, 2, 2});
      break;
    case Family::psl2_29:
      expect_type("x", n.at("x"), {29});
      expect_type("y", n.at("y"), std::vector<std::size_t>(10, 3));
      expect_type("t", n.at("t"), std::vector<std::size_t>(14, 2));
      expect_type("z", n.at("z"), {7, 7, 7, 7});
      break;
    case Family::m23: {
      expect_type("x", n.at("x"), {23});
      expect_type("y", n.at("y"), {11, 11});
      expect_type("t", n.at("t"), std::vector<std::size_t>(8, 2));
      expect_type("b", n.at("b"), {11, 11});
      const auto s = m23_printed_S();
      for (std::size_t i = 0; i < s.size(); ++i) {
        const std::string name = "s" + std::to_string(i + 1);
        if (i < 4) expect_type(name, s[i], {11, 11});
        else if (i < 10) expect_type(name, s[i], {2, 2, 3, 3, 6, 6});
        else if (i < 16) expect_type(name, s[i], {5, 5, 5, 5});
        else expect_type(name, s[i], std::vector<std::size_t>(8, 2));
      }
      // Inverse pairs among the non-involutions, and the two generators that
      // reappear in the list.
      for (std::size_t i = 0; i < 16; i += 2) {
        if (s[i + 1] != s[i].inverse()) bad.push_back("s" + std::to_string(i + 2) + "=s" + std::to_string(i + 1) + "^-1");
      }
      if (s[0] != n.at("y")) bad.push_back("s1=y");
      if (s[19] != n.at("t")) bad.push_back("s20=t");
      break;
    }
    case Family::alt_p:
      expect_type("x", n.at("x"), {static_cast<std::size_t>(bundle.spec.p)});
      expect_type("t", n.at("t"), {2, 2});
      break;
  }
  return bad;
}

}  // namespace pgv
