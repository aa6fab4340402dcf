#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pgv/perm_group.hpp"
#include "pgv/permutation.hpp"

namespace pgv {

enum class Family { psl2_11, psl2_29, m23, alt_p };

// CLI spelling: psl2-11, psl2-29, m23, alt-p.
std::string to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::psl2_11;
  std::uint64_t p = 0;  // valency; only read for alt-p
  bool deep = false;

  // Throws std::invalid_argument for alt-p unless p is a prime >= 5.
  void validate() const;
  std::uint64_t valency() const;
  // Graph construction for alt-p with p >= 11 needs `deep`.
  bool graph_allowed() const { return family != Family::alt_p || p < 11 || deep; }
};

// The construction data: Cos(T, H, HtH) with G regular on the cosets.
struct FamilyBundle {
  FamilySpec spec;
  std::size_t degree = 0;
  PermGroup T;
  PermGroup H;
  PermGroup G;
  Permutation t;
  std::map<std::string, Permutation> named;  // x, y, t, z, b, h as applicable
};

FamilyBundle build_family(const FamilySpec& spec);

// The connection set of the alternating family written out cycle by cycle:
// s_1..s_{p-4} are (1+i,2+i)(3+i,4+i), then s_{p-3}, s_{p-2}, s_{p-1}, s_p.
// Throws std::invalid_argument for p < 5 or p not prime.
std::vector<Permutation> closed_form_S(std::uint64_t p);

// Elements x^-i t x^i, i = 0..p-1, of the alternating family.
std::vector<Permutation> alt_p_involutions(std::uint64_t p);

// supp(y_i y_j) over all i != j against the rule 1 -> 5, 2 -> 4, 3 -> 7,
// >= 4 -> 8 on the circular distance of i and j. Needs p >= 11.
bool support_table_check(std::uint64_t p);
// The graph on alt_p_involutions with y ~ z iff supp(yz) = 5 is one p-cycle.
bool sigma_cycle_check(std::uint64_t p);

struct AltHChecks {
  bool x_inverted = false;        // x^h = x^-1
  bool t_image_formula = false;   // t^h = (1,p)(p-1,p-2) = x^-(p-3) t x^(p-3)
  bool t_image_in_involutions = false;
  bool parity_matches = false;    // h even iff p = 1 mod 4
  bool connection_fixed = false;  // (HtH)^h = HtH as sets
  bool all() const {
    return x_inverted && t_image_formula && t_image_in_involutions && parity_matches && connection_fixed;
  }
};

AltHChecks alt_p_h_checks(std::uint64_t p);

// The 23 elements s_1..s_23 printed for the M23 construction.
std::vector<Permutation> m23_printed_S();

struct M23DeepChecks {
  std::size_t s_size = 0;
  bool s_matches_printed = false;
  std::size_t s_cubed_size = 0;
  bool s1_squared_in_s_cubed = true;
  bool b_fixes_subgroup = false;
  bool b_fixes_connection = true;
  Integer b_order;
  Integer s11_order;
  bool five_cycle = false;  // 1, s11, ..., s11^4 is a closed walk of distinct vertices in Cay(G, S)
};

// Uses S = G ∩ HtH computed from the bundle.
M23DeepChecks m23_deep_checks(const FamilyBundle& bundle, const std::vector<Permutation>& connection_set);

// Cycle types of the embedded generators (and of the printed M23 list)
// against facts stated alongside them. Returns the names that disagree.
std::vector<std::string> transcription_mismatches(const FamilyBundle& bundle);

}  // namespace pgv
