#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pgv/graph.hpp"
#include "pgv/perm_group.hpp"

namespace pgv {

struct AutResult {
  PermGroup group;                       // on the vertices
  std::vector<Vertex> canonical_labeling;  // vertex -> canonical position
  SymGraph canonical_graph;              // the graph relabeled canonically
  std::uint64_t fingerprint = 0;         // hash of canonical_graph
  bool vertex_transitive = false;
  std::size_t search_nodes = 0;
};

// Full automorphism group by individualization-refinement with automorphism
// pruning. The canonical graph is identical for isomorphic inputs. Throws
// BudgetExceeded("aut_vertex_limit") when the graph has more than
// vertex_limit vertices, VerificationError if a found generator fails the
// post-hoc edge check.
AutResult automorphism_group(const SymGraph& graph, std::size_t vertex_limit = 10000);

}  // namespace pgv
