#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pgv/permutation.hpp"

namespace pgv {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph in compressed adjacency form; neighbor lists sorted.
class SymGraph {
 public:
  SymGraph() = default;

  // Throws std::invalid_argument on loops, repeated edges or endpoints >= n.
  static SymGraph from_edges(std::size_t vertex_count, std::vector<Edge> edges);
  // Throws std::invalid_argument unless the lists describe a simple symmetric graph.
  static SymGraph from_adjacency(const std::vector<std::vector<Vertex>>& adjacency);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  std::size_t arc_count() const { return targets_.size(); }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  // Offset of v's first arc; arcs of v occupy [arc_offset(v), arc_offset(v+1)).
  std::size_t arc_offset(Vertex v) const { return offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  // Index of arc (u, v) in [0, arc_count()), or nullopt when not adjacent.
  std::optional<std::size_t> arc_index(Vertex u, Vertex v) const;
  // Common degree, or nullopt for an irregular (or empty) graph.
  std::optional<std::size_t> valency() const;
  // Edges with u < v, sorted.
  std::vector<Edge> edges() const;

  // Image graph under the vertex relabeling v -> labels[v].
  SymGraph relabeled(std::span<const Vertex> labels) const;
  // True when g maps every edge to an edge.
  bool is_automorphism(const Permutation& g) const;

  bool operator==(const SymGraph&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

struct GraphPredicates {
  bool connected = false;
  bool bipartite = false;
  std::optional<std::size_t> valency;  // nullopt: not regular
};

GraphPredicates graph_predicates(const SymGraph& graph);

struct QuotientResult {
  SymGraph graph;
  bool loops_discarded = false;        // an edge joined two vertices of one block
  bool multi_edges_collapsed = false;  // some vertex had several neighbors in one block
};

// Graph on the blocks; B ~ C iff some vertex of B is adjacent to some vertex
// of C. Throws std::invalid_argument unless blocks partition the vertices.
QuotientResult quotient_graph(const SymGraph& graph, const std::vector<std::vector<Vertex>>& blocks);

// Edge-list text: `n m` then one `u v` per line, 1-based, u < v.
void write_edge_list(std::ostream& out, const SymGraph& graph);
// Throws ParseError carrying the line/column of the offending token.
SymGraph read_edge_list(std::istream& in);

// Standard graph6 encoding (no trailing newline). Throws std::invalid_argument
// for graphs with more than 62^4 vertices.
std::string to_graph6(const SymGraph& graph);
SymGraph from_graph6(std::string_view text);

// Writes to path via a temporary file and rename.
void write_file_atomically(const std::string& path, const std::string& contents);
// Same, streaming: writer fills the temporary file directly.
void write_stream_atomically(const std::string& path, const std::function<void(std::ostream&)>& writer);

}  // namespace pgv
