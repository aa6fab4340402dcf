#include "pgv/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pgv/errors.hpp"

namespace pgv {

SymGraph SymGraph::from_edges(std::size_t vertex_count, std::vector<Edge> edges) {
  std::vector<std::size_t> degree(vertex_count, 0);
  for (auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u + 1));
    if (u > v) std::swap(u, v);
    ++degree[u];
    ++degree[v];
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("repeated edge");
  }
  SymGraph g;
  g.offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.targets_[fill[u]++] = v;
    g.targets_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

SymGraph SymGraph::from_adjacency(const std::vector<std::vector<Vertex>>& adjacency) {
  const std::size_t n = adjacency.size();
  SymGraph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + adjacency[v].size();
  g.targets_.reserve(g.offsets_.back());
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Vertex> row = adjacency[v];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) throw std::invalid_argument("repeated edge");
    for (Vertex w : row) {
      if (w >= n) throw std::invalid_argument("neighbor out of range");
      if (w == v) throw std::invalid_argument("loop at vertex " + std::to_string(v + 1));
    }
    g.targets_.insert(g.targets_.end(), row.begin(), row.end());
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (!g.has_edge(w, v)) throw std::invalid_argument("adjacency is not symmetric");
    }
  }
  return g;
}

bool SymGraph::has_edge(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> SymGraph::arc_index(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  const auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return offsets_[u] + static_cast<std::size_t>(it - nb.begin());
}

std::optional<std::size_t> SymGraph::valency() const {
  const std::size_t n = vertex_count();
  if (n == 0) return std::nullopt;
  const std::size_t d = degree(0);
  for (Vertex v = 1; v < n; ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

std::vector<Edge> SymGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

SymGraph SymGraph::relabeled(std::span<const Vertex> labels) const {
  if (labels.size() != vertex_count()) throw std::invalid_argument("relabeling has wrong length");
  std::vector<Edge> mapped;
  mapped.reserve(edge_count());
  for (const auto& [u, v] : edges()) mapped.emplace_back(labels[u], labels[v]);
  return from_edges(vertex_count(), std::move(mapped));
}

bool SymGraph::is_automorphism(const Permutation& g) const {
  if (g.degree() != vertex_count()) return false;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    if (degree(g(u)) != degree(u)) return false;
    for (Vertex v : neighbors(u)) {
      if (!has_edge(g(u), g(v))) return false;
    }
  }
  return true;
}

GraphPredicates graph_predicates(const SymGraph& graph) {
  GraphPredicates out;
  out.valency = graph.valency();
  const std::size_t n = graph.vertex_count();
  if (n == 0) return out;
  std::vector<int> colour(n, -1);
  bool bipartite = true;
  std::size_t components = 0;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    ++components;
    colour[s] = 0;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Vertex u = queue[i];
      for (Vertex v : graph.neighbors(u)) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          bipartite = false;
        }
      }
    }
  }
  out.connected = components == 1;
  out.bipartite = bipartite;
  return out;
}

QuotientResult quotient_graph(const SymGraph& graph, const std::vector<std::vector<Vertex>>& blocks) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::int64_t> block_of(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block in partition");
    for (Vertex v : blocks[b]) {
      if (v >= n) throw std::invalid_argument("partition names a vertex out of range");
      if (block_of[v] >= 0) throw std::invalid_argument("vertex " + std::to_string(v + 1) + " in two blocks");
      block_of[v] = static_cast<std::int64_t>(b);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (block_of[v] < 0) throw std::invalid_argument("vertex " + std::to_string(v + 1) + " not covered by partition");
  }

  QuotientResult result;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    std::vector<Vertex> targets;
    for (Vertex v : graph.neighbors(u)) targets.push_back(static_cast<Vertex>(block_of[v]));
    std::sort(targets.begin(), targets.end());
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) result.multi_edges_collapsed = true;
    for (Vertex c : targets) {
      const auto b = static_cast<Vertex>(block_of[u]);
      if (c == b) {
        result.loops_discarded = true;
      } else if (b < c) {
        edges.emplace_back(b, c);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  result.graph = SymGraph::from_edges(blocks.size(), std::move(edges));
  return result;
}

void write_edge_list(std::ostream& out, const SymGraph& graph) {
  out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (Vertex u = 0; u < graph.vertex_count(); ++u) {
    for (Vertex v : graph.neighbors(u)) {
      if (u < v) out << u + 1 << ' ' << v + 1 << '\n';
    }
  }
}

namespace {

// Reads unsigned integers while tracking line and column for diagnostics.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  std::optional<unsigned long long> next() {
    skip_space();
    if (in_.peek() == std::char_traits<char>::eof()) return std::nullopt;
    token_line_ = line_;
    token_column_ = column_;
    unsigned long long value = 0;
    bool any = false;
    while (true) {
      const int c = in_.peek();
      if (c < '0' || c > '9') break;
      value = value * 10 + static_cast<unsigned>(c - '0');
      in_.get();
      ++column_;
      any = true;
    }
    if (!any) {
      throw ParseError("edge list: expected a non-negative integer at line " + std::to_string(token_line_) +
                           ", column " + std::to_string(token_column_),
                       token_line_, token_column_);
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("edge list: " + msg + " at line " + std::to_string(token_line_) + ", column " +
                         std::to_string(token_column_),
                     token_line_, token_column_);
  }

 private:
  void skip_space() {
    while (true) {
      const int c = in_.peek();
      if (c == '\n') {
        ++line_;
        column_ = 1;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++column_;
      } else {
        return;
      }
      in_.get();
    }
  }

  std::istream& in_;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::size_t token_line_ = 1;
  std::size_t token_column_ = 1;
};

}  // namespace

SymGraph read_edge_list(std::istream& in) {
  TokenReader reader(in);
  const auto n = reader.next();
  if (!n) throw ParseError("edge list: missing header `n m`", 1, 1);
  const auto m = reader.next();
  if (!m) reader.fail("missing edge count");
  std::vector<Edge> edges;
  edges.reserve(*m);
  for (unsigned long long i = 0; i < *m; ++i) {
    const auto u = reader.next();
    if (!u) reader.fail("expected " + std::to_string(*m) + " edges, found " + std::to_string(i));
    if (*u < 1 || *u > *n) reader.fail("vertex " + std::to_string(*u) + " outside 1.." + std::to_string(*n));
    const auto v = reader.next();
    if (!v) reader.fail("edge line missing second endpoint");
    if (*v < 1 || *v > *n) reader.fail("vertex " + std::to_string(*v) + " outside 1.." + std::to_string(*n));
    if (*u >= *v) reader.fail("edge endpoints must satisfy u < v");
    edges.emplace_back(static_cast<Vertex>(*u - 1), static_cast<Vertex>(*v - 1));
  }
  if (reader.next()) reader.fail("trailing data after " + std::to_string(*m) + " edges");
  try {
    return SymGraph::from_edges(*n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what(), 0, 0);
  }
}

std::string to_graph6(const SymGraph& graph) {
  const std::size_t n = graph.vertex_count();
  constexpr std::size_t limit = 62ull * 62 * 62 * 62;
  if (n > limit) throw std::invalid_argument("graph6 export supports at most 62^4 vertices");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  unsigned bits = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      bits = (bits << 1) | (graph.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out += static_cast<char>(bits + 63);
        bits = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((bits << (6 - filled)) + 63);
  return out;
}

SymGraph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t pos = 0;
  auto take = [&]() -> unsigned {
    if (pos >= text.size()) throw ParseError("graph6: truncated input", 1, pos + 1);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6: invalid byte", 1, pos + 1);
    ++pos;
    return static_cast<unsigned>(c - 63);
  };
  std::size_t n = take();
  if (n == 63) {
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      n = 0;
      for (int k = 0; k < 6; ++k) n = (n << 6) | take();
    } else {
      n = 0;
      for (int k = 0; k < 3; ++k) n = (n << 6) | take();
    }
  }
  std::vector<Edge> edges;
  unsigned chunk = 0;
  int left = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (left == 0) {
        chunk = take();
        left = 6;
      }
      --left;
      if ((chunk >> left) & 1u) edges.emplace_back(i, j);
    }
  }
  if (pos != text.size()) throw ParseError("graph6: trailing bytes", 1, pos + 1);
  return SymGraph::from_edges(n, std::move(edges));
}

void write_stream_atomically(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    writer(out);
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp + " failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

void write_file_atomically(const std::string& path, const std::string& contents) {
  write_stream_atomically(path, [&](std::ostream& out) { out << contents; });
}

}  // namespace pgv
