#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace evc {

using Vertex = std::uint32_t;

/// Unordered edge stored with first < second (internal indices).
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input or an inconsistent graph operation.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// An exact routine was asked to handle more than its configured size limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Fixed-width set of vertex indices of one graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  bool contains(Vertex v) const { return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u); }
  void insert(Vertex v);
  void erase(Vertex v);

  std::vector<Vertex> members() const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator&(const VertexSet& o) const;
  VertexSet operator-(const VertexSet& o) const;

  bool operator==(const VertexSet& o) const = default;

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the sorted member lists ({0,1,2} < {0,1,3} < {0,2,3}).
bool lex_less(const VertexSet& a, const VertexSet& b);

/// Simple undirected graph. Vertices carry unique external ids; internal
/// indices 0..n-1 follow the sorted order of those ids. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds from external ids and id pairs. Throws GraphError on duplicate ids,
  /// unknown ids, self-loops and duplicate edges.
  Graph(std::vector<std::string> ids, const std::vector<std::pair<std::string, std::string>>& edges);

  /// Builds from positional edges into `ids` (positions, not sorted indices).
  static Graph from_positions(std::vector<std::string> ids, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  /// Vertices named v0..v{n-1}; edges given over those positions.
  static Graph with_default_ids(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t size() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(Vertex v) const { return ids_.at(v); }
  std::optional<Vertex> find(std::string_view id) const;
  Vertex at(std::string_view id) const;

  /// Edges in canonical (lexicographic index-pair) order.
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  /// Closed neighbourhood N[v] as a bit row.
  const VertexSet& closed_neighborhood(Vertex v) const { return closed_rows_.at(v); }

  VertexSet empty_set() const { return VertexSet(size()); }
  VertexSet full_set() const;
  VertexSet set_of(std::initializer_list<std::string_view> ids) const;
  std::string format_set(const VertexSet& s, std::string_view sep = " ") const;
  std::string format_edge(Edge e, std::string_view sep = " ") const;

  Graph complement() const;
  Graph induced(const VertexSet& keep) const;

 private:
  void finish(std::vector<Edge> edges);

  std::vector<std::string> ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexSet> closed_rows_;
};

using Matching = std::vector<Edge>;

/// Parses the text graph format: `graph <n>`, optional `v <id>` lines,
/// `e <id> <id>` lines, `#` comments. Without `v` lines the ids are the edge
/// endpoints, padded with v0, v1, ... up to n.
Graph parse_graph(std::string_view text);

/// Canonical text form: vertices by id, edges sorted by (id, id).
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);
std::string read_text_file(const std::string& path);

}  // namespace evc
