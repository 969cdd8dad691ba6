#pragma once

#include <cstddef>
#include <optional>

#include "evc/graph.hpp"

namespace evc {

struct CoverResult {
  std::size_t size = 0;
  VertexSet witness;
};

bool is_vertex_cover(const Graph& g, const VertexSet& s);

/// First edge (canonical order) with no endpoint in `s`.
std::optional<Edge> first_uncovered_edge(const Graph& g, const VertexSet& s);

inline constexpr std::size_t kDefaultExactLimit = 24;

/// Minimum vertex cover by branch and bound on a maximum-degree vertex, with
/// degree-0/1 reductions and a matching lower bound. Throws LimitExceeded when
/// g.size() > limit.
CoverResult mvc_exact(const Graph& g, std::size_t limit = kDefaultExactLimit);

/// Plain subset enumeration; only for n <= 16. Kept as the second route for mvc_exact.
CoverResult mvc_brute_force(const Graph& g);

/// Maximum cardinality matching (Edmonds' blossom algorithm).
Matching max_matching(const Graph& g);

/// 2-colouring; nullopt if some odd cycle exists. colour[v] in {0,1}.
std::optional<std::vector<int>> two_coloring(const Graph& g);

/// König: minimum vertex cover of a bipartite graph from a maximum matching.
/// Throws GraphError if g is not bipartite.
CoverResult mvc_bipartite(const Graph& g);

/// Both endpoints of a maximum matching.
VertexSet two_matching_cover(const Graph& g);

/// BFS diameter; nullopt means infinite (disconnected). Empty and
/// single-vertex graphs have diameter 0.
std::optional<std::size_t> diameter(const Graph& g);

bool is_connected(const Graph& g);

struct GraphClass {
  bool bipartite = false;
  bool split = false;
  bool cobipartite = false;
};

GraphClass classify(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);

}  // namespace evc
