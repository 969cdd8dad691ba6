#pragma once

// Eternal vertex cover on cobipartite graphs: normalization, friend analysis,
// the closed-form evc value and the matching defender strategies.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evc/game.hpp"
#include "evc/graph.hpp"

namespace evc {

struct CobipInstance {
  Graph g;
  std::vector<Vertex> a;  // side A, ascending
  std::vector<Vertex> b;  // side B, ascending
  bool normalized = false;

  std::size_t p() const { return a.size(); }
  std::size_t q() const { return b.size(); }
  VertexSet side_a() const;
  VertexSet side_b() const;
  bool in_a(Vertex v) const;
};

/// Some 2-colouring of the complement as (A, B); nullopt if g is not cobipartite.
std::optional<std::pair<VertexSet, VertexSet>> find_sides(const Graph& g);

/// Moves A-globals to B (ascending id), swaps sides when p > q, repeats to a
/// fixpoint. Throws GraphError if the sides do not partition V into cliques.
CobipInstance normalize(const Graph& g, const VertexSet& side_a, const VertexSet& side_b);

/// `side <id> A|B` lines; every vertex must appear exactly once.
std::pair<VertexSet, VertexSet> parse_sides(const Graph& g, std::string_view text);
std::string format_sides(const CobipInstance& inst);

struct PartitionAnalysis {
  VertexSet globals_b;
  std::vector<VertexSet> friends;        // by vertex: non-neighbours on the other side
  std::vector<std::vector<Vertex>> b_parts;  // p == 2 only: B1..B4 relative to (a[0], a[1])
  std::size_t nonglobal_b_count = 0;
  std::size_t cross_edges = 0;
};

PartitionAnalysis analyze(const CobipInstance& inst);

/// Which case of the closed form decides evc.
enum class CobipBranch {
  p0_clique,
  p1_q1_empty,
  p1_isolated,
  p1_attached,
  p2q2_no_cross,
  p2q2_disjoint,
  p2q2_common,
  p2q2_one_sided,
  p2_no_cross,
  p2_one_sided,
  p2_b3_empty,
  p2_b3_partial,
  p2_b3_full,
  big_no_cross,
  big_one_edge,
  big_one_nonglobal,
  big_some_globals,
  big_one_a_source,
  big_one_b_source,
  big_spread,
};

std::string_view to_string(CobipBranch b);

/// True when the branch has evc = mvc and is defended with S_ij covers.
bool uses_sij(CobipBranch b);

std::size_t mvc_cobip(const CobipInstance& inst);

struct CobipValue {
  std::size_t evc = 0;
  std::size_t mvc = 0;
  CobipBranch branch = CobipBranch::p0_clique;
};

CobipValue evc_cobip(const CobipInstance& inst);

/// S_ij = V \ {a_i, b_j} (stored as the two vertices) or V \ {x}.
struct CoverTemplate {
  enum class Kind { sij, all_but_one };
  Kind kind = Kind::sij;
  Vertex a = 0;  // sij: a_i; all_but_one: x
  Vertex b = 0;  // sij: b_j

  static CoverTemplate sij(Vertex ai, Vertex bj) { return {Kind::sij, ai, bj}; }
  static CoverTemplate all_but_one(Vertex x) { return {Kind::all_but_one, x, 0}; }

  Config materialize(const Graph& g) const;
  std::string label(const Graph& g) const;
  bool operator==(const CoverTemplate&) const = default;
};

/// Stateless defender for one normalized instance.
class CobipStrategy {
 public:
  explicit CobipStrategy(CobipInstance inst);

  const CobipInstance& instance() const { return inst_; }
  const PartitionAnalysis& analysis() const { return analysis_; }
  const CobipValue& value() const { return value_; }
  std::size_t guards() const { return value_.evc; }

  /// Templates the strategy keeps itself inside. Sij branches: friend pairs
  /// outside the pinned vertices of the branch; otherwise every AllButOne(x).
  std::vector<CoverTemplate> valid_templates() const;
  bool is_valid(const CoverTemplate& t) const;

  /// Smallest friend pair for Sij branches, AllButOne(first vertex) otherwise.
  CoverTemplate initial() const;

  /// Template whose materialization equals c, if any valid one does.
  std::optional<CoverTemplate> recognize(const Config& c) const;

  /// One defence. Throws Error on an invalid template or a non-edge.
  std::pair<MovePlan, CoverTemplate> defend(const CoverTemplate& t, Edge attacked) const;

 private:
  CobipInstance inst_;
  PartitionAnalysis analysis_;
  CobipValue value_;
  std::optional<Vertex> pinned_a_;
  std::optional<Vertex> pinned_b_;
};

class CobipDefender : public Defender {
 public:
  explicit CobipDefender(const CobipStrategy& s) : s_(&s) {}
  Config initial() override;
  std::optional<std::pair<MovePlan, Config>> respond(const Config& c, Edge attacked) override;
  std::string annotate(const Config& c) const override;

 private:
  const CobipStrategy* s_;
};

/// Every (p, q) with p <= q, 1 <= p + q <= max_n and every cross pattern
/// (bit i*q + j set iff a_i b_j is an edge), normalized. max_n <= 8.
std::vector<CobipInstance> all_small_cobipartite(std::size_t max_n);

/// Cobipartite graph with sides a0.., b0.. and the given cross pattern.
Graph cobipartite_graph(std::size_t p, std::size_t q, const std::vector<std::pair<std::size_t, std::size_t>>& cross);

}  // namespace evc
