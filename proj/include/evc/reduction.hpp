#pragma once

// Red-Blue Dominating Set -> Eternal Vertex Cover transformation, the nice
// vertex cover defence and the dominating-set extraction.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evc/game.hpp"
#include "evc/graph.hpp"

namespace evc {

struct RbdsInstance {
  std::vector<std::string> reds;
  std::vector<std::string> blues;
  std::vector<std::pair<std::string, std::string>> edges;  // (red, blue)
  std::size_t k = 0;

  std::size_t r() const { return reds.size(); }
  std::size_t b() const { return blues.size(); }

  /// Throws Error on duplicate ids, non red-blue edges or duplicate edges.
  void validate() const;

  /// 1-based red indices adjacent to blue `blue` (1-based).
  std::vector<std::size_t> red_neighbors(std::size_t blue) const;
  bool adjacent(std::size_t red, std::size_t blue) const;
};

RbdsInstance parse_rbds_json(std::string_view text);
std::string rbds_to_json(const RbdsInstance& inst);

/// FNV-1a over the canonical JSON form, as 16 hex digits.
std::string rbds_digest(const RbdsInstance& inst);

enum class Preprocessed { normalized, trivial_yes, trivial_no };

struct PreprocessResult {
  Preprocessed outcome = Preprocessed::normalized;
  std::string reason;
};

/// Undominatable blue -> NO; k >= b -> YES; b == 1 -> YES iff k >= 1;
/// k > r -> YES (all reds dominate).
PreprocessResult preprocess_rbds(const RbdsInstance& inst);

/// Brute force over red subsets of size <= k. Returns the first dominating
/// subset (1-based indices, smallest size first, then lexicographic).
struct RbdsAnswer {
  bool yes = false;
  std::vector<std::size_t> witness;
};
RbdsAnswer rbds_oracle(const RbdsInstance& inst, std::size_t budget = 10'000'000);

enum class Variant { bipartite, split };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view s);

enum class RoleKind { red, blue, dependent, dependent_star, universal, backup };

/// index: red/blue/dependent type (1-based); slot: position inside C_i or D (1-based).
struct Role {
  RoleKind kind = RoleKind::red;
  std::size_t index = 0;
  std::size_t slot = 0;
  bool operator==(const Role&) const = default;
};

enum class EdgeKind { structural, sliding, supplier, bridge, clique };

std::string_view to_string(RoleKind k);
std::string_view to_string(EdgeKind k);

/// type: blue index for sliding edges into C_i, 0 for sliding edges into D.
struct EdgeInfo {
  EdgeKind kind = EdgeKind::structural;
  std::size_t type = 0;
  bool operator==(const EdgeInfo&) const = default;
};

class ReducedInstance {
 public:
  /// Builds H and ell = b + k + 2 from a normalized instance. Throws Error if
  /// preprocessing would not return `normalized`.
  static ReducedInstance build(const RbdsInstance& inst, Variant variant);

  /// Rebuilds from an artifact (graph + annotations), cross-checking them.
  static ReducedInstance from_artifact(const std::string& graph_text, const std::string& sidecar_json);

  const Graph& graph() const { return h_; }
  std::size_t ell() const { return ell_; }
  Variant variant() const { return variant_; }
  const RbdsInstance& source() const { return source_; }
  std::size_t r() const { return source_.r(); }
  std::size_t b() const { return source_.b(); }
  std::size_t k() const { return source_.k; }

  /// b^2 + 3
  std::size_t dependents_per_type() const { return b() * b() + 3; }

  const Role& role(Vertex v) const { return roles_.at(v); }
  const EdgeInfo& edge_info(std::size_t edge_index) const { return edge_info_.at(edge_index); }
  const EdgeInfo& edge_info(Edge e) const;

  Vertex red(std::size_t i) const { return red_.at(i - 1); }
  Vertex blue(std::size_t i) const { return blue_.at(i - 1); }
  const std::vector<Vertex>& dependents(std::size_t type) const { return dependents_.at(type - 1); }
  const std::vector<Vertex>& star_dependents() const { return star_dependents_; }
  Vertex star() const { return star_; }
  Vertex dagger() const { return dagger_; }

  /// B u {star}
  VertexSet core() const;

  std::string sidecar_json() const;

  /// Non-fatal remarks about the source (e.g. disconnected red-blue graph).
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  void index_roles();

  Graph h_;
  std::size_t ell_ = 0;
  Variant variant_ = Variant::bipartite;
  RbdsInstance source_;
  std::vector<Role> roles_;
  std::vector<EdgeInfo> edge_info_;
  std::vector<Vertex> red_;
  std::vector<Vertex> blue_;
  std::vector<std::vector<Vertex>> dependents_;
  std::vector<Vertex> star_dependents_;
  Vertex star_ = 0;
  Vertex dagger_ = 0;
  std::vector<std::string> warnings_;
};

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckLine> checks;
  bool all_passed() const;
};

struct VerifyOptions {
  /// Run the "every cover of size <= ell contains B u {star}" enumeration
  /// only when the graph has at most this many vertices.
  std::size_t enumeration_vertex_limit = kEngineVertexLimit;
  Budget budget{};
};

/// Structural checks on H. Failures are reported, never thrown.
VerificationReport verify_instance(const ReducedInstance& ri, const VerifyOptions& opts = {});

enum class NiceKind { backup, dependent, dependent_star, red };

std::string_view to_string(NiceKind k);

/// B u {star} u S* u {extra}. extra is dagger, a dependent, or a red v_j outside S*.
struct NiceCover {
  NiceKind kind = NiceKind::backup;
  Vertex extra = 0;
  std::vector<std::size_t> dom;  // S*, sorted 1-based red indices

  VertexSet materialize(const ReducedInstance& ri) const;
  /// "Backup", "Dependent(i,w)", "DependentStar(w)", "Red(j)"
  std::string label(const ReducedInstance& ri) const;
  bool operator==(const NiceCover&) const = default;
};

/// S* used by the nice covers: `dom` padded with the smallest unused red
/// indices up to min(k, r). Throws Error if dom does not dominate or |dom| > k.
std::vector<std::size_t> nice_support(const ReducedInstance& ri, std::vector<std::size_t> dom);

struct NiceFamilies {
  std::vector<std::size_t> support;
  NiceCover backup;
  std::vector<NiceCover> dependent;       // types 1..b, in order
  std::vector<NiceCover> dependent_star;
  std::vector<NiceCover> red;

  std::vector<NiceCover> all() const;
};

NiceFamilies nice_cover_families(const ReducedInstance& ri, const std::vector<std::size_t>& dom);

/// Matches c against the nice templates of the given support S*. Without a
/// support, any dominating S* of the right size is considered and the match
/// must be unique.
std::optional<NiceCover> classify_cover(const ReducedInstance& ri, const Config& c,
                                        const std::optional<std::vector<std::size_t>>& support = std::nullopt);

struct NiceDefense {
  MovePlan plan;
  NiceCover next;
  int rule = 0;  // case 1..12 by (cover kind, edge kind); 0 for clique edges
};

/// One round of the nice-cover defence. Throws Error if nc is invalid for ri
/// or if the attacked pair is not an edge.
NiceDefense defend_nice(const ReducedInstance& ri, const NiceCover& nc, Edge attacked);

/// Dominating set (source red ids) read off a nonempty safe set at k = ell.
std::vector<std::string> extract_dominating_set(const ReducedInstance& ri, const SafeSet& s);

/// H[c] connected. Empty and singleton sets count as connected.
bool check_connected_cover(const ReducedInstance& ri, const Config& c);

class NiceDefender : public Defender {
 public:
  NiceDefender(const ReducedInstance& ri, std::vector<std::size_t> dom);
  Config initial() override;
  std::optional<std::pair<MovePlan, Config>> respond(const Config& c, Edge attacked) override;
  std::string annotate(const Config& c) const override;
  const std::vector<std::size_t>& support() const { return support_; }

 private:
  const ReducedInstance* ri_;
  std::vector<std::size_t> support_;
};

}  // namespace evc
