#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evc/graph.hpp"
#include "evc/random.hpp"

namespace evc {

/// Guard positions, one guard per vertex.
using Config = VertexSet;

struct Move {
  Vertex from = 0;
  Vertex to = 0;
  bool operator==(const Move&) const = default;
  auto operator<=>(const Move&) const = default;
};

/// One defence: every guard's destination (stationary guards map to
/// themselves) plus the guard that traverses the attacked edge.
struct MovePlan {
  std::vector<Move> assignment;  // sorted by origin
  Move crossing;

  /// Guards that actually change vertex.
  std::vector<Move> moving() const;
  Config destination(std::size_t universe) const;
};

/// Builds a plan from the moving guards only; everyone else stays.
/// Throws GraphError if the result is not a bijection or no move crosses `attacked`.
MovePlan plan_from_moves(const Config& c, std::span<const Move> moves, Edge attacked);

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct Budget {
  std::size_t max_configs = 1'000'000;
  std::uint64_t max_transition_tests = 100'000'000;

  /// Defaults, with max_configs overridden by the EVC_BUDGET environment variable.
  static Budget from_env();
};

/// The exact engine packs configurations into 64-bit masks.
inline constexpr std::size_t kEngineVertexLimit = 64;

/// Some(plan) iff c can be reconfigured into c2 in one round with a guard
/// crossing `attacked`. Decided by bipartite perfect matching for each
/// orientation of the attacked edge (first endpoint -> second tried first).
/// Throws GraphError on size mismatch or when `attacked` is not an edge.
std::optional<MovePlan> is_legal_transition(const Graph& g, const Config& c, const Config& c2, Edge attacked);

enum class MoveRejection { not_a_bijection, neighborhood_violation, no_crossing };

std::string_view to_string(MoveRejection r);

struct MoveCheck {
  std::optional<MoveRejection> rejection;
  std::string reason;
  MovePlan plan;   // valid when accepted
  Config result;   // valid when accepted
  bool accepted() const { return !rejection; }
};

/// Validates an explicit list of moving guards against an attack.
MoveCheck check_move_list(const Graph& g, const Config& c, std::span<const Move> moves, Edge attacked);

/// All size-k vertex covers in lexicographic order of their sorted member lists.
std::vector<Config> vertex_covers_of_size(const Graph& g, std::size_t k, const Budget& budget = {});

/// Greatest fixed point of size-k covers from which every attack has a legal
/// answer landing back in the set, with positional policies for both players.
class SafeSet {
 public:
  std::size_t guards() const { return k_; }
  const Graph& graph() const { return *graph_; }
  bool empty() const { return member_count_ == 0; }
  std::size_t size() const { return member_count_; }

  /// Members in canonical order.
  std::vector<Config> members() const;
  bool contains(const Config& c) const;

  /// Stored defender answer; throws Error if c is not a member.
  std::pair<MovePlan, Config> defend(const Config& c, Edge attacked) const;

  /// Edge that eliminated c. nullopt for members and for sets that are not size-k covers.
  std::optional<Edge> killer(const Config& c) const;

  /// Sweep in which c was eliminated (1-based); nullopt for members/non-covers.
  std::optional<std::size_t> elimination_sweep(const Config& c) const;

  std::size_t sweeps() const { return sweeps_; }
  std::size_t cover_count() const { return covers_.size(); }

  bool operator==(const SafeSet& o) const;

 private:
  friend struct SafeSetBuilder;

  std::optional<std::size_t> index_of(std::uint64_t mask) const;

  std::shared_ptr<const Graph> graph_;
  std::size_t k_ = 0;
  std::vector<std::uint64_t> covers_;             // canonical order
  std::vector<std::uint8_t> alive_;
  std::vector<std::uint32_t> killer_edge_;        // edge index, valid when !alive
  std::vector<std::uint32_t> elimination_sweep_;  // 0 for members
  std::vector<std::uint32_t> policy_;             // member x edge -> successor cover index
  std::size_t member_count_ = 0;
  std::size_t sweeps_ = 0;
};

/// OpenMP kernel: barrier-synchronised elimination sweeps, parallel over
/// covers. Each (cover, edge) pair resumes its answer search where the last
/// sweep stopped, so no candidate is matched twice.
SafeSet safe_set(const Graph& g, std::size_t k, const Budget& budget = {});

/// Serial reference: tests every (cover, edge, cover) triple directly in each
/// sweep. Same barrier semantics, so the result is identical to safe_set.
SafeSet safe_set_reference(const Graph& g, std::size_t k, const Budget& budget = {});

struct EvcResult {
  std::size_t mvc = 0;
  std::optional<std::size_t> evc;               // nullopt: no win up to the searched bound
  std::map<std::size_t, bool> win_profile;      // k in [mvc, min(2 mvc, n, k_max)]
  std::optional<SafeSet> safe;                  // safe set at k = evc
  std::vector<std::string> warnings;            // non-monotone profile reports
};

EvcResult evc_exact(const Graph& g, std::optional<std::size_t> k_max = std::nullopt, const Budget& budget = {});

std::pair<MovePlan, Config> defender_policy_step(const SafeSet& s, const Config& c, Edge attacked);

/// Uncovered edge if c is not a cover, otherwise the recorded killer.
/// Throws Error if c is safe or has the wrong size.
Edge attacker_policy_step(const SafeSet& s, const Config& c);

class Defender {
 public:
  virtual ~Defender() = default;
  virtual Config initial() = 0;
  /// nullopt: no legal answer (the defender concedes).
  virtual std::optional<std::pair<MovePlan, Config>> respond(const Config& c, Edge attacked) = 0;
  /// Free-form label for the configuration (nice-cover kind, template tag).
  virtual std::string annotate(const Config&) const { return {}; }
};

class Attacker {
 public:
  virtual ~Attacker() = default;
  virtual Edge attack(const Config& c, std::size_t round) = 0;
};

class ExactDefender : public Defender {
 public:
  explicit ExactDefender(std::shared_ptr<const SafeSet> safe);
  Config initial() override;
  std::optional<std::pair<MovePlan, Config>> respond(const Config& c, Edge attacked) override;

 private:
  std::shared_ptr<const SafeSet> safe_;
};

/// Plays the killer edges from unsafe configurations; from safe ones it falls
/// back to uniformly random edges.
class ExactAttacker : public Attacker {
 public:
  ExactAttacker(std::shared_ptr<const SafeSet> safe, std::uint64_t seed);
  Edge attack(const Config& c, std::size_t round) override;

 private:
  std::shared_ptr<const SafeSet> safe_;
  Rng rng_;
};

class RandomAttacker : public Attacker {
 public:
  RandomAttacker(const Graph& g, std::uint64_t seed);
  Edge attack(const Config& c, std::size_t round) override;

 private:
  std::vector<Edge> edges_;
  Rng rng_;
};

/// n-1 guards: an attack touching the empty vertex pulls the other endpoint's
/// guard into it, every other attack is answered by exchange.
class AllButOneDefender : public Defender {
 public:
  explicit AllButOneDefender(const Graph& g);
  Config initial() override;
  std::optional<std::pair<MovePlan, Config>> respond(const Config& c, Edge attacked) override;
  std::string annotate(const Config& c) const override;

 private:
  const Graph* graph_;
};

/// Answers an attack on an edge with both endpoints guarded by exchanging them.
std::pair<MovePlan, Config> exchange_plan(const Config& c, Edge attacked);

struct TraceEvent {
  std::size_t round = 0;
  std::optional<Edge> attacked;  // empty for the initial record
  MovePlan plan;
  Config config;
  std::string annotation;
};

struct SimulationResult {
  bool survived = true;
  std::optional<std::size_t> lost_round;
  std::vector<TraceEvent> trace;  // trace[0] is the initial configuration
};

class SimulationError : public Error {
 public:
  SimulationError(std::size_t round, const std::string& what)
      : Error("round " + std::to_string(round) + ": " + what), round_(round) {}
  std::size_t round() const { return round_; }

 private:
  std::size_t round_;
};

/// Plays up to `rounds` rounds. Every defender answer is revalidated with
/// is_legal_transition; an illegal answer raises SimulationError.
SimulationResult simulate(const Graph& g, std::size_t k, Defender& defender, Attacker& attacker, std::size_t rounds);

/// `round,u v,from->to;...,id id ...[,annotation]`
std::string format_trace_line(const Graph& g, const TraceEvent& e);
/// Parses one trace line; `previous` supplies the stationary guards of the plan.
TraceEvent parse_trace_line(const Graph& g, std::string_view line, const Config& previous);
std::string format_trace(const Graph& g, std::span<const TraceEvent> events);

/// `safe k=<k> count=<m>` followed by one sorted id list per member.
std::string dump_safe_set(const SafeSet& s);

}  // namespace evc
