#include "evc/game.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "evc/algorithms.hpp"
#include "mask_kernel.hpp"

namespace evc {

std::vector<Move> MovePlan::moving() const {
  std::vector<Move> out;
  for (const auto& m : assignment)
    if (m.from != m.to) out.push_back(m);
  return out;
}

Config MovePlan::destination(std::size_t universe) const {
  Config c(universe);
  for (const auto& m : assignment) c.insert(m.to);
  return c;
}

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("EVC_BUDGET"); env && *env) {
    char* end = nullptr;
    auto value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0) b.max_configs = static_cast<std::size_t>(value);
  }
  return b;
}

std::string_view to_string(MoveRejection r) {
  switch (r) {
    case MoveRejection::not_a_bijection: return "not_a_bijection";
    case MoveRejection::neighborhood_violation: return "neighborhood_violation";
    case MoveRejection::no_crossing: return "no_crossing";
  }
  return "unknown";
}

namespace {

void require_edge(const Graph& g, Edge attacked) {
  if (!g.has_edge(attacked.first, attacked.second))
    throw GraphError("attacked pair is not an edge of the graph");
}

bool crosses(const Move& m, Edge e) {
  return (m.from == e.first && m.to == e.second) || (m.from == e.second && m.to == e.first);
}

// Generic Kuhn matching over explicit vertex lists; any n.
class GuardMatcher {
 public:
  GuardMatcher(const Graph& g, std::vector<Vertex> from, std::vector<Vertex> to)
      : g_(g), from_(std::move(from)), to_(std::move(to)), owner_(to_.size(), -1) {}

  bool solve() {
    for (std::size_t i = 0; i < from_.size(); ++i) {
      seen_.assign(to_.size(), false);
      if (!augment(i)) return false;
    }
    return true;
  }

  std::vector<Move> assignment() const {
    std::vector<Move> out;
    for (std::size_t j = 0; j < to_.size(); ++j)
      out.push_back({from_[static_cast<std::size_t>(owner_[j])], to_[j]});
    return out;
  }

 private:
  bool augment(std::size_t i) {
    const auto& row = g_.closed_neighborhood(from_[i]);
    for (std::size_t j = 0; j < to_.size(); ++j) {
      if (seen_[j] || !row.contains(to_[j])) continue;
      seen_[j] = true;
      if (owner_[j] < 0 || augment(static_cast<std::size_t>(owner_[j]))) {
        owner_[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> from_;
  std::vector<Vertex> to_;
  std::vector<int> owner_;
  std::vector<bool> seen_;
};

}  // namespace

std::optional<MovePlan> is_legal_transition(const Graph& g, const Config& c, const Config& c2, Edge attacked) {
  if (c.size() != c2.size()) throw GraphError("is_legal_transition: configurations differ in size");
  require_edge(g, attacked);
  const Edge orientations[2] = {attacked, {attacked.second, attacked.first}};
  for (auto [a, b] : orientations) {
    if (!c.contains(a) || !c2.contains(b)) continue;
    auto from = c.members();
    auto to = c2.members();
    from.erase(std::find(from.begin(), from.end(), a));
    to.erase(std::find(to.begin(), to.end(), b));
    GuardMatcher matcher(g, std::move(from), std::move(to));
    if (!matcher.solve()) continue;
    MovePlan plan;
    plan.assignment = matcher.assignment();
    plan.assignment.push_back({a, b});
    std::sort(plan.assignment.begin(), plan.assignment.end());
    plan.crossing = {a, b};
    return plan;
  }
  return std::nullopt;
}

MovePlan plan_from_moves(const Config& c, std::span<const Move> moves, Edge attacked) {
  MovePlan plan;
  Config movers(c.universe());
  for (const auto& m : moves) {
    if (!c.contains(m.from) || movers.contains(m.from)) throw GraphError("move list is not a bijection");
    movers.insert(m.from);
    plan.assignment.push_back(m);
  }
  for (Vertex v : (c - movers).members()) plan.assignment.push_back({v, v});
  std::sort(plan.assignment.begin(), plan.assignment.end());
  Config dest(c.universe());
  for (const auto& m : plan.assignment) {
    if (dest.contains(m.to)) throw GraphError("move list is not a bijection");
    dest.insert(m.to);
  }
  auto it = std::find_if(moves.begin(), moves.end(), [&](const Move& m) { return crosses(m, attacked); });
  if (it == moves.end()) throw GraphError("no guard crosses the attacked edge");
  plan.crossing = *it;
  return plan;
}

MoveCheck check_move_list(const Graph& g, const Config& c, std::span<const Move> moves, Edge attacked) {
  require_edge(g, attacked);
  MoveCheck out;
  auto reject = [&](MoveRejection r, std::string why) {
    out.rejection = r;
    out.reason = std::move(why);
    return out;
  };
  Config movers(g.size());
  for (const auto& m : moves) {
    if (m.from >= g.size() || m.to >= g.size()) return reject(MoveRejection::not_a_bijection, "unknown vertex");
    if (!c.contains(m.from))
      return reject(MoveRejection::not_a_bijection, "no guard on " + g.id(m.from));
    if (movers.contains(m.from))
      return reject(MoveRejection::not_a_bijection, "guard on " + g.id(m.from) + " moved twice");
    movers.insert(m.from);
  }
  for (const auto& m : moves) {
    if (!g.closed_neighborhood(m.from).contains(m.to))
      return reject(MoveRejection::neighborhood_violation, g.id(m.from) + " is not adjacent to " + g.id(m.to));
  }
  Config dest = c - movers;
  for (const auto& m : moves) {
    if (dest.contains(m.to))
      return reject(MoveRejection::not_a_bijection, "two guards end on " + g.id(m.to));
    dest.insert(m.to);
  }
  if (std::none_of(moves.begin(), moves.end(), [&](const Move& m) { return crosses(m, attacked); }))
    return reject(MoveRejection::no_crossing, "no guard crosses " + g.format_edge(attacked, "-"));
  out.plan = plan_from_moves(c, moves, attacked);
  out.result = std::move(dest);
  return out;
}

std::vector<Config> vertex_covers_of_size(const Graph& g, std::size_t k, const Budget& budget) {
  if (g.size() > kEngineVertexLimit)
    throw LimitExceeded("cover enumeration supports at most 64 vertices");
  detail::Board board(g);
  std::vector<Config> out;
  for (auto m : detail::enumerate_covers(board, k, budget.max_configs)) out.push_back(detail::from_mask(m, g.size()));
  return out;
}

std::pair<MovePlan, Config> defender_policy_step(const SafeSet& s, const Config& c, Edge attacked) {
  return s.defend(c, attacked);
}

Edge attacker_policy_step(const SafeSet& s, const Config& c) {
  if (c.size() != s.guards()) throw Error("attacker_policy_step: configuration has the wrong number of guards");
  if (auto e = first_uncovered_edge(s.graph(), c)) return *e;
  if (auto e = s.killer(c)) return *e;
  throw Error("attacker_policy_step: configuration is safe");
}

std::pair<MovePlan, Config> exchange_plan(const Config& c, Edge attacked) {
  if (!c.contains(attacked.first) || !c.contains(attacked.second))
    throw Error("exchange needs guards on both endpoints");
  const Move swap[2] = {{attacked.first, attacked.second}, {attacked.second, attacked.first}};
  return {plan_from_moves(c, swap, attacked), c};
}

ExactDefender::ExactDefender(std::shared_ptr<const SafeSet> safe) : safe_(std::move(safe)) {
  if (!safe_ || safe_->empty()) throw Error("exact defender needs a nonempty safe set");
}

Config ExactDefender::initial() { return safe_->members().front(); }

std::optional<std::pair<MovePlan, Config>> ExactDefender::respond(const Config& c, Edge attacked) {
  if (!safe_->contains(c)) return std::nullopt;
  return safe_->defend(c, attacked);
}

ExactAttacker::ExactAttacker(std::shared_ptr<const SafeSet> safe, std::uint64_t seed)
    : safe_(std::move(safe)), rng_(seed) {}

Edge ExactAttacker::attack(const Config& c, std::size_t) {
  const auto& g = safe_->graph();
  if (auto e = first_uncovered_edge(g, c)) return *e;
  if (c.size() == safe_->guards())
    if (auto e = safe_->killer(c)) return *e;
  return g.edges()[rng_.below(g.edge_count())];
}

RandomAttacker::RandomAttacker(const Graph& g, std::uint64_t seed) : edges_(g.edges()), rng_(seed) {
  if (edges_.empty()) throw Error("random attacker needs at least one edge");
}

Edge RandomAttacker::attack(const Config&, std::size_t) { return edges_[rng_.below(edges_.size())]; }

AllButOneDefender::AllButOneDefender(const Graph& g) : graph_(&g) {
  if (g.size() == 0) throw Error("all-but-one defender needs a vertex");
}

Config AllButOneDefender::initial() {
  Config c = graph_->full_set();
  c.erase(0);
  return c;
}

std::optional<std::pair<MovePlan, Config>> AllButOneDefender::respond(const Config& c, Edge attacked) {
  if (c.size() + 1 != graph_->size()) return std::nullopt;
  auto [u, v] = attacked;
  if (c.contains(u) && c.contains(v)) return exchange_plan(c, attacked);
  Vertex empty = c.contains(u) ? v : u;
  Vertex other = empty == u ? v : u;
  const Move step[1] = {{other, empty}};
  Config next = c;
  next.erase(other);
  next.insert(empty);
  return std::pair{plan_from_moves(c, step, attacked), next};
}

std::string AllButOneDefender::annotate(const Config& c) const {
  auto missing = (graph_->full_set() - c).members();
  return missing.size() == 1 ? "AllButOne(" + graph_->id(missing.front()) + ")" : "";
}

SimulationResult simulate(const Graph& g, std::size_t k, Defender& defender, Attacker& attacker, std::size_t rounds) {
  SimulationResult result;
  Config config;
  try {
    config = defender.initial();
  } catch (const std::exception& ex) {
    throw SimulationError(0, ex.what());
  }
  if (config.size() != k) throw SimulationError(0, "initial configuration has the wrong number of guards");
  result.trace.push_back({0, std::nullopt, {}, config, defender.annotate(config)});
  if (!is_vertex_cover(g, config)) {
    result.survived = false;
    result.lost_round = 0;
    return result;
  }
  if (g.edge_count() == 0) return result;
  for (std::size_t round = 1; round <= rounds; ++round) {
    Edge e;
    std::optional<std::pair<MovePlan, Config>> answer;
    try {
      e = attacker.attack(config, round);
      if (!g.has_edge(e.first, e.second)) throw Error("attacker chose a non-edge");
      answer = defender.respond(config, e);
    } catch (const SimulationError&) {
      throw;
    } catch (const std::exception& ex) {
      throw SimulationError(round, ex.what());
    }
    if (!answer) {
      result.survived = false;
      result.lost_round = round;
      result.trace.push_back({round, e, {}, config, "no answer"});
      return result;
    }
    if (!is_legal_transition(g, config, answer->second, e))
      throw SimulationError(round, "defender returned an illegal transition");
    if (answer->first.destination(g.size()) != answer->second)
      throw SimulationError(round, "defender plan does not match its configuration");
    config = answer->second;
    result.trace.push_back({round, e, answer->first, config, defender.annotate(config)});
    if (!is_vertex_cover(g, config)) {
      result.survived = false;
      result.lost_round = round;
      return result;
    }
  }
  return result;
}

std::string format_trace_line(const Graph& g, const TraceEvent& e) {
  std::ostringstream out;
  out << e.round << ',';
  if (e.attacked) out << g.format_edge(*e.attacked);
  out << ',';
  bool first = true;
  for (const auto& m : e.plan.moving()) {
    if (!first) out << ';';
    first = false;
    out << g.id(m.from) << "->" << g.id(m.to);
  }
  out << ',' << g.format_set(e.config);
  if (!e.annotation.empty()) out << ',' << e.annotation;
  return out.str();
}

std::string format_trace(const Graph& g, std::span<const TraceEvent> events) {
  std::string out;
  for (const auto& e : events) out += format_trace_line(g, e) + '\n';
  return out;
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

TraceEvent parse_trace_line(const Graph& g, std::string_view line, const Config& previous) {
  auto fields = split(line, ',');
  if (fields.size() < 4) throw GraphError("trace line needs at least 4 fields");
  if (fields.size() > 5) {
    // annotations may contain commas
    for (std::size_t i = 5; i < fields.size(); ++i) fields[4] += "," + fields[i];
    fields.resize(5);
  }
  TraceEvent e;
  e.round = static_cast<std::size_t>(std::stoull(fields[0]));
  auto edge_ids = words(fields[1]);
  if (!edge_ids.empty()) {
    if (edge_ids.size() != 2) throw GraphError("trace edge field must hold two ids");
    e.attacked = make_edge(g.at(edge_ids[0]), g.at(edge_ids[1]));
  }
  std::vector<Move> moves;
  if (!fields[2].empty()) {
    for (const auto& item : split(fields[2], ';')) {
      auto arrow = item.find("->");
      if (arrow == std::string::npos) throw GraphError("bad move '" + item + "'");
      moves.push_back({g.at(item.substr(0, arrow)), g.at(item.substr(arrow + 2))});
    }
  }
  e.config = Config(g.size());
  for (const auto& id : words(fields[3])) e.config.insert(g.at(id));
  if (fields.size() == 5) e.annotation = fields[4];
  if (e.attacked && !moves.empty()) e.plan = plan_from_moves(previous, moves, *e.attacked);
  return e;
}

std::string dump_safe_set(const SafeSet& s) {
  std::ostringstream out;
  auto members = s.members();
  out << "safe k=" << s.guards() << " count=" << members.size() << '\n';
  for (const auto& c : members) out << s.graph().format_set(c) << '\n';
  return out.str();
}

}  // namespace evc
