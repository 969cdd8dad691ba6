#include "evc/session.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>

#include "evc/algorithms.hpp"

namespace evc {

std::string_view to_string(SessionMode m) { return m == SessionMode::human_attacker ? "human-attacker" : "human-defender"; }

std::string_view to_string(DefenderSource s) {
  switch (s) {
    case DefenderSource::exact: return "exact";
    case DefenderSource::reduction_nice: return "reduction-nice";
    case DefenderSource::cobipartite: return "cobipartite";
    case DefenderSource::all_but_one: return "all-but-one";
  }
  return "unknown";
}

std::string_view to_string(SessionStatus s) {
  switch (s) {
    case SessionStatus::live: return "live";
    case SessionStatus::defender_lost: return "defender-lost";
    case SessionStatus::closed: return "closed";
  }
  return "unknown";
}

SessionMode parse_mode(std::string_view s) {
  if (s == "human-attacker") return SessionMode::human_attacker;
  if (s == "human-defender") return SessionMode::human_defender;
  throw SessionError(400, "bad_request", "unknown mode '" + std::string(s) + "'");
}

DefenderSource parse_source(std::string_view s) {
  if (s == "exact") return DefenderSource::exact;
  if (s == "reduction-nice") return DefenderSource::reduction_nice;
  if (s == "cobipartite") return DefenderSource::cobipartite;
  if (s == "all-but-one") return DefenderSource::all_but_one;
  throw SessionError(400, "bad_request", "unknown defender source '" + std::string(s) + "'");
}

class Session {
 public:
  std::mutex write_mu;

  std::string id;
  SessionMode mode = SessionMode::human_attacker;
  DefenderSource source = DefenderSource::exact;
  std::size_t k = 0;
  std::shared_ptr<const Graph> graph;
  Config config;
  std::size_t round = 0;
  SessionStatus status = SessionStatus::live;
  std::optional<Edge> announced;
  std::optional<Edge> uncovered;
  std::vector<TraceEvent> events;
  std::map<Vertex, std::string> vertex_labels;
  std::map<Edge, std::string> edge_labels;

  std::shared_ptr<const SafeSet> safe;
  std::unique_ptr<ReducedInstance> reduced;
  std::unique_ptr<CobipStrategy> cobip;
  std::unique_ptr<Defender> defender;
  std::unique_ptr<Attacker> attacker;
  std::optional<std::filesystem::path> trace_path;

  SessionView view() const {
    std::lock_guard lock(snap_mu_);
    return *snapshot_;
  }

  void publish() {
    auto v = std::make_shared<SessionView>();
    v->id = id;
    v->mode = mode;
    v->source = source;
    v->k = k;
    v->round = round;
    v->status = status;
    v->config = config;
    v->annotation = events.empty() ? std::string{} : events.back().annotation;
    v->announced = announced;
    v->uncovered = uncovered;
    v->graph = graph;
    v->vertex_labels = vertex_labels;
    v->edge_labels = edge_labels;
    std::lock_guard lock(snap_mu_);
    snapshot_ = std::move(v);
  }

  void record(const TraceEvent& e) {
    events.push_back(e);
    if (!trace_path) return;
    std::ofstream out(*trace_path, std::ios::app);
    if (!out) throw Error("cannot append to trace file " + trace_path->string());
    out << format_trace_line(*graph, e) << '\n';
  }

 private:
  mutable std::mutex snap_mu_;
  std::shared_ptr<const SessionView> snapshot_;
};

namespace {

SessionError inapplicable(const std::string& message) { return SessionError(422, "inapplicable_source", message); }

std::size_t require_k(const CreateRequest& req, std::size_t needed, const char* what) {
  if (req.k && *req.k != needed)
    throw inapplicable(std::string(what) + " defends with exactly " + std::to_string(needed) + " guards, not " +
                       std::to_string(*req.k));
  return needed;
}

void setup_reduction(Session& s, const CreateRequest& req) {
  if (!req.rbds) throw SessionError(400, "bad_request", "reduction-nice needs an RBDS instance");
  try {
    s.reduced = std::make_unique<ReducedInstance>(ReducedInstance::build(*req.rbds, req.variant));
  } catch (const Error& e) {
    throw inapplicable(e.what());
  }
  const auto& ri = *s.reduced;
  std::vector<std::size_t> dom;
  if (req.dominating_set) {
    for (const auto& id : *req.dominating_set) {
      auto it = std::find(ri.source().reds.begin(), ri.source().reds.end(), id);
      if (it == ri.source().reds.end()) throw SessionError(400, "bad_request", "unknown red vertex '" + id + "'");
      dom.push_back(static_cast<std::size_t>(it - ri.source().reds.begin()) + 1);
    }
  } else {
    auto answer = rbds_oracle(ri.source());
    if (!answer.yes) throw inapplicable("RBDS instance has no dominating set of size k");
    dom = answer.witness;
  }
  s.graph = std::make_shared<const Graph>(ri.graph());
  s.k = require_k(req, ri.ell(), "reduction-nice");
  try {
    s.defender = std::make_unique<NiceDefender>(ri, dom);
  } catch (const Error& e) {
    throw inapplicable(e.what());
  }
  for (Vertex v = 0; v < ri.graph().size(); ++v) s.vertex_labels[v] = std::string(to_string(ri.role(v).kind));
  for (std::size_t e = 0; e < ri.graph().edge_count(); ++e)
    s.edge_labels[ri.graph().edges()[e]] = std::string(to_string(ri.edge_info(e).kind));
}

void setup_cobipartite(Session& s, const CreateRequest& req) {
  const Graph& g = *s.graph;
  auto sides = req.sides ? req.sides : find_sides(g);
  if (!sides) throw inapplicable("graph is not cobipartite");
  try {
    s.cobip = std::make_unique<CobipStrategy>(normalize(g, sides->first, sides->second));
  } catch (const GraphError& e) {
    throw inapplicable(e.what());
  }
  s.k = require_k(req, s.cobip->guards(), "cobipartite strategy");
  s.defender = std::make_unique<CobipDefender>(*s.cobip);
  for (auto v : s.cobip->instance().a) s.vertex_labels[v] = "A";
  for (auto v : s.cobip->instance().b) s.vertex_labels[v] = "B";
}

void setup_exact(Session& s, const CreateRequest& req, const Budget& budget) {
  const Graph& g = *s.graph;
  try {
    if (req.k) {
      s.k = *req.k;
    } else {
      auto r = evc_exact(g, std::nullopt, budget);
      if (!r.evc) throw inapplicable("no winning guard count found within the search range");
      s.k = *r.evc;
    }
    s.safe = std::make_shared<const SafeSet>(safe_set(g, s.k, budget));
  } catch (const BudgetExceeded& e) {
    throw SessionError(422, "budget_exceeded", e.what());
  } catch (const LimitExceeded& e) {
    throw SessionError(422, "budget_exceeded", e.what());
  }
  if (s.safe->empty()) throw inapplicable("safe set is empty for k = " + std::to_string(s.k));
  s.defender = std::make_unique<ExactDefender>(s.safe);
}

void setup_attacker(Session& s, const CreateRequest& req, const Budget& budget) {
  if (s.graph->edge_count() == 0) return;
  std::shared_ptr<const SafeSet> safe = s.safe;
  if (!safe) {
    try {
      safe = std::make_shared<const SafeSet>(safe_set(*s.graph, s.k, budget));
    } catch (const Error&) {
      safe.reset();
    }
  }
  if (safe) s.attacker = std::make_unique<ExactAttacker>(safe, req.seed);
  else s.attacker = std::make_unique<RandomAttacker>(*s.graph, req.seed);
}

Vertex lookup(const Graph& g, const std::string& id) {
  auto v = g.find(id);
  if (!v) throw SessionError(422, "unknown_vertex", "unknown vertex '" + id + "'");
  return *v;
}

void require_live(const Session& s) {
  if (s.status == SessionStatus::closed) throw SessionError(410, "gone", "session " + s.id + " is closed");
  if (s.status == SessionStatus::defender_lost)
    throw SessionError(409, "game_over", "session " + s.id + " has ended: the defender lost");
}

void announce(Session& s) {
  s.announced.reset();
  if (s.attacker && s.status == SessionStatus::live) s.announced = s.attacker->attack(s.config, s.round + 1);
}

void mark_lost_if_uncovered(Session& s) {
  if (auto e = first_uncovered_edge(*s.graph, s.config)) {
    s.status = SessionStatus::defender_lost;
    s.uncovered = e;
  }
}

}  // namespace

SessionManager::SessionManager(std::optional<std::filesystem::path> trace_dir, Budget budget)
    : trace_dir_(std::move(trace_dir)), budget_(budget), salt_(std::random_device{}()) {
  if (trace_dir_) std::filesystem::create_directories(*trace_dir_);
}

SessionManager::~SessionManager() = default;

std::string SessionManager::next_id() {
  std::lock_guard lock(mu_);
  ++counter_;
  std::uint64_t x = (salt_ ^ (counter_ * 0x9e3779b97f4a7c15ull)) * 0xbf58476d1ce4e5b9ull;
  char buf[32];
  std::snprintf(buf, sizeof buf, "s%04llu-%08llx", static_cast<unsigned long long>(counter_),
                static_cast<unsigned long long>(x >> 32));
  return buf;
}

SessionView SessionManager::create(const CreateRequest& req) {
  auto s = std::make_shared<Session>();
  s->mode = req.mode;
  s->source = req.source;

  if (req.source == DefenderSource::reduction_nice) {
    setup_reduction(*s, req);
  } else {
    if (!req.graph) throw SessionError(400, "bad_request", "a graph is required");
    s->graph = std::make_shared<const Graph>(*req.graph);
    switch (req.source) {
      case DefenderSource::exact: setup_exact(*s, req, budget_); break;
      case DefenderSource::cobipartite: setup_cobipartite(*s, req); break;
      case DefenderSource::all_but_one:
        if (s->graph->size() == 0) throw inapplicable("graph has no vertices");
        s->k = require_k(req, s->graph->size() - 1, "all-but-one");
        s->defender = std::make_unique<AllButOneDefender>(*s->graph);
        break;
      case DefenderSource::reduction_nice: break;
    }
  }
  if (req.mode == SessionMode::human_defender) setup_attacker(*s, req, budget_);

  s->id = next_id();
  if (trace_dir_) s->trace_path = *trace_dir_ / (s->id + ".trace");
  s->config = s->defender->initial();
  TraceEvent initial;
  initial.round = 0;
  initial.config = s->config;
  initial.annotation = s->defender->annotate(s->config);
  s->record(initial);
  mark_lost_if_uncovered(*s);
  if (req.mode == SessionMode::human_defender) announce(*s);
  s->publish();
  {
    std::lock_guard lock(mu_);
    sessions_[s->id] = s;
  }
  return s->view();
}

std::shared_ptr<Session> SessionManager::find(const std::string& id) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw SessionError(404, "not_found", "no session '" + id + "'");
  return it->second;
}

SessionView SessionManager::get(const std::string& id) const { return find(id)->view(); }

RoundResult SessionManager::attack(const std::string& id, const std::pair<std::string, std::string>& edge) {
  auto s = find(id);
  std::lock_guard lock(s->write_mu);
  require_live(*s);
  if (s->mode != SessionMode::human_attacker)
    throw SessionError(409, "wrong_mode", "session " + id + " expects a defense, not an attack");
  const Graph& g = *s->graph;
  Vertex u = lookup(g, edge.first), v = lookup(g, edge.second);
  if (!g.has_edge(u, v))
    throw SessionError(422, "not_an_edge", "(" + edge.first + ", " + edge.second + ") is not an edge");
  const Edge e = make_edge(u, v);

  auto answer = s->defender->respond(s->config, e);
  if (!answer) {
    s->status = SessionStatus::defender_lost;
    s->uncovered = e;
    s->publish();
    return {std::nullopt, s->view()};
  }
  if (!is_legal_transition(g, s->config, answer->second, e))
    throw Error("defender produced an illegal transition on " + g.format_edge(e));

  TraceEvent ev;
  ev.round = ++s->round;
  ev.attacked = e;
  ev.plan = answer->first;
  ev.config = answer->second;
  ev.annotation = s->defender->annotate(answer->second);
  s->config = answer->second;
  s->record(ev);
  mark_lost_if_uncovered(*s);
  s->publish();
  return {ev, s->view()};
}

RoundResult SessionManager::defend(const std::string& id, const std::vector<std::pair<std::string, std::string>>& moves) {
  auto s = find(id);
  std::lock_guard lock(s->write_mu);
  require_live(*s);
  if (s->mode != SessionMode::human_defender)
    throw SessionError(409, "wrong_mode", "session " + id + " expects an attack, not a defense");
  if (!s->announced) throw SessionError(409, "no_attack", "no attack is pending");
  const Graph& g = *s->graph;
  std::vector<Move> list;
  for (const auto& [from, to] : moves) list.push_back({lookup(g, from), lookup(g, to)});

  auto check = check_move_list(g, s->config, list, *s->announced);
  if (!check.accepted())
    throw SessionError(422, "illegal_move", check.reason, std::string(to_string(*check.rejection)));

  TraceEvent ev;
  ev.round = ++s->round;
  ev.attacked = s->announced;
  ev.plan = check.plan;
  ev.config = check.result;
  ev.annotation = s->defender->annotate(check.result);
  s->config = check.result;
  s->record(ev);
  mark_lost_if_uncovered(*s);
  announce(*s);
  s->publish();
  return {ev, s->view()};
}

std::vector<TraceEvent> SessionManager::trace(const std::string& id) const {
  auto s = find(id);
  std::lock_guard lock(s->write_mu);
  return s->events;
}

std::string SessionManager::trace_text(const std::string& id) const {
  auto s = find(id);
  std::lock_guard lock(s->write_mu);
  return format_trace(*s->graph, s->events);
}

SessionView SessionManager::close(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->write_mu);
  if (s->status == SessionStatus::closed) throw SessionError(410, "gone", "session " + id + " is closed");
  s->status = SessionStatus::closed;
  s->announced.reset();
  s->publish();
  return s->view();
}

}  // namespace evc
