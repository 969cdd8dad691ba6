#include <gtest/gtest.h>

#include <httplib.h>
#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <set>
#include <thread>

#include "evc/generators.hpp"
#include "evc/http_service.hpp"
#include "evc/session.hpp"

using namespace evc;
using nlohmann::json;

namespace {

CreateRequest exact_on(const std::string& graph_text, std::optional<std::size_t> k = std::nullopt,
                       SessionMode mode = SessionMode::human_attacker, std::uint64_t seed = 1) {
  CreateRequest req;
  req.graph = parse_graph(graph_text);
  req.k = k;
  req.mode = mode;
  req.seed = seed;
  return req;
}

const char* kK2 = "graph 2\ne a b\n";
const char* kP3 = "graph 3\ne a b\ne b c\n";
const char* kC4 = "graph 4\ne v1 v2\ne v2 v3\ne v3 v4\ne v4 v1\n";

RbdsInstance yes_rbds() {
  RbdsInstance inst;
  inst.reds = {"r1", "r2"};
  inst.blues = {"b1", "b2"};
  inst.edges = {{"r1", "b1"}, {"r1", "b2"}, {"r2", "b2"}};
  inst.k = 1;
  return inst;
}

int status_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const SessionError& e) {
    return e.status();
  }
  return 0;
}

std::pair<std::string, std::string> ids_of(const Graph& g, Edge e) { return {g.id(e.first), g.id(e.second)}; }

}  // namespace

TEST(Session, ExactDefenderOnK2) {
  SessionManager m;
  auto v = m.create(exact_on(kK2));
  EXPECT_EQ(v.k, 1u);
  EXPECT_EQ(v.config.size(), 1u);
  EXPECT_EQ(v.round, 0u);
  EXPECT_EQ(v.status, SessionStatus::live);
  auto guard = v.graph->id(v.config.members().front());
  auto other = guard == "a" ? "b" : "a";
  auto r = m.attack(v.id, {"a", "b"});
  ASSERT_TRUE(r.event);
  EXPECT_EQ(r.view.round, 1u);
  EXPECT_EQ(v.graph->id(r.event->plan.crossing.from), guard);
  EXPECT_EQ(v.graph->id(r.event->plan.crossing.to), other);
  EXPECT_EQ(m.trace(v.id).size(), 2u);
}

TEST(Session, CreationErrors) {
  SessionManager m;
  EXPECT_EQ(status_of([&] { m.create(exact_on(kP3, 1)); }), 422);
  CreateRequest none;
  EXPECT_EQ(status_of([&] { m.create(none); }), 400);
  CreateRequest cob = exact_on("graph 5\ne a b\ne b c\ne c d\ne d e\ne e a\n");
  cob.source = DefenderSource::cobipartite;
  EXPECT_EQ(status_of([&] { m.create(cob); }), 422);
  CreateRequest abo = exact_on(kP3, 1);
  abo.source = DefenderSource::all_but_one;
  EXPECT_EQ(status_of([&] { m.create(abo); }), 422);
  CreateRequest red;
  red.source = DefenderSource::reduction_nice;
  EXPECT_EQ(status_of([&] { m.create(red); }), 400);
  EXPECT_EQ(status_of([&] { m.get("nope"); }), 404);
}

TEST(Session, ReducedYesInstanceStartsAtBackup) {
  SessionManager m;
  CreateRequest req;
  req.source = DefenderSource::reduction_nice;
  req.rbds = yes_rbds();
  auto v = m.create(req);
  EXPECT_EQ(v.annotation, "Backup");
  EXPECT_EQ(v.k, 5u);
  EXPECT_EQ(v.vertex_labels.at(v.graph->at("star")), "universal");
  EXPECT_FALSE(v.edge_labels.empty());
}

TEST(Session, AttackErrors) {
  SessionManager m;
  auto v = m.create(exact_on(kP3));
  EXPECT_EQ(status_of([&] { m.attack(v.id, {"a", "c"}); }), 422);
  EXPECT_EQ(status_of([&] { m.attack(v.id, {"a", "zz"}); }), 422);
  EXPECT_EQ(status_of([&] { m.defend(v.id, {}); }), 409);
  EXPECT_EQ(m.get(v.id).round, 0u);
}

TEST(Session, HumanDefenderExchangeAndCrossing) {
  SessionManager m;
  auto v = m.create(exact_on("graph 3\ne a b\ne b c\ne a c\n", 2, SessionMode::human_defender, 3));
  for (int round = 0; round < 20; ++round) {
    ASSERT_TRUE(v.announced);
    auto [u, w] = *v.announced;
    const auto& g = *v.graph;
    std::vector<std::pair<std::string, std::string>> moves;
    if (v.config.contains(u) && v.config.contains(w)) moves = {{g.id(u), g.id(w)}, {g.id(w), g.id(u)}};
    else if (v.config.contains(u)) moves = {{g.id(u), g.id(w)}};
    else moves = {{g.id(w), g.id(u)}};
    auto r = m.defend(v.id, moves);
    ASSERT_TRUE(r.event);
    EXPECT_EQ(r.view.status, SessionStatus::live);
    v = r.view;
  }
  EXPECT_EQ(v.round, 20u);
}

TEST(Session, HumanDefenderRejections) {
  SessionManager m;
  auto v = m.create(exact_on(kC4, 2, SessionMode::human_defender, 5));
  ASSERT_TRUE(v.announced);
  EXPECT_EQ(status_of([&] { m.defend(v.id, {}); }), 422);
  try {
    m.defend(v.id, {{"v1", "v3"}});
    FAIL() << "jump accepted";
  } catch (const SessionError& e) {
    EXPECT_EQ(e.code(), "illegal_move");
  }
  EXPECT_EQ(status_of([&] { m.attack(v.id, {"v1", "v2"}); }), 409);
  EXPECT_EQ(status_of([&] { m.defend(v.id, {{"v1", "nowhere"}}); }), 422);
  EXPECT_EQ(m.get(v.id).round, 0u);
}

TEST(Session, LeavingAnEdgeUncoveredLoses) {
  SessionManager m;
  auto v = m.create(exact_on(kC4, 2, SessionMode::human_defender, 5));
  auto [u, w] = *v.announced;
  const auto& g = *v.graph;
  // one guard crosses alone; on C4 no other two-vertex set is a cover
  auto from = v.config.contains(u) ? u : w;
  auto to = from == u ? w : u;
  auto r = m.defend(v.id, {{g.id(from), g.id(to)}});
  ASSERT_TRUE(r.event);
  EXPECT_EQ(r.view.status, SessionStatus::defender_lost);
  EXPECT_TRUE(r.view.uncovered);
  EXPECT_FALSE(r.view.announced);
  EXPECT_EQ(status_of([&] { m.defend(v.id, {}); }), 409);
  EXPECT_EQ(m.trace(v.id).size(), 2u);
}

TEST(Session, CloseKeepsReads) {
  SessionManager m;
  auto v = m.create(exact_on(kP3));
  m.attack(v.id, {"a", "b"});
  auto closed = m.close(v.id);
  EXPECT_EQ(closed.status, SessionStatus::closed);
  EXPECT_EQ(status_of([&] { m.attack(v.id, {"a", "b"}); }), 410);
  EXPECT_EQ(status_of([&] { m.close(v.id); }), 410);
  EXPECT_EQ(m.get(v.id).round, 1u);
  EXPECT_EQ(m.trace(v.id).size(), 2u);
}

TEST(Session, TraceFileMatchesTraceText) {
  auto dir = std::filesystem::temp_directory_path() / ("evc-trace-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  {
    SessionManager m(dir);
    auto v = m.create(exact_on(kC4));
    for (int i = 0; i < 5; ++i) m.attack(v.id, i % 2 ? std::pair{"v1", "v2"} : std::pair{"v3", "v4"});
    std::ifstream in(dir / (v.id + ".trace"));
    std::stringstream buf;
    buf << in.rdbuf();
    auto text = buf.str();
    EXPECT_EQ(text, m.trace_text(v.id));
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 6);
  }
  std::filesystem::remove_all(dir);
}

TEST(Session, ReplayIsDeterministic) {
  auto play = [] {
    SessionManager m;
    auto v = m.create(exact_on(kC4, 2, SessionMode::human_defender, 11));
    for (int i = 0; i < 30; ++i) {
      auto [u, w] = *v.announced;
      const auto& g = *v.graph;
      // slide both guards the same way round the cycle
      std::vector<std::pair<std::string, std::string>> moves;
      auto from = v.config.contains(u) ? u : w;
      auto to = from == u ? w : u;
      moves.emplace_back(g.id(from), g.id(to));
      for (auto x : v.config.members())
        if (x != from)
          for (auto y : g.neighbors(x))
            if (y != to && !v.config.contains(y) && moves.size() == 1) moves.emplace_back(g.id(x), g.id(y));
      v = m.defend(v.id, moves).view;
      EXPECT_EQ(v.status, SessionStatus::live);
    }
    return m.trace_text(v.id);
  };
  EXPECT_EQ(play(), play());
}

TEST(Session, ConcurrentSessions) {
  SessionManager m;
  std::vector<std::thread> workers;
  std::mutex mu;
  std::set<std::string> ids;
  std::atomic<int> failures{0};
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] {
      try {
        auto v = m.create(exact_on(kC4, std::nullopt, SessionMode::human_attacker, t));
        {
          std::lock_guard lock(mu);
          ids.insert(v.id);
        }
        for (int i = 0; i < 200; ++i) {
          auto r = m.attack(v.id, i % 3 ? std::pair{"v2", "v3"} : std::pair{"v4", "v1"});
          if (!r.event || r.view.status != SessionStatus::live) ++failures;
          m.get(v.id);
        }
        if (m.trace(v.id).size() != 201u) ++failures;
      } catch (...) {
        ++failures;
      }
    });
  }
  for (auto& w : workers) w.join();
  EXPECT_EQ(failures.load(), 0);
  EXPECT_EQ(ids.size(), 8u);
}

TEST(Session, NiceDefenceSurvivesRandomAttacks) {
  SessionManager m;
  CreateRequest req;
  req.source = DefenderSource::reduction_nice;
  req.rbds = yes_rbds();
  req.variant = Variant::split;
  auto v = m.create(req);
  const auto& g = *v.graph;
  Rng rng(99);
  for (int i = 0; i < 10'000; ++i) {
    auto e = g.edges()[rng.below(g.edge_count())];
    auto r = m.attack(v.id, ids_of(g, e));
    ASSERT_TRUE(r.event) << "round " << i;
    ASSERT_EQ(r.view.status, SessionStatus::live);
  }
  EXPECT_EQ(m.get(v.id).round, 10'000u);
}

TEST(Session, CobipartiteAndAllButOneSources) {
  SessionManager m;
  CreateRequest cob = exact_on("graph 4\ne a0 a1\ne b0 b1\ne a0 b0\n");
  cob.source = DefenderSource::cobipartite;
  auto v = m.create(cob);
  EXPECT_EQ(v.vertex_labels.size(), 4u);
  EXPECT_TRUE(m.attack(v.id, {"a0", "b0"}).event);

  CreateRequest abo = exact_on(kP3);
  abo.source = DefenderSource::all_but_one;
  auto w = m.create(abo);
  EXPECT_EQ(w.k, 2u);
  EXPECT_TRUE(m.attack(w.id, {"b", "c"}).event);
}

namespace {

class Server {
 public:
  Server() : service(manager) {
    port = service.bind_any_port("127.0.0.1");
    thread = std::thread([this] { service.serve(); });
    service.wait_until_ready();
  }
  ~Server() {
    service.stop();
    thread.join();
  }
  httplib::Client client() const { return httplib::Client("127.0.0.1", port); }

  SessionManager manager;
  HttpService service;
  int port = -1;
  std::thread thread;
};

}  // namespace

TEST(Http, SessionLifecycle) {
  Server srv;
  ASSERT_GT(srv.port, 0);
  auto cli = srv.client();

  auto created = cli.Post("/sessions", R"({"graph":"graph 2\ne a b\n","seed":4})", "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  auto view = json::parse(created->body);
  std::string id = view["id"];
  EXPECT_EQ(view["k"], 1);
  EXPECT_EQ(view["status"], "live");
  EXPECT_EQ(view["mode"], "human-attacker");
  EXPECT_EQ(view["defender"], "exact");
  EXPECT_EQ(view["graph"]["vertices"].size(), 2u);
  EXPECT_EQ(created->get_header_value("Access-Control-Allow-Origin"), "*");

  auto got = cli.Get("/sessions/" + id);
  ASSERT_TRUE(got);
  EXPECT_EQ(got->status, 200);
  EXPECT_EQ(json::parse(got->body)["round"], 0);

  auto attacked = cli.Post("/sessions/" + id + "/attack", R"({"edge":["a","b"]})", "application/json");
  ASSERT_TRUE(attacked);
  EXPECT_EQ(attacked->status, 200);
  auto body = json::parse(attacked->body);
  EXPECT_EQ(body["event"]["round"], 1);
  EXPECT_EQ(body["event"]["crossing"].size(), 2u);
  EXPECT_EQ(body["session"]["round"], 1);

  auto trace = cli.Get("/sessions/" + id + "/trace");
  ASSERT_TRUE(trace);
  EXPECT_EQ(trace->status, 200);
  EXPECT_EQ(trace->body, srv.manager.trace_text(id));

  auto closed = cli.Post("/sessions/" + id + "/close", "", "application/json");
  ASSERT_TRUE(closed);
  EXPECT_EQ(json::parse(closed->body)["status"], "closed");
  auto gone = cli.Post("/sessions/" + id + "/attack", R"({"edge":["a","b"]})", "application/json");
  ASSERT_TRUE(gone);
  EXPECT_EQ(gone->status, 410);
  EXPECT_EQ(json::parse(gone->body)["code"], "gone");
}

TEST(Http, ErrorsAreJson) {
  Server srv;
  auto cli = srv.client();
  auto missing = cli.Get("/sessions/none");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);
  EXPECT_EQ(json::parse(missing->body)["code"], "not_found");

  auto malformed = cli.Post("/sessions", "{not json", "application/json");
  ASSERT_TRUE(malformed);
  EXPECT_EQ(malformed->status, 400);
  EXPECT_EQ(json::parse(malformed->body)["code"], "bad_request");

  auto bad_graph = cli.Post("/sessions", R"({"graph":"graph 1\ne a b\n"})", "application/json");
  ASSERT_TRUE(bad_graph);
  EXPECT_EQ(bad_graph->status, 400);

  auto losing = cli.Post("/sessions", R"({"graph":"graph 3\ne a b\ne b c\n","k":1})", "application/json");
  ASSERT_TRUE(losing);
  EXPECT_EQ(losing->status, 422);

  auto created = cli.Post("/sessions", R"({"graph":{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]}})",
                          "application/json");
  ASSERT_TRUE(created);
  ASSERT_EQ(created->status, 201);
  std::string id = json::parse(created->body)["id"];
  auto no_edge = cli.Post("/sessions/" + id + "/attack", R"({"edge":["a","c"]})", "application/json");
  ASSERT_TRUE(no_edge);
  EXPECT_EQ(no_edge->status, 422);
  auto no_field = cli.Post("/sessions/" + id + "/attack", R"({"edges":["a","b"]})", "application/json");
  ASSERT_TRUE(no_field);
  EXPECT_EQ(no_field->status, 400);
}

TEST(Http, HumanDefenderAndReduction) {
  Server srv;
  auto cli = srv.client();
  auto created = cli.Post("/sessions", R"({"graph":"graph 2\ne a b\n","mode":"human-defender","k":1})",
                          "application/json");
  ASSERT_TRUE(created);
  ASSERT_EQ(created->status, 201);
  auto view = json::parse(created->body);
  ASSERT_TRUE(view["announced"].is_array());
  std::string from = view["config"][0];
  std::string to = from == "a" ? "b" : "a";
  json move = {{"moves", json::array({json::array({from, to})})}};
  auto defended = cli.Post("/sessions/" + std::string(view["id"]) + "/defense", move.dump(), "application/json");
  ASSERT_TRUE(defended);
  EXPECT_EQ(defended->status, 200);
  EXPECT_EQ(json::parse(defended->body)["session"]["config"][0], to);

  json req = {{"defender", "reduction-nice"}, {"rbds", json::parse(rbds_to_json(yes_rbds()))}, {"variant", "split"}};
  auto reduced = cli.Post("/sessions", req.dump(), "application/json");
  ASSERT_TRUE(reduced);
  ASSERT_EQ(reduced->status, 201);
  auto rv = json::parse(reduced->body);
  EXPECT_EQ(rv["annotation"], "Backup");
  EXPECT_EQ(rv["k"], 5);

  auto preflight = cli.Options("/sessions");
  ASSERT_TRUE(preflight);
  EXPECT_EQ(preflight->status, 204);
}

TEST(Http, CreateRequestParsing) {
  auto req = parse_create_request(
      R"({"graph":"graph 4\ne a0 a1\ne b0 b1\n","defender":"cobipartite","sides":{"A":["a0","a1"],"B":["b0","b1"]}})");
  EXPECT_EQ(req.source, DefenderSource::cobipartite);
  ASSERT_TRUE(req.sides);
  EXPECT_EQ(req.sides->first.size(), 2u);
  EXPECT_THROW(parse_create_request(R"({"mode":"spectator"})"), SessionError);
  EXPECT_THROW(parse_create_request(R"({"k":-2})"), SessionError);
  EXPECT_THROW(parse_create_request(R"({"sides":{"A":[],"B":[]}})"), SessionError);
  EXPECT_THROW(parse_create_request("[1,2]"), SessionError);
}
