#include "evc/http_service.hpp"

#include <httplib.h>

#include <json.hpp>

namespace evc {

using nlohmann::json;

namespace {

json ids(const Graph& g, const VertexSet& s) {
  json out = json::array();
  for (auto v : s.members()) out.push_back(g.id(v));
  return out;
}

json edge_json(const Graph& g, std::optional<Edge> e) {
  if (!e) return nullptr;
  return json::array({g.id(e->first), g.id(e->second)});
}

json event_json(const Graph& g, const TraceEvent& e) {
  json moves = json::array();
  for (const auto& m : e.plan.moving()) moves.push_back({g.id(m.from), g.id(m.to)});
  json crossing = nullptr;
  if (e.attacked) crossing = json::array({g.id(e.plan.crossing.from), g.id(e.plan.crossing.to)});
  return {{"round", e.round},      {"attacked", edge_json(g, e.attacked)}, {"moves", moves},
          {"crossing", crossing}, {"config", ids(g, e.config)},          {"annotation", e.annotation}};
}

json view_json(const SessionView& v) {
  const Graph& g = *v.graph;
  json vertices = json::array();
  for (Vertex x = 0; x < g.size(); ++x) {
    json item = {{"id", g.id(x)}};
    if (auto it = v.vertex_labels.find(x); it != v.vertex_labels.end()) item["label"] = it->second;
    vertices.push_back(item);
  }
  json edges = json::array();
  for (auto e : g.edges()) {
    json item = {{"u", g.id(e.first)}, {"v", g.id(e.second)}};
    if (auto it = v.edge_labels.find(e); it != v.edge_labels.end()) item["label"] = it->second;
    edges.push_back(item);
  }
  return {{"id", v.id},
          {"mode", to_string(v.mode)},
          {"defender", to_string(v.source)},
          {"k", v.k},
          {"round", v.round},
          {"status", to_string(v.status)},
          {"config", ids(g, v.config)},
          {"annotation", v.annotation},
          {"announced", edge_json(g, v.announced)},
          {"uncovered", edge_json(g, v.uncovered)},
          {"graph", {{"vertices", vertices}, {"edges", edges}}}};
}

SessionError bad_request(const std::string& message) { return SessionError(400, "bad_request", message); }

json parse_body(const std::string& body) {
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw bad_request(std::string("invalid JSON: ") + e.what());
  }
}

std::pair<std::string, std::string> id_pair(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw bad_request(std::string(what) + " must be a pair of vertex ids");
  return {j[0].get<std::string>(), j[1].get<std::string>()};
}

Graph graph_from_json(const json& j) {
  if (j.is_string()) return parse_graph(j.get<std::string>());
  if (!j.is_object()) throw bad_request("graph must be a graph-file string or {vertices, edges}");
  std::vector<std::string> vs = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> es;
  for (const auto& e : j.at("edges")) es.push_back(id_pair(e, "edge"));
  return Graph(std::move(vs), es);
}

void send_json(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, const SessionError& e) {
  send_json(res, e.status(), {{"code", e.code()}, {"message", e.what()}, {"detail", e.detail()}});
}

template <class F>
void guarded(httplib::Response& res, F&& body) {
  try {
    body();
  } catch (const SessionError& e) {
    send_error(res, e);
  } catch (const json::exception& e) {
    send_error(res, bad_request(e.what()));
  } catch (const GraphError& e) {
    send_error(res, bad_request(e.what()));
  } catch (const std::exception& e) {
    send_json(res, 500, {{"code", "internal"}, {"message", e.what()}, {"detail", ""}});
  }
}

}  // namespace

std::string session_view_json(const SessionView& v) { return view_json(v).dump(); }

std::string trace_event_json(const Graph& g, const TraceEvent& e) { return event_json(g, e).dump(); }

CreateRequest parse_create_request(const std::string& body) {
  json j = parse_body(body);
  if (!j.is_object()) throw bad_request("request body must be a JSON object");
  CreateRequest req;
  try {
    if (j.contains("mode")) req.mode = parse_mode(j["mode"].get<std::string>());
    if (j.contains("defender")) req.source = parse_source(j["defender"].get<std::string>());
    if (j.contains("k") && !j["k"].is_null()) {
      auto k = j["k"].get<long long>();
      if (k < 0) throw bad_request("k must be non-negative");
      req.k = static_cast<std::size_t>(k);
    }
    if (j.contains("seed")) req.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("graph") && !j["graph"].is_null()) req.graph = graph_from_json(j["graph"]);
    if (j.contains("rbds") && !j["rbds"].is_null()) req.rbds = parse_rbds_json(j["rbds"].dump());
    if (j.contains("variant")) req.variant = parse_variant(j["variant"].get<std::string>());
    if (j.contains("dominating_set") && !j["dominating_set"].is_null())
      req.dominating_set = j["dominating_set"].get<std::vector<std::string>>();
    if (j.contains("sides") && !j["sides"].is_null()) {
      if (!req.graph) throw bad_request("sides need a graph");
      VertexSet a = req.graph->empty_set(), b = req.graph->empty_set();
      for (const auto& id : j["sides"].at("A").get<std::vector<std::string>>()) a.insert(req.graph->at(id));
      for (const auto& id : j["sides"].at("B").get<std::vector<std::string>>()) b.insert(req.graph->at(id));
      req.sides = std::make_pair(a, b);
    }
  } catch (const json::exception& e) {
    throw bad_request(e.what());
  } catch (const SessionError&) {
    throw;
  } catch (const Error& e) {
    throw bad_request(e.what());
  }
  return req;
}

struct HttpService::Impl {
  SessionManager& sessions;
  httplib::Server server;

  explicit Impl(SessionManager& s) : sessions(s) {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
    server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

    server.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] { send_json(res, 201, view_json(sessions.create(parse_create_request(req.body)))); });
    });
    server.Get(R"(/sessions/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] { send_json(res, 200, view_json(sessions.get(req.matches[1]))); });
    });
    server.Post(R"(/sessions/([^/]+)/attack)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        json body = parse_body(req.body);
        if (!body.is_object() || !body.contains("edge")) throw bad_request("body must be {\"edge\": [u, v]}");
        auto result = sessions.attack(req.matches[1], id_pair(body["edge"], "edge"));
        send_json(res, 200, round_json(result));
      });
    });
    server.Post(R"(/sessions/([^/]+)/defense)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] {
        json body = parse_body(req.body);
        if (!body.is_object() || !body.contains("moves") || !body["moves"].is_array())
          throw bad_request("body must be {\"moves\": [[from, to], ...]}");
        std::vector<std::pair<std::string, std::string>> moves;
        for (const auto& m : body["moves"]) moves.push_back(id_pair(m, "move"));
        auto result = sessions.defend(req.matches[1], moves);
        send_json(res, 200, round_json(result));
      });
    });
    server.Get(R"(/sessions/([^/]+)/trace)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] { res.set_content(sessions.trace_text(req.matches[1]), "text/plain"); });
    });
    server.Post(R"(/sessions/([^/]+)/close)", [this](const httplib::Request& req, httplib::Response& res) {
      guarded(res, [&] { send_json(res, 200, view_json(sessions.close(req.matches[1]))); });
    });
  }

  static json round_json(const RoundResult& r) {
    json event = r.event ? event_json(*r.view.graph, *r.event) : json(nullptr);
    return {{"event", event}, {"session", view_json(r.view)}};
  }
};

HttpService::HttpService(SessionManager& sessions) : impl_(std::make_unique<Impl>(sessions)) {}
HttpService::~HttpService() = default;

int HttpService::bind_any_port(const std::string& host) { return impl_->server.bind_to_any_port(host); }
bool HttpService::bind(const std::string& host, int port) { return impl_->server.bind_to_port(host, port); }
bool HttpService::serve() { return impl_->server.listen_after_bind(); }
void HttpService::stop() { impl_->server.stop(); }
void HttpService::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace evc
