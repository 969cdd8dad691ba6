#pragma once

// Interactive game sessions: one engine side, one human side, append-only traces.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evc/cobipartite.hpp"
#include "evc/game.hpp"
#include "evc/reduction.hpp"

namespace evc {

enum class SessionMode { human_attacker, human_defender };
enum class DefenderSource { exact, reduction_nice, cobipartite, all_but_one };
enum class SessionStatus { live, defender_lost, closed };

std::string_view to_string(SessionMode m);
std::string_view to_string(DefenderSource s);
std::string_view to_string(SessionStatus s);
SessionMode parse_mode(std::string_view s);
DefenderSource parse_source(std::string_view s);

/// HTTP-flavoured failure: code is 400, 404, 409, 410 or 422.
class SessionError : public Error {
 public:
  SessionError(int status, std::string code, const std::string& message, std::string detail = {})
      : Error(message), status_(status), code_(std::move(code)), detail_(std::move(detail)) {}
  int status() const { return status_; }
  const std::string& code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  int status_;
  std::string code_;
  std::string detail_;
};

struct CreateRequest {
  std::optional<Graph> graph;
  std::optional<std::size_t> k;
  SessionMode mode = SessionMode::human_attacker;
  DefenderSource source = DefenderSource::exact;
  std::uint64_t seed = 0;
  // reduction-nice: the source instance replaces `graph`
  std::optional<RbdsInstance> rbds;
  Variant variant = Variant::bipartite;
  std::optional<std::vector<std::string>> dominating_set;  // red ids; default: oracle witness
  // cobipartite: side assignment; default: found from the complement
  std::optional<std::pair<VertexSet, VertexSet>> sides;
};

struct SessionView {
  std::string id;
  SessionMode mode = SessionMode::human_attacker;
  DefenderSource source = DefenderSource::exact;
  std::size_t k = 0;
  std::size_t round = 0;
  SessionStatus status = SessionStatus::live;
  Config config;
  std::string annotation;
  std::optional<Edge> announced;       // human-defender: edge the engine attacks next
  std::optional<Edge> uncovered;       // set once the defender has lost
  std::shared_ptr<const Graph> graph;
  std::map<Vertex, std::string> vertex_labels;  // roles or sides, when known
  std::map<Edge, std::string> edge_labels;      // reduction edge kinds
};

struct RoundResult {
  std::optional<TraceEvent> event;  // nullopt when the defender had no answer
  SessionView view;
};

class Session;

class SessionManager {
 public:
  /// Traces go to `<trace_dir>/<id>.trace` when a directory is given.
  explicit SessionManager(std::optional<std::filesystem::path> trace_dir = std::nullopt, Budget budget = Budget::from_env());
  ~SessionManager();

  SessionView create(const CreateRequest& req);
  SessionView get(const std::string& id) const;
  RoundResult attack(const std::string& id, const std::pair<std::string, std::string>& edge);
  RoundResult defend(const std::string& id, const std::vector<std::pair<std::string, std::string>>& moves);
  std::vector<TraceEvent> trace(const std::string& id) const;
  std::string trace_text(const std::string& id) const;
  SessionView close(const std::string& id);

 private:
  std::shared_ptr<Session> find(const std::string& id) const;
  std::string next_id();

  std::optional<std::filesystem::path> trace_dir_;
  Budget budget_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t counter_ = 0;
  std::uint64_t salt_;
};

}  // namespace evc
