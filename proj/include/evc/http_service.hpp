#pragma once

// Local HTTP/JSON front end for SessionManager.

#include <memory>
#include <string>

#include "evc/session.hpp"

namespace evc {

/// JSON bodies served by the endpoints, exposed for the REPL and tests.
std::string session_view_json(const SessionView& v);
std::string trace_event_json(const Graph& g, const TraceEvent& e);

/// Parses a POST /sessions body. Throws SessionError(400) on malformed input.
CreateRequest parse_create_request(const std::string& body);

/// Routes:
///   POST /sessions                  create
///   GET  /sessions/{id}             state
///   POST /sessions/{id}/attack      {"edge": [u, v]}
///   POST /sessions/{id}/defense     {"moves": [[from, to], ...]}
///   GET  /sessions/{id}/trace       trace lines (text/plain)
///   POST /sessions/{id}/close
class HttpService {
 public:
  explicit HttpService(SessionManager& sessions);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Returns the bound port, or -1.
  int bind_any_port(const std::string& host);
  bool bind(const std::string& host, int port);
  /// Blocks until stop().
  bool serve();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace evc
