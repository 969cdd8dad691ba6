// evc: command-line front end for the solver, reduction, cobipartite strategy and sessions.

#include <CLI11.hpp>
#include <json.hpp>

#include <csignal>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "evc/algorithms.hpp"
#include "evc/cobipartite.hpp"
#include "evc/game.hpp"
#include "evc/generators.hpp"
#include "evc/http_service.hpp"
#include "evc/reduction.hpp"
#include "evc/session.hpp"

using namespace evc;
using nlohmann::json;

namespace {

struct Options {
  bool json_out = false;
  std::uint64_t seed = 1;
};

json id_list(const Graph& g, const VertexSet& s) {
  json out = json::array();
  for (auto v : s.members()) out.push_back(g.id(v));
  return out;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

CobipInstance load_cobipartite(const Graph& g, const std::string& sides_path) {
  if (!sides_path.empty()) {
    auto [a, b] = parse_sides(g, read_text_file(sides_path));
    return normalize(g, a, b);
  }
  auto sides = find_sides(g);
  if (!sides) throw GraphError("graph is not cobipartite");
  return normalize(g, sides->first, sides->second);
}

// ---- mvc / approx2 / classify ----

int cmd_mvc(const Options& opt, const std::string& path) {
  Graph g = read_graph_file(path);
  auto res = mvc_exact(g);
  emit(opt, {{"mvc", res.size}, {"witness", id_list(g, res.witness)}},
       "mvc=" + std::to_string(res.size) + "\nwitness " + g.format_set(res.witness) + "\n");
  return 0;
}

int cmd_approx2(const Options& opt, const std::string& path) {
  Graph g = read_graph_file(path);
  VertexSet c = two_matching_cover(g);
  emit(opt, {{"size", c.size()}, {"matching", c.size() / 2}, {"config", id_list(g, c)}},
       "size=" + std::to_string(c.size()) + " matching=" + std::to_string(c.size() / 2) + "\nconfig " +
           g.format_set(c) + "\n");
  return 0;
}

int cmd_classify(const Options& opt, const std::string& path) {
  Graph g = read_graph_file(path);
  auto cls = classify(g);
  auto d = diameter(g);
  json j = {{"n", g.size()},
            {"m", g.edge_count()},
            {"bipartite", cls.bipartite},
            {"split", cls.split},
            {"cobipartite", cls.cobipartite},
            {"connected", is_connected(g)},
            {"diameter", d ? json(*d) : json("inf")}};
  std::ostringstream out;
  out << "n=" << g.size() << " m=" << g.edge_count() << "\nbipartite=" << cls.bipartite << "\nsplit=" << cls.split
      << "\ncobipartite=" << cls.cobipartite << "\ndiameter=" << (d ? std::to_string(*d) : "inf") << "\n";
  emit(opt, j, out.str());
  return 0;
}

// ---- evc ----

int cmd_evc_exact(const Options& opt, const std::string& path, std::optional<std::size_t> k_max,
                  const std::string& dump_path) {
  Graph g = read_graph_file(path);
  auto res = evc_exact(g, k_max, Budget::from_env());
  json profile = json::object();
  std::ostringstream out;
  out << "evc=" << (res.evc ? std::to_string(*res.evc) : "none") << "\nmvc=" << res.mvc << "\n";
  for (auto [k, win] : res.win_profile) {
    profile[std::to_string(k)] = win;
    out << "k=" << k << " " << (win ? "win" : "lose") << "\n";
  }
  for (const auto& w : res.warnings) out << "warning: " << w << "\n";
  if (res.safe) {
    out << "safe configurations=" << res.safe->size() << " sweeps=" << res.safe->sweeps() << "\n";
    if (!dump_path.empty()) write_text_file(dump_path, dump_safe_set(*res.safe));
  }
  json j = {{"evc", res.evc ? json(*res.evc) : json(nullptr)},
            {"mvc", res.mvc},
            {"win_profile", profile},
            {"safe_size", res.safe ? json(res.safe->size()) : json(nullptr)},
            {"warnings", res.warnings}};
  emit(opt, j, out.str());
  return 0;
}

int cmd_evc_cobip(const Options& opt, const std::string& path, const std::string& sides, std::size_t trace_rounds) {
  Graph g = read_graph_file(path);
  CobipInstance inst = load_cobipartite(g, sides);
  CobipStrategy strategy(inst);
  const auto& v = strategy.value();
  std::ostringstream out;
  out << "evc=" << v.evc << "\nmvc=" << v.mvc << "\nbranch=" << to_string(v.branch) << "\np=" << inst.p()
      << " q=" << inst.q() << "\n";
  json j = {{"evc", v.evc}, {"mvc", v.mvc}, {"branch", to_string(v.branch)}, {"p", inst.p()}, {"q", inst.q()}};
  if (trace_rounds > 0 && g.edge_count() > 0) {
    CobipDefender def(strategy);
    RandomAttacker att(g, opt.seed);
    auto sim = simulate(g, strategy.guards(), def, att, trace_rounds);
    std::string trace = format_trace(g, sim.trace);
    out << trace;
    j["trace"] = trace;
    j["survived"] = sim.survived;
  }
  emit(opt, j, out.str());
  return 0;
}

// ---- reduction ----

json report_json(const VerificationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", rep.all_passed()}, {"checks", checks}};
}

std::string report_text(const VerificationReport& rep) {
  std::string out;
  for (const auto& c : rep.checks) out += (c.passed ? "ok   " : "FAIL ") + c.name + "  " + c.detail + "\n";
  return out;
}

int cmd_reduce(const Options& opt, const std::string& path, const std::string& variant_name, const std::string& prefix) {
  RbdsInstance inst = parse_rbds_json(read_text_file(path));
  auto pre = preprocess_rbds(inst);
  if (pre.outcome != Preprocessed::normalized) {
    const bool yes = pre.outcome == Preprocessed::trivial_yes;
    emit(opt, {{"preprocessed", yes ? "yes" : "no"}, {"reason", pre.reason}},
         std::string("trivially ") + (yes ? "YES" : "NO") + ": " + pre.reason + "\n");
    return 0;
  }
  auto ri = ReducedInstance::build(inst, parse_variant(variant_name));
  std::string out_prefix = prefix.empty() ? std::filesystem::path(path).stem().string() : prefix;
  write_text_file(out_prefix + ".graph", serialize_graph(ri.graph()));
  write_text_file(out_prefix + ".sidecar.json", ri.sidecar_json());
  auto rep = verify_instance(ri);
  json j = {{"graph", out_prefix + ".graph"},
            {"sidecar", out_prefix + ".sidecar.json"},
            {"n", ri.graph().size()},
            {"m", ri.graph().edge_count()},
            {"ell", ri.ell()},
            {"variant", to_string(ri.variant())},
            {"verification", report_json(rep)}};
  std::ostringstream out;
  out << "wrote " << out_prefix << ".graph and " << out_prefix << ".sidecar.json\nn=" << ri.graph().size()
      << " m=" << ri.graph().edge_count() << " ell=" << ri.ell() << " variant=" << to_string(ri.variant()) << "\n"
      << report_text(rep);
  emit(opt, j, out.str());
  return rep.all_passed() ? 0 : 1;
}

ReducedInstance load_artifact(const std::string& graph_path, const std::string& sidecar_path) {
  return ReducedInstance::from_artifact(read_text_file(graph_path), read_text_file(sidecar_path));
}

int cmd_verify(const Options& opt, const std::string& graph_path, const std::string& sidecar_path) {
  auto ri = load_artifact(graph_path, sidecar_path);
  auto rep = verify_instance(ri);
  emit(opt, report_json(rep), report_text(rep));
  return rep.all_passed() ? 0 : 1;
}

int cmd_extract(const Options& opt, const std::string& graph_path, const std::string& sidecar_path) {
  auto ri = load_artifact(graph_path, sidecar_path);
  auto safe = safe_set(ri.graph(), ri.ell(), Budget::from_env());
  if (safe.empty()) {
    emit(opt, {{"evc_within_ell", false}, {"dominating_set", nullptr}},
         "NO: no defending configuration with " + std::to_string(ri.ell()) + " guards\n");
    return 0;
  }
  auto dom = extract_dominating_set(ri, safe);
  std::string text = "YES: dominating set";
  for (const auto& id : dom) text += " " + id;
  emit(opt, {{"evc_within_ell", true}, {"dominating_set", dom}}, text + "\n");
  return 0;
}

// ---- strategy check ----

struct CheckTally {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::vector<std::string> first;
  void fail(std::string what) {
    ++failures;
    if (first.size() < 5) first.push_back(std::move(what));
  }
};

int finish_check(const Options& opt, const std::string& what, std::size_t covers, const CheckTally& t) {
  json j = {{"covers", covers}, {"pairs", t.pairs}, {"failures", t.failures}, {"examples", t.first}};
  std::string text = what + ": " + std::to_string(covers) + " covers, " + std::to_string(t.pairs) +
                     " (cover, edge) pairs, " + std::to_string(t.failures) + " failures\n";
  for (const auto& f : t.first) text += "  " + f + "\n";
  emit(opt, j, text);
  return t.failures == 0 ? 0 : 1;
}

int cmd_check_nice(const Options& opt, const std::string& path, const std::string& variant_name) {
  RbdsInstance inst = parse_rbds_json(read_text_file(path));
  auto answer = rbds_oracle(inst);
  if (!answer.yes) {
    emit(opt, {{"yes_instance", false}}, "NO instance: no nice strategy to check\n");
    return 0;
  }
  auto ri = ReducedInstance::build(inst, parse_variant(variant_name));
  const auto& h = ri.graph();
  auto families = nice_cover_families(ri, answer.witness);
  auto all = families.all();
  CheckTally t;
  for (const auto& nc : all) {
    Config c = nc.materialize(ri);
    for (auto e : h.edges()) {
      ++t.pairs;
      std::string tag = nc.label(ri) + " attack " + h.format_edge(e) + ": ";
      try {
        auto d = defend_nice(ri, nc, e);
        Config next = d.next.materialize(ri);
        if (!is_legal_transition(h, c, next, e)) t.fail(tag + "illegal transition");
        else if (classify_cover(ri, next, families.support) != d.next) t.fail(tag + "result not nice");
        else if (check_connected_cover(ri, c) && !check_connected_cover(ri, next)) t.fail(tag + "connectivity lost");
      } catch (const Error& ex) {
        t.fail(tag + ex.what());
      }
    }
  }
  return finish_check(opt, "nice strategy", all.size(), t);
}

int cmd_check_cobip(const Options& opt, const std::string& path, const std::string& sides) {
  Graph g = read_graph_file(path);
  CobipStrategy strategy(load_cobipartite(g, sides));
  auto templates = strategy.valid_templates();
  CheckTally t;
  for (const auto& tpl : templates) {
    Config c = tpl.materialize(g);
    for (auto e : g.edges()) {
      ++t.pairs;
      std::string tag = tpl.label(g) + " attack " + g.format_edge(e) + ": ";
      try {
        auto [plan, next] = strategy.defend(tpl, e);
        Config to = next.materialize(g);
        if (!is_legal_transition(g, c, to, e)) t.fail(tag + "illegal transition");
        else if (!strategy.is_valid(next)) t.fail(tag + "left the template family");
      } catch (const Error& ex) {
        t.fail(tag + ex.what());
      }
    }
  }
  return finish_check(opt, "cobipartite strategy (" + std::string(to_string(strategy.value().branch)) + ")",
                      templates.size(), t);
}

// ---- gen ----

std::string generate_one(const std::string& kind, Rng& rng, std::size_t n, double p, std::size_t r, std::size_t b,
                         std::size_t k, std::size_t q) {
  if (kind == "graph") return serialize_graph(random_graph(n, p, rng));
  if (kind == "connected") return serialize_graph(random_connected_graph(n, p, rng));
  if (kind == "rbds") return rbds_to_json(random_rbds(r, b, k, p, rng)) + "\n";
  if (kind == "cobip") {
    auto inst = random_cobipartite(n, q, p, rng);
    return serialize_graph(inst.g) + format_sides(inst);
  }
  throw Error("unknown generator '" + kind + "'");
}

int cmd_gen(const Options& opt, const std::string& kind, std::size_t count, const std::string& out_dir, std::size_t n,
            double p, std::size_t r, std::size_t b, std::size_t k, std::size_t q) {
  Rng rng(opt.seed);
  if (out_dir.empty()) {
    for (std::size_t i = 0; i < count; ++i) std::cout << generate_one(kind, rng, n, p, r, b, k, q);
    return 0;
  }
  std::filesystem::create_directories(out_dir);
  const std::string ext = kind == "rbds" ? ".json" : ".graph";
  for (std::size_t i = 0; i < count; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "%s%04zu", kind.c_str(), i);
    write_text_file((std::filesystem::path(out_dir) / (std::string(name) + ext)).string(),
                    generate_one(kind, rng, n, p, r, b, k, q));
  }
  if (!opt.json_out) std::cout << "wrote " << count << " files to " << out_dir << "\n";
  else std::cout << json{{"count", count}, {"dir", out_dir}}.dump() << "\n";
  return 0;
}

// ---- play / serve ----

struct SessionArgs {
  std::string graph;
  std::optional<std::size_t> k;
  std::string mode = "human-attacker";
  std::string defender = "exact";
  std::string rbds;
  std::string variant = "bipartite";
  std::vector<std::string> domset;
  std::string sides;
};

CreateRequest make_request(const Options& opt, const SessionArgs& a) {
  CreateRequest req;
  req.mode = parse_mode(a.mode);
  req.source = parse_source(a.defender);
  req.seed = opt.seed;
  req.k = a.k;
  if (!a.graph.empty()) req.graph = read_graph_file(a.graph);
  if (!a.rbds.empty()) req.rbds = parse_rbds_json(read_text_file(a.rbds));
  req.variant = parse_variant(a.variant);
  if (!a.domset.empty()) req.dominating_set = a.domset;
  if (!a.sides.empty()) {
    if (!req.graph) throw Error("--sides needs a graph");
    req.sides = parse_sides(*req.graph, read_text_file(a.sides));
  }
  return req;
}

void print_view(const SessionView& v) {
  const Graph& g = *v.graph;
  std::cout << "round " << v.round << " [" << to_string(v.status) << "] guards: " << g.format_set(v.config);
  if (!v.annotation.empty()) std::cout << "  (" << v.annotation << ")";
  std::cout << "\n";
  if (v.announced) std::cout << "engine attacks " << g.format_edge(*v.announced) << "\n";
  if (v.uncovered) std::cout << "uncovered edge " << g.format_edge(*v.uncovered) << "\n";
}

void print_round(const RoundResult& r) {
  if (r.event) {
    const Graph& g = *r.view.graph;
    std::cout << "moves:";
    auto moving = r.event->plan.moving();
    if (moving.empty()) std::cout << " none";
    for (const auto& m : moving) std::cout << " " << g.id(m.from) << "->" << g.id(m.to);
    std::cout << "\n";
  }
  print_view(r.view);
}

constexpr const char* kPlayHelp =
    "commands:\n"
    "  attack <u> <v>            attack an edge (human attacker)\n"
    "  defend <from>-><to> ...   move guards (human defender); no moves = pass\n"
    "  state | trace | help | quit\n";

int cmd_play(const Options& opt, const SessionArgs& args) {
  SessionManager manager(std::nullopt, Budget::from_env());
  auto view = manager.create(make_request(opt, args));
  const std::string id = view.id;
  std::cout << kPlayHelp;
  print_view(view);
  std::string line;
  while (std::cout << "> " << std::flush, std::getline(std::cin, line)) {
    std::istringstream in(line);
    std::string verb;
    if (!(in >> verb)) continue;
    try {
      if (verb == "quit" || verb == "exit") break;
      if (verb == "help") {
        std::cout << kPlayHelp;
      } else if (verb == "state") {
        print_view(manager.get(id));
      } else if (verb == "trace") {
        std::cout << manager.trace_text(id);
      } else if (verb == "attack") {
        std::string u, v;
        if (!(in >> u >> v)) throw Error("usage: attack <u> <v>");
        print_round(manager.attack(id, {u, v}));
      } else if (verb == "defend") {
        std::vector<std::pair<std::string, std::string>> moves;
        std::string tok;
        while (in >> tok) {
          auto arrow = tok.find("->");
          if (arrow == std::string::npos) throw Error("moves look like from->to");
          moves.emplace_back(tok.substr(0, arrow), tok.substr(arrow + 2));
        }
        print_round(manager.defend(id, moves));
      } else {
        std::cout << "unknown command '" << verb << "'\n";
      }
    } catch (const SessionError& e) {
      std::cout << "rejected (" << e.code() << "): " << e.what();
      if (!e.detail().empty()) std::cout << " [" << e.detail() << "]";
      std::cout << "\n";
    } catch (const Error& e) {
      std::cout << "error: " << e.what() << "\n";
    }
  }
  return 0;
}

HttpService* running_service = nullptr;

int cmd_serve(const std::string& host, int port, const std::string& trace_dir) {
  std::optional<std::filesystem::path> dir;
  if (!trace_dir.empty()) {
    std::filesystem::create_directories(trace_dir);
    dir = trace_dir;
  }
  SessionManager manager(dir, Budget::from_env());
  HttpService service(manager);
  int bound = port;
  if (port == 0) {
    bound = service.bind_any_port(host);
    if (bound < 0) throw Error("could not bind " + host);
  } else if (!service.bind(host, port)) {
    throw Error("could not bind " + host + ":" + std::to_string(port));
  }
  std::cout << "listening on http://" << host << ":" << bound << std::endl;
  running_service = &service;
  std::signal(SIGINT, [](int) { running_service->stop(); });
  std::signal(SIGTERM, [](int) { running_service->stop(); });
  service.serve();
  running_service = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eternal vertex cover toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json_out, "Machine-readable output");
  app.add_option("--seed", opt.seed, "Seed for every random choice")->capture_default_str();

  std::string graph, sidecar, sides, dump, variant = "bipartite", out, kind = "graph", out_dir, host = "127.0.0.1",
                                        trace_dir;
  std::optional<std::size_t> k_max;
  std::size_t trace_rounds = 0, count = 1, n = 8, r = 4, b = 3, k = 2, q = 4;
  double p = 0.5;
  int port = 8080;
  SessionArgs sargs;

  auto* mvc = app.add_subcommand("mvc", "Exact minimum vertex cover");
  mvc->add_option("graph", graph, "Graph file")->required();

  auto* approx = app.add_subcommand("approx2", "Both endpoints of a maximum matching");
  approx->add_option("graph", graph, "Graph file")->required();

  auto* cls = app.add_subcommand("classify", "Bipartite / split / cobipartite recognition");
  cls->add_option("graph", graph, "Graph file")->required();

  auto* evc = app.add_subcommand("evc", "Eternal vertex cover number");
  evc->require_subcommand(1);
  auto* exact = evc->add_subcommand("exact", "Exact game solver");
  exact->add_option("graph", graph, "Graph file")->required();
  exact->add_option("--k-max", k_max, "Largest guard count to try");
  exact->add_option("--dump-safe", dump, "Write the winning configurations to this file");
  auto* cobip = evc->add_subcommand("cobip", "Polynomial algorithm for cobipartite graphs");
  cobip->add_option("graph", graph, "Graph file")->required();
  cobip->add_option("--sides", sides, "Side file (`side <id> A|B` lines)");
  cobip->add_option("--trace", trace_rounds, "Play this many random attacks and print the trace");

  auto* reduce = app.add_subcommand("reduce", "Build reduced instances");
  reduce->require_subcommand(1);
  auto* rbds = reduce->add_subcommand("rbds", "Red-blue dominating set to eternal vertex cover");
  rbds->add_option("instance", graph, "RBDS JSON file")->required();
  rbds->add_option("--variant", variant, "bipartite or split")->check(CLI::IsMember({"bipartite", "split"}));
  rbds->add_option("--out", out, "Output prefix (default: instance file stem)");

  auto* verify = app.add_subcommand("verify", "Check artifacts");
  verify->require_subcommand(1);
  auto* vred = verify->add_subcommand("reduction", "Re-verify a reduced instance");
  vred->add_option("graph", graph, "Graph file")->required();
  vred->add_option("sidecar", sidecar, "Sidecar JSON")->required();

  auto* extract = app.add_subcommand("extract-domset", "Solve the reduced game and read back a dominating set");
  extract->add_option("graph", graph, "Graph file")->required();
  extract->add_option("sidecar", sidecar, "Sidecar JSON")->required();

  auto* strategy = app.add_subcommand("strategy", "Constructive defender strategies");
  strategy->require_subcommand(1);
  auto* check = strategy->add_subcommand("check", "Exhaustive (cover, attack) closure test");
  check->require_subcommand(1);
  auto* cnice = check->add_subcommand("nice", "Nice-cover strategy on a reduced YES instance");
  cnice->add_option("instance", graph, "RBDS JSON file")->required();
  cnice->add_option("--variant", variant, "bipartite or split")->check(CLI::IsMember({"bipartite", "split"}));
  auto* ccob = check->add_subcommand("cobip", "Cobipartite template strategy");
  ccob->add_option("graph", graph, "Graph file")->required();
  ccob->add_option("--sides", sides, "Side file");

  auto* gen = app.add_subcommand("gen", "Seeded random instances");
  gen->add_option("kind", kind, "graph, connected, rbds or cobip")
      ->check(CLI::IsMember({"graph", "connected", "rbds", "cobip"}));
  gen->add_option("--count", count, "Number of instances")->capture_default_str();
  gen->add_option("--out-dir", out_dir, "Write one file per instance here instead of stdout");
  gen->add_option("-n", n, "Vertices (graph), side A size (cobip)")->capture_default_str();
  gen->add_option("-p", p, "Edge / cross-edge probability")->capture_default_str();
  gen->add_option("-r", r, "Reds")->capture_default_str();
  gen->add_option("-b", b, "Blues")->capture_default_str();
  gen->add_option("-k", k, "RBDS budget")->capture_default_str();
  gen->add_option("-q", q, "Side B size (cobip)")->capture_default_str();

  auto add_session_options = [&](CLI::App* cmd) {
    cmd->add_option("graph", sargs.graph, "Graph file");
    cmd->add_option("-k", sargs.k, "Guards");
    cmd->add_option("--mode", sargs.mode, "human-attacker or human-defender")
        ->check(CLI::IsMember({"human-attacker", "human-defender"}));
    cmd->add_option("--defender", sargs.defender, "exact, reduction-nice, cobipartite or all-but-one")
        ->check(CLI::IsMember({"exact", "reduction-nice", "cobipartite", "all-but-one"}));
    cmd->add_option("--rbds", sargs.rbds, "RBDS JSON (reduction-nice)");
    cmd->add_option("--variant", sargs.variant, "bipartite or split")->check(CLI::IsMember({"bipartite", "split"}));
    cmd->add_option("--domset", sargs.domset, "Red ids of the dominating set");
    cmd->add_option("--sides", sargs.sides, "Side file (cobipartite)");
  };
  auto* play = app.add_subcommand("play", "Interactive game in the terminal");
  add_session_options(play);

  auto* serve = app.add_subcommand("serve", "Run the HTTP session service");
  serve->add_option("--host", host, "Bind address")->capture_default_str();
  serve->add_option("--port", port, "Port (0 picks a free one)")->capture_default_str();
  serve->add_option("--trace-dir", trace_dir, "Directory for per-session trace files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mvc) return cmd_mvc(opt, graph);
    if (*approx) return cmd_approx2(opt, graph);
    if (*cls) return cmd_classify(opt, graph);
    if (*exact) return cmd_evc_exact(opt, graph, k_max, dump);
    if (*cobip) return cmd_evc_cobip(opt, graph, sides, trace_rounds);
    if (*rbds) return cmd_reduce(opt, graph, variant, out);
    if (*vred) return cmd_verify(opt, graph, sidecar);
    if (*extract) return cmd_extract(opt, graph, sidecar);
    if (*cnice) return cmd_check_nice(opt, graph, variant);
    if (*ccob) return cmd_check_cobip(opt, graph, sides);
    if (*gen) return cmd_gen(opt, kind, count, out_dir, n, p, r, b, k, q);
    if (*play) return cmd_play(opt, sargs);
    if (*serve) return cmd_serve(host, port, trace_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
