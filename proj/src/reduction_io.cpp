#include <cstdio>

#include <json.hpp>

#include "evc/reduction.hpp"

namespace evc {

using nlohmann::json;

namespace {

json rbds_json(const RbdsInstance& inst) {
  json edges = json::array();
  for (const auto& [r, b] : inst.edges) edges.push_back({r, b});
  return {{"reds", inst.reds}, {"blues", inst.blues}, {"edges", edges}, {"k", inst.k}};
}

RbdsInstance rbds_from_json(const json& j) {
  RbdsInstance inst;
  try {
    inst.reds = j.at("reds").get<std::vector<std::string>>();
    inst.blues = j.at("blues").get<std::vector<std::string>>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error("each edge must be a [red, blue] pair");
      inst.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    auto k = j.at("k").get<long long>();
    if (k < 0) throw Error("k must be non-negative");
    inst.k = static_cast<std::size_t>(k);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed RBDS instance: ") + e.what());
  }
  inst.validate();
  return inst;
}

std::string role_tag(const Role& r) {
  switch (r.kind) {
    case RoleKind::red: return "red:" + std::to_string(r.index);
    case RoleKind::blue: return "blue:" + std::to_string(r.index);
    case RoleKind::dependent: return "dependent:" + std::to_string(r.index) + ":" + std::to_string(r.slot);
    case RoleKind::dependent_star: return "dependent_star:" + std::to_string(r.slot);
    case RoleKind::universal: return "universal";
    case RoleKind::backup: return "backup";
  }
  return "?";
}

std::string edge_tag(const EdgeInfo& e) {
  if (e.kind != EdgeKind::sliding) return std::string(to_string(e.kind));
  return e.type == 0 ? "sliding:star" : "sliding:" + std::to_string(e.type);
}

ReducedInstance from_sidecar(const std::string& graph_text, const json& j) {
  auto source = rbds_from_json(j.at("source"));
  auto variant = parse_variant(j.at("variant").get<std::string>());
  if (j.at("digest").get<std::string>() != rbds_digest(source)) throw Error("sidecar digest does not match its source");

  auto ri = ReducedInstance::build(source, variant);
  if (j.at("ell").get<std::size_t>() != ri.ell()) throw Error("sidecar ell does not match b + k + 2");
  auto g = parse_graph(graph_text);
  if (serialize_graph(g) != serialize_graph(ri.graph())) throw Error("graph file does not match the reduction of its source");

  const auto& roles = j.at("roles");
  for (Vertex v = 0; v < g.size(); ++v) {
    auto it = roles.find(g.id(v));
    if (it == roles.end() || it->get<std::string>() != role_tag(ri.role(v)))
      throw Error("role annotation mismatch at vertex " + g.id(v));
  }
  const auto& edges = j.at("edges");
  if (edges.size() != g.edge_count()) throw Error("edge annotation count mismatch");
  for (const auto& e : edges) {
    auto u = g.find(e.at(0).get<std::string>()), v = g.find(e.at(1).get<std::string>());
    if (!u || !v || !g.has_edge(*u, *v)) throw Error("edge annotation names a non-edge");
    if (e.at(2).get<std::string>() != edge_tag(ri.edge_info(make_edge(*u, *v))))
      throw Error("edge kind mismatch at " + g.format_edge(make_edge(*u, *v)));
  }
  return ri;
}

}  // namespace

RbdsInstance parse_rbds_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  return rbds_from_json(j);
}

std::string rbds_to_json(const RbdsInstance& inst) { return rbds_json(inst).dump(2) + "\n"; }

std::string rbds_digest(const RbdsInstance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : rbds_json(inst).dump()) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ReducedInstance::sidecar_json() const {
  json roles = json::object();
  for (Vertex v = 0; v < h_.size(); ++v) roles[h_.id(v)] = role_tag(roles_[v]);
  json edges = json::array();
  for (std::size_t e = 0; e < h_.edge_count(); ++e) {
    auto [u, v] = h_.edges()[e];
    edges.push_back({h_.id(u), h_.id(v), edge_tag(edge_info_[e])});
  }
  json j = {{"ell", ell_},     {"variant", to_string(variant_)}, {"digest", rbds_digest(source_)},
            {"source", rbds_json(source_)}, {"roles", roles}, {"edges", edges}};
  return j.dump(2) + "\n";
}

ReducedInstance ReducedInstance::from_artifact(const std::string& graph_text, const std::string& sidecar_json) {
  json j;
  try {
    j = json::parse(sidecar_json);
  } catch (const json::parse_error& e) {
    throw Error(std::string("invalid sidecar JSON: ") + e.what());
  }
  try {
    return from_sidecar(graph_text, j);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed sidecar: ") + e.what());
  }
}

}  // namespace evc
