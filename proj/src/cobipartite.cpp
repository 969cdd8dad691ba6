#include "evc/cobipartite.hpp"

#include <algorithm>
#include <sstream>

#include "evc/algorithms.hpp"

namespace evc {

VertexSet CobipInstance::side_a() const { return VertexSet(g.size(), a); }
VertexSet CobipInstance::side_b() const { return VertexSet(g.size(), b); }
bool CobipInstance::in_a(Vertex v) const { return std::binary_search(a.begin(), a.end(), v); }

std::optional<std::pair<VertexSet, VertexSet>> find_sides(const Graph& g) {
  auto colour = two_coloring(g.complement());
  if (!colour) return std::nullopt;
  VertexSet a = g.empty_set(), b = g.empty_set();
  for (Vertex v = 0; v < g.size(); ++v) ((*colour)[v] == 0 ? a : b).insert(v);
  return std::make_pair(a, b);
}

namespace {

bool is_global(const Graph& g, Vertex v) { return g.degree(v) + 1 == g.size(); }

}  // namespace

CobipInstance normalize(const Graph& g, const VertexSet& side_a, const VertexSet& side_b) {
  if (side_a.universe() != g.size() || side_b.universe() != g.size())
    throw GraphError("side sets do not match the graph");
  if (!(side_a & side_b).empty() || (side_a | side_b).size() != g.size())
    throw GraphError("sides must partition the vertex set");
  if (!is_clique(g, side_a) || !is_clique(g, side_b)) throw GraphError("each side must induce a clique");

  CobipInstance inst{g, side_a.members(), side_b.members(), false};
  for (int iter = 0; iter < 8; ++iter) {
    bool changed = false;
    std::vector<Vertex> keep;
    for (auto v : inst.a) {
      if (is_global(g, v)) {
        inst.b.push_back(v);
        changed = true;
      } else {
        keep.push_back(v);
      }
    }
    inst.a = std::move(keep);
    std::sort(inst.b.begin(), inst.b.end());
    if (inst.a.size() > inst.b.size()) {
      std::swap(inst.a, inst.b);
      changed = true;
    }
    if (!changed) break;
  }
  inst.normalized = true;
  return inst;
}

std::pair<VertexSet, VertexSet> parse_sides(const Graph& g, std::string_view text) {
  VertexSet a = g.empty_set(), b = g.empty_set();
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw, id, side;
    if (!(ls >> kw) || kw[0] == '#') continue;
    auto where = "line " + std::to_string(lineno) + ": ";
    if (kw != "side" || !(ls >> id >> side)) throw GraphError(where + "expected 'side <id> A|B'");
    auto v = g.find(id);
    if (!v) throw GraphError(where + "unknown vertex '" + id + "'");
    if (a.contains(*v) || b.contains(*v)) throw GraphError(where + "vertex '" + id + "' assigned twice");
    if (side == "A") a.insert(*v);
    else if (side == "B") b.insert(*v);
    else throw GraphError(where + "side must be A or B");
  }
  if ((a | b).size() != g.size()) throw GraphError("not every vertex has a side");
  return {a, b};
}

std::string format_sides(const CobipInstance& inst) {
  std::string out;
  for (auto v : inst.a) out += "side " + inst.g.id(v) + " A\n";
  for (auto v : inst.b) out += "side " + inst.g.id(v) + " B\n";
  return out;
}

PartitionAnalysis analyze(const CobipInstance& inst) {
  const auto& g = inst.g;
  PartitionAnalysis an;
  an.globals_b = g.empty_set();
  an.friends.assign(g.size(), g.empty_set());
  for (auto x : inst.a)
    for (auto y : inst.b) {
      if (g.has_edge(x, y)) {
        ++an.cross_edges;
      } else {
        an.friends[x].insert(y);
        an.friends[y].insert(x);
      }
    }
  for (auto y : inst.b) {
    if (an.friends[y].empty()) an.globals_b.insert(y);
    else ++an.nonglobal_b_count;
  }
  if (inst.p() == 2) {
    an.b_parts.assign(4, {});
    const Vertex a1 = inst.a[0], a2 = inst.a[1];
    for (auto y : inst.b) {
      bool n1 = g.has_edge(a1, y), n2 = g.has_edge(a2, y);
      an.b_parts[n1 && n2 ? 2 : n1 ? 0 : n2 ? 1 : 3].push_back(y);
    }
  }
  return an;
}

std::string_view to_string(CobipBranch b) {
  switch (b) {
    case CobipBranch::p0_clique: return "p0-clique";
    case CobipBranch::p1_q1_empty: return "p1-q1-empty";
    case CobipBranch::p1_isolated: return "p1-isolated";
    case CobipBranch::p1_attached: return "p1-attached";
    case CobipBranch::p2q2_no_cross: return "p2q2-no-cross";
    case CobipBranch::p2q2_disjoint: return "p2q2-disjoint";
    case CobipBranch::p2q2_common: return "p2q2-common";
    case CobipBranch::p2q2_one_sided: return "p2q2-one-sided";
    case CobipBranch::p2_no_cross: return "p2-no-cross";
    case CobipBranch::p2_one_sided: return "p2-one-sided";
    case CobipBranch::p2_b3_empty: return "p2-b3-empty";
    case CobipBranch::p2_b3_partial: return "p2-b3-partial";
    case CobipBranch::p2_b3_full: return "p2-b3-full";
    case CobipBranch::big_no_cross: return "big-no-cross";
    case CobipBranch::big_one_edge: return "big-one-edge";
    case CobipBranch::big_one_nonglobal: return "big-one-nonglobal";
    case CobipBranch::big_some_globals: return "big-some-globals";
    case CobipBranch::big_one_a_source: return "big-one-a-source";
    case CobipBranch::big_one_b_source: return "big-one-b-source";
    case CobipBranch::big_spread: return "big-spread";
  }
  return "unknown";
}

bool uses_sij(CobipBranch b) {
  switch (b) {
    case CobipBranch::p0_clique:
    case CobipBranch::p1_attached:
    case CobipBranch::p2q2_common:
    case CobipBranch::p2q2_one_sided:
    case CobipBranch::p2_one_sided:
    case CobipBranch::p2_b3_full:
    case CobipBranch::big_one_nonglobal: return false;
    default: return true;
  }
}

std::size_t mvc_cobip(const CobipInstance& inst) {
  if (!inst.normalized) throw Error("instance is not normalized");
  if (inst.p() == 0) return inst.q() == 0 ? 0 : inst.q() - 1;
  return inst.p() + inst.q() - 2;
}

namespace {

// A-vertices with at least one neighbour in B.
std::size_t a_with_cross(const CobipInstance& inst) {
  return static_cast<std::size_t>(std::count_if(inst.a.begin(), inst.a.end(), [&](Vertex x) {
    return std::any_of(inst.b.begin(), inst.b.end(), [&](Vertex y) { return inst.g.has_edge(x, y); });
  }));
}

std::size_t b_with_cross(const CobipInstance& inst) {
  return static_cast<std::size_t>(std::count_if(inst.b.begin(), inst.b.end(), [&](Vertex y) {
    return std::any_of(inst.a.begin(), inst.a.end(), [&](Vertex x) { return inst.g.has_edge(x, y); });
  }));
}

CobipBranch decide(const CobipInstance& inst, const PartitionAnalysis& an) {
  const std::size_t p = inst.p(), q = inst.q();
  const auto& g = inst.g;
  if (p == 0) return CobipBranch::p0_clique;
  if (p == 1) {
    if (q == 1) return CobipBranch::p1_q1_empty;
    return an.cross_edges == 0 ? CobipBranch::p1_isolated : CobipBranch::p1_attached;
  }
  if (p == 2 && q == 2) {
    if (an.cross_edges == 0) return CobipBranch::p2q2_no_cross;
    const std::size_t sources = a_with_cross(inst);
    if (sources == 1) return CobipBranch::p2q2_one_sided;
    // Both a_i have exactly one neighbour (two would make them global).
    auto nb = [&](Vertex x) { return g.has_edge(x, inst.b[0]) ? inst.b[0] : inst.b[1]; };
    return nb(inst.a[0]) == nb(inst.a[1]) ? CobipBranch::p2q2_common : CobipBranch::p2q2_disjoint;
  }
  if (p == 2) {
    if (an.cross_edges == 0) return CobipBranch::p2_no_cross;
    if (a_with_cross(inst) == 1) return CobipBranch::p2_one_sided;
    const std::size_t b3 = an.b_parts[2].size();
    if (b3 == 0) return CobipBranch::p2_b3_empty;
    if (b3 + 2 <= q) return CobipBranch::p2_b3_partial;
    return CobipBranch::p2_b3_full;
  }
  if (an.cross_edges == 0) return CobipBranch::big_no_cross;
  if (an.cross_edges == 1) return CobipBranch::big_one_edge;
  if (an.nonglobal_b_count == 1) return CobipBranch::big_one_nonglobal;
  if (!an.globals_b.empty()) return CobipBranch::big_some_globals;
  if (a_with_cross(inst) == 1) return CobipBranch::big_one_a_source;
  if (b_with_cross(inst) == 1) return CobipBranch::big_one_b_source;
  return CobipBranch::big_spread;
}

}  // namespace

CobipValue evc_cobip(const CobipInstance& inst) {
  if (!inst.normalized) throw Error("instance is not normalized");
  auto an = analyze(inst);
  CobipValue v;
  v.mvc = mvc_cobip(inst);
  v.branch = decide(inst, an);
  if (v.branch == CobipBranch::p0_clique) v.evc = v.mvc;
  else v.evc = uses_sij(v.branch) ? v.mvc : v.mvc + 1;
  return v;
}

Config CoverTemplate::materialize(const Graph& g) const {
  Config c = g.full_set();
  c.erase(a);
  if (kind == Kind::sij) c.erase(b);
  return c;
}

std::string CoverTemplate::label(const Graph& g) const {
  if (kind == Kind::all_but_one) return "AllButOne(" + g.id(a) + ")";
  return "S(" + g.id(a) + "," + g.id(b) + ")";
}

Graph cobipartite_graph(std::size_t p, std::size_t q, const std::vector<std::pair<std::size_t, std::size_t>>& cross) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < p; ++i) ids.push_back("a" + std::to_string(i));
  for (std::size_t j = 0; j < q; ++j) ids.push_back("b" + std::to_string(j));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = i + 1; k < p; ++k) edges.emplace_back(i, k);
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t k = j + 1; k < q; ++k) edges.emplace_back(p + j, p + k);
  for (auto [i, j] : cross) edges.emplace_back(i, p + j);
  return Graph::from_positions(std::move(ids), edges);
}

std::vector<CobipInstance> all_small_cobipartite(std::size_t max_n) {
  if (max_n > 8) throw LimitExceeded("all_small_cobipartite supports max_n <= 8");
  std::vector<CobipInstance> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (std::size_t p = 0; 2 * p <= n; ++p) {
      const std::size_t q = n - p;
      const std::size_t cells = p * q;
      for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << cells); ++pattern) {
        std::vector<std::pair<std::size_t, std::size_t>> cross;
        for (std::size_t cell = 0; cell < cells; ++cell)
          if ((pattern >> cell) & 1u) cross.emplace_back(cell / q, cell % q);
        Graph g = cobipartite_graph(p, q, cross);
        VertexSet a = g.empty_set(), b = g.empty_set();
        for (std::size_t i = 0; i < p; ++i) a.insert(g.at("a" + std::to_string(i)));
        for (std::size_t j = 0; j < q; ++j) b.insert(g.at("b" + std::to_string(j)));
        out.push_back(normalize(g, a, b));
      }
    }
  return out;
}

}  // namespace evc
