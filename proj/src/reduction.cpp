#include "evc/reduction.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "evc/algorithms.hpp"

namespace evc {

void RbdsInstance::validate() const {
  std::set<std::string> seen;
  for (const auto& id : reds)
    if (!seen.insert(id).second) throw Error("duplicate vertex id '" + id + "'");
  std::set<std::string> blue_ids;
  for (const auto& id : blues) {
    if (!seen.insert(id).second) throw Error("duplicate vertex id '" + id + "'");
    blue_ids.insert(id);
  }
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& [red, blue] : edges) {
    if (std::find(reds.begin(), reds.end(), red) == reds.end() || !blue_ids.count(blue))
      throw Error("edge (" + red + ", " + blue + ") is not a red-blue pair");
    if (!pairs.insert({red, blue}).second) throw Error("duplicate edge (" + red + ", " + blue + ")");
  }
}

std::vector<std::size_t> RbdsInstance::red_neighbors(std::size_t blue) const {
  const auto& id = blues.at(blue - 1);
  std::vector<std::size_t> out;
  for (const auto& [red, b] : edges) {
    if (b != id) continue;
    auto pos = std::find(reds.begin(), reds.end(), red) - reds.begin();
    out.push_back(static_cast<std::size_t>(pos) + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool RbdsInstance::adjacent(std::size_t red, std::size_t blue) const {
  const auto& r = reds.at(red - 1);
  const auto& b = blues.at(blue - 1);
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) { return e.first == r && e.second == b; });
}

namespace {

bool dominates(const RbdsInstance& inst, const std::vector<std::size_t>& chosen) {
  for (std::size_t j = 1; j <= inst.b(); ++j) {
    bool hit = false;
    for (auto i : chosen) hit = hit || inst.adjacent(i, j);
    if (!hit) return false;
  }
  return true;
}

}  // namespace

PreprocessResult preprocess_rbds(const RbdsInstance& inst) {
  inst.validate();
  for (std::size_t j = 1; j <= inst.b(); ++j)
    if (inst.red_neighbors(j).empty())
      return {Preprocessed::trivial_no, "blue vertex " + inst.blues[j - 1] + " has no red neighbour"};
  if (inst.k >= inst.b()) return {Preprocessed::trivial_yes, "k >= b: one red neighbour per blue suffices"};
  if (inst.b() == 1) {
    if (inst.k >= 1) return {Preprocessed::trivial_yes, "single blue vertex, k >= 1"};
    return {Preprocessed::trivial_no, "single blue vertex, k = 0"};
  }
  if (inst.k > inst.r()) return {Preprocessed::trivial_yes, "k > r: all reds together dominate"};
  return {Preprocessed::normalized, {}};
}

RbdsAnswer rbds_oracle(const RbdsInstance& inst, std::size_t budget) {
  inst.validate();
  const std::size_t r = inst.r();
  std::size_t visited = 0;
  for (std::size_t size = 0; size <= std::min(inst.k, r); ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i + 1;
    while (true) {
      if (++visited > budget) throw BudgetExceeded("rbds_oracle: subset budget exceeded");
      if (dominates(inst, pick)) return {true, pick};
      // next combination in lexicographic order
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == r - size + i) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t t = i; t < size; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return {false, {}};
}

std::string_view to_string(Variant v) { return v == Variant::split ? "split" : "bipartite"; }

Variant parse_variant(std::string_view s) {
  if (s == "bipartite") return Variant::bipartite;
  if (s == "split") return Variant::split;
  throw Error("unknown variant '" + std::string(s) + "' (expected bipartite or split)");
}

std::string_view to_string(RoleKind k) {
  switch (k) {
    case RoleKind::red: return "red";
    case RoleKind::blue: return "blue";
    case RoleKind::dependent: return "dependent";
    case RoleKind::dependent_star: return "dependent_star";
    case RoleKind::universal: return "universal";
    case RoleKind::backup: return "backup";
  }
  return "unknown";
}

std::string_view to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::structural: return "structural";
    case EdgeKind::sliding: return "sliding";
    case EdgeKind::supplier: return "supplier";
    case EdgeKind::bridge: return "bridge";
    case EdgeKind::clique: return "clique";
  }
  return "unknown";
}

namespace {

std::string red_id(std::size_t i) { return "v" + std::to_string(i); }
std::string blue_id(std::size_t i) { return "u" + std::to_string(i); }
std::string dep_id(std::size_t i, std::size_t j) { return "w" + std::to_string(i) + "_" + std::to_string(j); }
std::string dep_star_id(std::size_t j) { return "wstar_" + std::to_string(j); }

bool red_blue_connected(const RbdsInstance& inst) {
  std::vector<std::string> ids = inst.reds;
  ids.insert(ids.end(), inst.blues.begin(), inst.blues.end());
  if (ids.size() <= 1) return true;
  return is_connected(Graph(ids, inst.edges));
}

}  // namespace

ReducedInstance ReducedInstance::build(const RbdsInstance& inst, Variant variant) {
  auto pre = preprocess_rbds(inst);
  if (pre.outcome != Preprocessed::normalized) throw Error("instance is not normalized: " + pre.reason);

  ReducedInstance ri;
  ri.source_ = inst;
  ri.variant_ = variant;
  ri.ell_ = inst.b() + inst.k + 2;
  if (!red_blue_connected(inst)) ri.warnings_.push_back("red-blue graph is disconnected");

  const std::size_t r = inst.r(), b = inst.b(), d = b * b + 3;
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 1; i <= r; ++i) ids.push_back(red_id(i));
  for (std::size_t i = 1; i <= b; ++i) ids.push_back(blue_id(i));
  for (std::size_t i = 1; i <= b; ++i)
    for (std::size_t j = 1; j <= d; ++j) ids.push_back(dep_id(i, j));
  for (std::size_t j = 1; j <= d; ++j) ids.push_back(dep_star_id(j));
  ids.push_back("star");
  ids.push_back("dagger");

  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; j <= b; ++j)
      if (inst.adjacent(i, j)) edges.emplace_back(red_id(i), blue_id(j));
  for (std::size_t i = 1; i <= b; ++i)
    for (std::size_t j = 1; j <= d; ++j) edges.emplace_back(blue_id(i), dep_id(i, j));
  for (std::size_t j = 1; j <= d; ++j) edges.emplace_back("star", dep_star_id(j));
  for (std::size_t i = 1; i <= r; ++i) edges.emplace_back("star", red_id(i));
  edges.emplace_back("star", "dagger");
  if (variant == Variant::split) {
    for (std::size_t i = 1; i <= b; ++i) {
      for (std::size_t j = i + 1; j <= b; ++j) edges.emplace_back(blue_id(i), blue_id(j));
      edges.emplace_back(blue_id(i), "star");
    }
  }
  ri.h_ = Graph(std::move(ids), edges);
  ri.index_roles();
  return ri;
}

void ReducedInstance::index_roles() {
  const std::size_t r = this->r(), b = this->b(), d = dependents_per_type();
  roles_.assign(h_.size(), Role{});
  red_.clear();
  blue_.clear();
  dependents_.assign(b, {});
  star_dependents_.clear();
  for (std::size_t i = 1; i <= r; ++i) {
    red_.push_back(h_.at(red_id(i)));
    roles_[red_.back()] = {RoleKind::red, i, 0};
  }
  for (std::size_t i = 1; i <= b; ++i) {
    blue_.push_back(h_.at(blue_id(i)));
    roles_[blue_.back()] = {RoleKind::blue, i, 0};
    for (std::size_t j = 1; j <= d; ++j) {
      dependents_[i - 1].push_back(h_.at(dep_id(i, j)));
      roles_[dependents_[i - 1].back()] = {RoleKind::dependent, i, j};
    }
  }
  for (std::size_t j = 1; j <= d; ++j) {
    star_dependents_.push_back(h_.at(dep_star_id(j)));
    roles_[star_dependents_.back()] = {RoleKind::dependent_star, 0, j};
  }
  star_ = h_.at("star");
  dagger_ = h_.at("dagger");
  roles_[star_] = {RoleKind::universal, 0, 0};
  roles_[dagger_] = {RoleKind::backup, 0, 0};

  edge_info_.clear();
  for (auto [u, v] : h_.edges()) {
    auto ru = roles_[u].kind, rv = roles_[v].kind;
    if (ru > rv) {
      std::swap(u, v);
      std::swap(ru, rv);
    }
    EdgeInfo info;
    if (ru == RoleKind::red && rv == RoleKind::blue) {
      info.kind = EdgeKind::structural;
    } else if (ru == RoleKind::blue && rv == RoleKind::dependent) {
      info = {EdgeKind::sliding, roles_[u].index};
    } else if (ru == RoleKind::dependent_star && rv == RoleKind::universal) {
      info = {EdgeKind::sliding, 0};
    } else if (ru == RoleKind::red && rv == RoleKind::universal) {
      info.kind = EdgeKind::supplier;
    } else if (ru == RoleKind::universal && rv == RoleKind::backup) {
      info.kind = EdgeKind::bridge;
    } else if ((ru == RoleKind::blue && rv == RoleKind::blue) || (ru == RoleKind::blue && rv == RoleKind::universal)) {
      info.kind = EdgeKind::clique;
    } else {
      throw Error("edge " + h_.format_edge({u, v}) + " does not belong to any edge family");
    }
    edge_info_.push_back(info);
  }
}

const EdgeInfo& ReducedInstance::edge_info(Edge e) const {
  auto i = h_.edge_index(e.first, e.second);
  if (!i) throw GraphError("not an edge: " + h_.format_edge(e));
  return edge_info_[*i];
}

VertexSet ReducedInstance::core() const {
  VertexSet s = h_.empty_set();
  for (auto v : blue_) s.insert(v);
  s.insert(star_);
  return s;
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed; });
}

VerificationReport verify_instance(const ReducedInstance& ri, const VerifyOptions& opts) {
  VerificationReport rep;
  auto add = [&](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const auto& h = ri.graph();
  const std::size_t r = ri.r(), b = ri.b();

  const std::size_t expected_n = r + b * b * b + b * b + 4 * b + 5;
  add("vertex_count", h.size() == expected_n,
      std::to_string(h.size()) + " vertices, expected " + std::to_string(expected_n));
  add("ell", ri.ell() == b + ri.k() + 2, "ell = " + std::to_string(ri.ell()));

  bool dep_ok = ri.star_dependents().size() == ri.dependents_per_type();
  for (std::size_t i = 1; i <= b; ++i) dep_ok = dep_ok && ri.dependents(i).size() == ri.dependents_per_type();
  add("dependent_sets", dep_ok, std::to_string(b + 1) + " sets of " + std::to_string(ri.dependents_per_type()));

  std::map<EdgeKind, std::size_t> counts;
  for (std::size_t e = 0; e < h.edge_count(); ++e) ++counts[ri.edge_info(e).kind];
  const std::size_t d = ri.dependents_per_type();
  const std::size_t clique = ri.variant() == Variant::split ? (b + 1) * b / 2 : 0;
  bool kinds_ok = counts[EdgeKind::structural] == ri.source().edges.size() && counts[EdgeKind::sliding] == (b + 1) * d &&
                  counts[EdgeKind::supplier] == r && counts[EdgeKind::bridge] == 1 && counts[EdgeKind::clique] == clique;
  std::string kinds_detail;
  for (auto k : {EdgeKind::structural, EdgeKind::sliding, EdgeKind::supplier, EdgeKind::bridge, EdgeKind::clique})
    kinds_detail += std::string(to_string(k)) + "=" + std::to_string(counts[k]) + " ";
  kinds_detail.pop_back();
  add("edge_partition", kinds_ok, kinds_detail);

  // B u {star} covers H, and blue/star each own a private dependent edge, so
  // a matching of size b + 1 certifies optimality.
  const auto core = ri.core();
  const auto matching = max_matching(h);
  bool mvc_ok = is_vertex_cover(h, core) && matching.size() == b + 1;
  add("mvc", mvc_ok, "cover B+star of size " + std::to_string(core.size()) + ", matching of size " +
                         std::to_string(matching.size()));

  // Skipping a vertex of the core forces all of its b^2+3 private dependents.
  bool forced = d > ri.ell();
  add("core_forced", forced, std::to_string(d) + " pendant dependents per core vertex vs ell = " + std::to_string(ri.ell()));

  if (h.size() <= opts.enumeration_vertex_limit) {
    try {
      std::size_t total = 0;
      bool all_contain = true;
      for (std::size_t s = b + 1; s <= ri.ell(); ++s) {
        for (const auto& c : vertex_covers_of_size(h, s, opts.budget)) {
          ++total;
          all_contain = all_contain && core.is_subset_of(c);
        }
      }
      add("covers_contain_core", all_contain, std::to_string(total) + " covers of size <= ell enumerated");
    } catch (const BudgetExceeded& e) {
      add("covers_contain_core", forced, std::string("enumeration skipped (") + e.what() + "), structural argument only");
    }
  }

  const auto cls = classify(h);
  if (ri.variant() == Variant::bipartite) {
    auto diam = diameter(h);
    add("bipartite", cls.bipartite, cls.bipartite ? "2-colourable" : "odd cycle found");
    add("diameter", diam && *diam <= 6, diam ? "diameter " + std::to_string(*diam) : "disconnected");
  } else {
    add("split", cls.split, cls.split ? "split graph" : "not a split graph");
  }
  for (const auto& w : ri.warnings()) add("warning", true, w);
  return rep;
}

std::string_view to_string(NiceKind k) {
  switch (k) {
    case NiceKind::backup: return "backup";
    case NiceKind::dependent: return "dependent";
    case NiceKind::dependent_star: return "dependent_star";
    case NiceKind::red: return "red";
  }
  return "unknown";
}

VertexSet NiceCover::materialize(const ReducedInstance& ri) const {
  VertexSet s = ri.core();
  for (auto i : dom) s.insert(ri.red(i));
  s.insert(extra);
  return s;
}

std::string NiceCover::label(const ReducedInstance& ri) const {
  const auto& role = ri.role(extra);
  switch (kind) {
    case NiceKind::backup: return "Backup";
    case NiceKind::dependent: return "Dependent(" + std::to_string(role.index) + "," + ri.graph().id(extra) + ")";
    case NiceKind::dependent_star: return "DependentStar(" + ri.graph().id(extra) + ")";
    case NiceKind::red: return "Red(" + std::to_string(role.index) + ")";
  }
  return "?";
}

std::vector<std::size_t> nice_support(const ReducedInstance& ri, std::vector<std::size_t> dom) {
  std::sort(dom.begin(), dom.end());
  dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
  for (auto i : dom)
    if (i < 1 || i > ri.r()) throw Error("red index " + std::to_string(i) + " out of range");
  if (dom.size() > ri.k()) throw Error("dominating set larger than k");
  if (!dominates(ri.source(), dom)) throw Error("red set does not dominate every blue vertex");
  const std::size_t target = std::min(ri.k(), ri.r());
  for (std::size_t i = 1; i <= ri.r() && dom.size() < target; ++i)
    if (!std::binary_search(dom.begin(), dom.end(), i)) dom.insert(std::upper_bound(dom.begin(), dom.end(), i), i);
  return dom;
}

std::vector<NiceCover> NiceFamilies::all() const {
  std::vector<NiceCover> out{backup};
  out.insert(out.end(), dependent.begin(), dependent.end());
  out.insert(out.end(), dependent_star.begin(), dependent_star.end());
  out.insert(out.end(), red.begin(), red.end());
  return out;
}

NiceFamilies nice_cover_families(const ReducedInstance& ri, const std::vector<std::size_t>& dom) {
  NiceFamilies f;
  f.support = nice_support(ri, dom);
  f.backup = {NiceKind::backup, ri.dagger(), f.support};
  for (std::size_t i = 1; i <= ri.b(); ++i)
    for (auto w : ri.dependents(i)) f.dependent.push_back({NiceKind::dependent, w, f.support});
  for (auto w : ri.star_dependents()) f.dependent_star.push_back({NiceKind::dependent_star, w, f.support});
  for (std::size_t j = 1; j <= ri.r(); ++j)
    if (!std::binary_search(f.support.begin(), f.support.end(), j)) f.red.push_back({NiceKind::red, ri.red(j), f.support});
  return f;
}

namespace {

std::optional<NiceCover> match_template(const ReducedInstance& ri, const Config& c, const std::vector<std::size_t>& support) {
  for (auto i : support)
    if (!c.contains(ri.red(i))) return std::nullopt;
  VertexSet base = ri.core();
  for (auto i : support) base.insert(ri.red(i));
  if (!base.is_subset_of(c)) return std::nullopt;
  auto rest = (c - base).members();
  if (rest.size() != 1) return std::nullopt;
  const Vertex x = rest[0];
  switch (ri.role(x).kind) {
    case RoleKind::backup: return NiceCover{NiceKind::backup, x, support};
    case RoleKind::dependent: return NiceCover{NiceKind::dependent, x, support};
    case RoleKind::dependent_star: return NiceCover{NiceKind::dependent_star, x, support};
    case RoleKind::red: return NiceCover{NiceKind::red, x, support};
    default: return std::nullopt;
  }
}

}  // namespace

std::optional<NiceCover> classify_cover(const ReducedInstance& ri, const Config& c,
                                        const std::optional<std::vector<std::size_t>>& support) {
  const auto& h = ri.graph();
  if (c.universe() != h.size() || c.size() != ri.ell() || !ri.core().is_subset_of(c)) return std::nullopt;
  const std::size_t s = std::min(ri.k(), ri.r());
  if (support) {
    std::vector<std::size_t> sup = *support;
    std::sort(sup.begin(), sup.end());
    if (sup.size() != s || !dominates(ri.source(), sup)) return std::nullopt;
    return match_template(ri, c, sup);
  }
  std::vector<std::size_t> guarded;
  for (std::size_t i = 1; i <= ri.r(); ++i)
    if (c.contains(ri.red(i))) guarded.push_back(i);
  // S* is the guarded reds, or all but one of them for a red cover.
  std::vector<std::vector<std::size_t>> candidates;
  if (guarded.size() == s) {
    candidates.push_back(guarded);
  } else if (guarded.size() == s + 1) {
    for (std::size_t drop = 0; drop < guarded.size(); ++drop) {
      auto cand = guarded;
      cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(drop));
      candidates.push_back(std::move(cand));
    }
  }
  std::optional<NiceCover> found;
  for (const auto& cand : candidates) {
    if (!dominates(ri.source(), cand)) continue;
    auto m = match_template(ri, c, cand);
    if (!m) continue;
    if (found) return std::nullopt;
    found = m;
  }
  return found;
}

}  // namespace evc
