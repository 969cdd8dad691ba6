#include <algorithm>
#include <deque>

#include "evc/reduction.hpp"

namespace evc {

namespace {

class CaseMachine {
 public:
  CaseMachine(const ReducedInstance& ri, const NiceCover& nc) : ri_(ri), nc_(nc), star_(ri.star()), dagger_(ri.dagger()) {}

  // Smallest S* red adjacent to u_p.
  std::size_t dom(std::size_t p) const {
    for (auto i : nc_.dom)
      if (ri_.source().adjacent(i, p)) return i;
    throw Error("support does not dominate blue " + std::to_string(p));
  }

  Vertex v(std::size_t i) const { return ri_.red(i); }
  Vertex u(std::size_t i) const { return ri_.blue(i); }

  // Guard moves that put a guard back on the star after it left, taken from
  // the extra guard of the current cover.
  void refill_star(std::vector<Move>& m) const {
    const Vertex w = nc_.extra;
    switch (nc_.kind) {
      case NiceKind::backup: m.push_back({dagger_, star_}); break;
      case NiceKind::red: m.push_back({w, star_}); break;
      case NiceKind::dependent_star: m.push_back({w, star_}); break;
      case NiceKind::dependent: {
        const std::size_t j = ri_.role(w).index;
        const std::size_t s = dom(j);
        m.push_back({v(s), star_});
        m.push_back({u(j), v(s)});
        m.push_back({w, u(j)});
        break;
      }
    }
  }

  // Attack on (v_q, u_p) with v_q unguarded.
  std::vector<Move> structural(std::size_t q, std::size_t p) const {
    std::vector<Move> m;
    const Vertex w = nc_.extra;
    if (nc_.kind == NiceKind::dependent) {
      const std::size_t j = ri_.role(w).index;
      if (p == j) return {{u(j), v(q)}, {w, u(j)}};
      const std::size_t r = dom(p);
      if (ri_.source().adjacent(r, j)) return {{u(p), v(q)}, {v(r), u(p)}, {u(j), v(r)}, {w, u(j)}};
      m = {{u(p), v(q)}, {v(r), u(p)}, {star_, v(r)}};
      refill_star(m);
      return m;
    }
    const std::size_t r = dom(p);
    m = {{u(p), v(q)}, {v(r), u(p)}, {star_, v(r)}};
    refill_star(m);
    return m;
  }

  // Attack on (u_i, z), z in C_i unguarded.
  std::vector<Move> sliding_blue(std::size_t i, Vertex z) const {
    const Vertex w = nc_.extra;
    const std::size_t q = dom(i);
    if (nc_.kind == NiceKind::dependent) {
      const std::size_t j = ri_.role(w).index;
      if (i == j) return {{u(j), z}, {w, u(j)}};
      if (dom(j) == q) return {{u(i), z}, {v(q), u(i)}, {u(j), v(q)}, {w, u(j)}};
    }
    std::vector<Move> m{{u(i), z}, {v(q), u(i)}, {star_, v(q)}};
    refill_star(m);
    return m;
  }

  // Attack on (star, z), z in D unguarded; on (v_i, star) with v_i unguarded;
  // on the bridge with dagger unguarded. The star guard crosses, then refill.
  std::vector<Move> from_star(Vertex target) const {
    std::vector<Move> m{{star_, target}};
    refill_star(m);
    return m;
  }

  int case_number(EdgeKind e) const {
    int base = 0;
    switch (nc_.kind) {
      case NiceKind::backup: base = 0; break;
      case NiceKind::red: base = 4; break;
      case NiceKind::dependent:
      case NiceKind::dependent_star: base = 8; break;
    }
    switch (e) {
      case EdgeKind::structural: return base + 1;
      case EdgeKind::sliding: return base + 2;
      case EdgeKind::supplier: return base + 3;
      case EdgeKind::bridge: return base + 4;
      case EdgeKind::clique: return 0;
    }
    return 0;
  }

 private:
  const ReducedInstance& ri_;
  const NiceCover& nc_;
  Vertex star_, dagger_;
};

void validate_nice(const ReducedInstance& ri, const NiceCover& nc) {
  auto expected = nice_support(ri, nc.dom);
  if (expected != nc.dom) throw Error("nice cover support must be a sorted dominating set of size min(k, r)");
  if (nc.extra >= ri.graph().size()) throw Error("nice cover extra vertex out of range");
  const auto role = ri.role(nc.extra).kind;
  bool ok = false;
  switch (nc.kind) {
    case NiceKind::backup: ok = role == RoleKind::backup; break;
    case NiceKind::dependent: ok = role == RoleKind::dependent; break;
    case NiceKind::dependent_star: ok = role == RoleKind::dependent_star; break;
    case NiceKind::red:
      ok = role == RoleKind::red && !std::binary_search(nc.dom.begin(), nc.dom.end(), ri.role(nc.extra).index);
      break;
  }
  if (!ok) throw Error("nice cover extra vertex does not match its kind");
}

}  // namespace

NiceDefense defend_nice(const ReducedInstance& ri, const NiceCover& nc, Edge attacked) {
  validate_nice(ri, nc);
  const auto& h = ri.graph();
  attacked = make_edge(attacked.first, attacked.second);
  if (!h.has_edge(attacked.first, attacked.second)) throw GraphError("attacked pair is not an edge of H");

  const Config c = nc.materialize(ri);
  const auto info = ri.edge_info(attacked);
  CaseMachine cm(ri, nc);
  const int rule = cm.case_number(info.kind);

  if (c.contains(attacked.first) && c.contains(attacked.second)) {
    auto [plan, next] = exchange_plan(c, attacked);
    return {plan, nc, rule};
  }

  auto [a, b] = attacked;
  if (ri.role(a).kind > ri.role(b).kind) std::swap(a, b);  // role order: red, blue, dependent, dependent_star, star, dagger
  std::vector<Move> moves;
  switch (info.kind) {
    case EdgeKind::structural: moves = cm.structural(ri.role(a).index, ri.role(b).index); break;
    case EdgeKind::sliding:
      moves = info.type == 0 ? cm.from_star(a) : cm.sliding_blue(info.type, b);
      break;
    case EdgeKind::supplier: moves = cm.from_star(a); break;
    case EdgeKind::bridge: moves = cm.from_star(ri.dagger()); break;
    case EdgeKind::clique: throw Error("clique edge with an unguarded endpoint");
  }

  MovePlan plan = plan_from_moves(c, moves, attacked);
  auto next = classify_cover(ri, plan.destination(h.size()), nc.dom);
  if (!next) throw Error("defence of " + h.format_edge(attacked) + " from " + nc.label(ri) + " left the nice family");
  return {plan, *next, rule};
}

std::vector<std::string> extract_dominating_set(const ReducedInstance& ri, const SafeSet& s) {
  if (s.empty()) throw Error("safe set is empty");
  if (s.guards() != ri.ell()) throw Error("safe set was not computed with ell guards");
  Config c = s.members().front();
  if (!c.contains(ri.dagger())) c = s.defend(c, make_edge(ri.star(), ri.dagger())).second;

  std::vector<std::size_t> chosen;
  for (std::size_t i = 1; i <= ri.r(); ++i)
    if (c.contains(ri.red(i))) chosen.push_back(i);
  for (std::size_t j = 1; j <= ri.b(); ++j) {
    const auto& deps = ri.dependents(j);
    if (std::none_of(deps.begin(), deps.end(), [&](Vertex w) { return c.contains(w); })) continue;
    auto nbrs = ri.source().red_neighbors(j);
    if (nbrs.empty()) throw Error("blue vertex without red neighbour");
    chosen.push_back(nbrs.front());
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  if (chosen.size() > ri.k())
    throw Error("extracted red set has " + std::to_string(chosen.size()) + " vertices, more than k");
  for (std::size_t j = 1; j <= ri.b(); ++j)
    if (std::none_of(chosen.begin(), chosen.end(), [&](std::size_t i) { return ri.source().adjacent(i, j); }))
      throw Error("extracted red set misses blue " + ri.source().blues[j - 1]);

  std::vector<std::string> out;
  for (auto i : chosen) out.push_back(ri.source().reds[i - 1]);
  return out;
}

bool check_connected_cover(const ReducedInstance& ri, const Config& c) {
  const auto members = c.members();
  if (members.size() <= 1) return true;
  const auto& h = ri.graph();
  std::vector<bool> seen(h.size(), false);
  std::deque<Vertex> queue{members.front()};
  seen[members.front()] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : h.neighbors(x)) {
      if (seen[y] || !c.contains(y)) continue;
      seen[y] = true;
      ++reached;
      queue.push_back(y);
    }
  }
  return reached == members.size();
}

NiceDefender::NiceDefender(const ReducedInstance& ri, std::vector<std::size_t> dom)
    : ri_(&ri), support_(nice_support(ri, std::move(dom))) {}

Config NiceDefender::initial() { return NiceCover{NiceKind::backup, ri_->dagger(), support_}.materialize(*ri_); }

std::optional<std::pair<MovePlan, Config>> NiceDefender::respond(const Config& c, Edge attacked) {
  auto nc = classify_cover(*ri_, c, support_);
  if (!nc) return std::nullopt;
  auto d = defend_nice(*ri_, *nc, attacked);
  return std::make_pair(d.plan, d.next.materialize(*ri_));
}

std::string NiceDefender::annotate(const Config& c) const {
  auto nc = classify_cover(*ri_, c, support_);
  return nc ? nc->label(*ri_) : "not-nice";
}

}  // namespace evc
