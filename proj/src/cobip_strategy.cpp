#include <algorithm>

#include "evc/cobipartite.hpp"

namespace evc {

namespace {

// One orientation of the instance: X and Y are the two cliques, x and y the
// unguarded vertices of an S_ij cover. Mirrored frames swap the roles.
struct Frame {
  const Graph& g;
  const std::vector<Vertex>& X;
  const std::vector<Vertex>& Y;
  Vertex x;
  Vertex y;

  Frame mirror() const { return {g, Y, X, y, x}; }

  bool in_x(Vertex v) const { return std::binary_search(X.begin(), X.end(), v); }
  bool adj(Vertex u, Vertex v) const { return g.has_edge(u, v); }

  template <class Pred>
  std::optional<Vertex> first(const std::vector<Vertex>& side, Pred pred) const {
    for (auto v : side)
      if (pred(v)) return v;
    return std::nullopt;
  }

  Vertex need(std::optional<Vertex> v, const char* what) const {
    if (!v) throw Error(std::string("cobipartite strategy: no vertex for ") + what);
    return *v;
  }

  bool has_cross(Vertex v, const std::vector<Vertex>& other) const {
    return std::any_of(other.begin(), other.end(), [&](Vertex o) { return adj(v, o); });
  }
};

using Moves = std::vector<Move>;

// Attack on an X-edge (x, r): r fills x. `pinned` must stay guarded; if it is
// r, another X guard refills it.
Moves refill_within(const Frame& f, Vertex r, std::optional<Vertex> pinned) {
  if (pinned && r == *pinned) {
    Vertex s = f.need(f.first(f.X, [&](Vertex v) { return v != *pinned && v != f.x; }), "pinned refill");
    return {{r, f.x}, {s, r}};
  }
  return {{r, f.x}};
}

// No cross edges (and the p = 1 isolated case): slide within the attacked side.
Moves no_cross(const Frame& f, Vertex u, Vertex v) {
  if (u == f.x || v == f.x) return {{u == f.x ? v : u, f.x}};
  return {{u == f.y ? v : u, f.y}};
}

// Exactly one cross edge (pa, pb); both ends stay guarded.
Moves one_edge(const Frame& f, Vertex u, Vertex v, Vertex pa, Vertex pb) {
  if (u == f.x || v == f.x) return refill_within(f, u == f.x ? v : u, pa);
  Frame m = f.mirror();
  return refill_within(m, u == f.y ? v : u, pb);
}

// Only src (in X) has neighbours across; src stays guarded, so x != src.
Moves one_source(const Frame& f, Vertex u, Vertex v, Vertex src) {
  const bool ux = f.in_x(u), vx = f.in_x(v);
  if (ux && vx) return refill_within(f, u == f.x ? v : u, src);
  if (!ux && !vx) return {{u == f.y ? v : u, f.y}};
  // cross edge (src, y)
  Vertex s = f.need(f.first(f.Y, [&](Vertex w) { return w != f.y && f.adj(src, w); }), "second neighbour of the source");
  return {{src, f.y}, {s, src}};
}

// No globals, at least two vertices with cross neighbours on each side.
Moves spread_side(const Frame& f, Vertex r) {
  // (r, x) inside X: r fills x, then y is kept or swapped for a friend of r.
  if (!f.adj(r, f.y)) return {{r, f.x}};
  Vertex s = f.need(f.first(f.Y, [&](Vertex w) { return !f.adj(r, w); }), "friend of r");
  return {{r, f.x}, {s, f.y}};
}

Moves spread_cross(const Frame& f, Vertex s) {
  // (x, s) with s in Y guarded: s crosses into x.
  Vertex r = f.need(f.first(f.X, [&](Vertex w) { return w != f.x && f.has_cross(w, f.Y); }), "second source");
  if (f.adj(r, s)) {
    if (!f.adj(r, f.y)) return {{s, f.x}, {r, s}};
    Vertex t = f.need(f.first(f.Y, [&](Vertex w) { return !f.adj(r, w); }), "friend of r");
    return {{s, f.x}, {r, s}, {t, f.y}};
  }
  if (f.adj(r, f.y)) return {{s, f.x}, {r, f.y}};
  Vertex t = f.need(f.first(f.Y, [&](Vertex w) { return w != s && f.adj(r, w); }), "neighbour of r");
  return {{s, f.x}, {t, f.y}, {r, t}};
}

Moves spread(const Frame& f, Vertex u, Vertex v) {
  const bool ux = f.in_x(u), vx = f.in_x(v);
  if (ux && vx) return spread_side(f, u == f.x ? v : u);
  if (!ux && !vx) return spread_side(f.mirror(), u == f.y ? v : u);
  Vertex xs = ux ? u : v, ys = ux ? v : u;
  if (xs == f.x) return spread_cross(f, ys);
  return spread_cross(f.mirror(), xs);
}

// p >= 3, B has globals and at least two non-globals. X = A, Y = B.
Moves some_globals(const Frame& f, const VertexSet& globals, Vertex u, Vertex v) {
  auto global = [&](Vertex w) { return globals.contains(w); };
  auto friends = [&](Vertex s, Vertex t) { return !f.adj(s, t); };
  const bool ux = f.in_x(u), vx = f.in_x(v);
  const Vertex g1 = f.need(f.first(f.Y, global), "global vertex");
  if (ux && vx) {
    Vertex r = u == f.x ? v : u;
    if (friends(r, f.y)) return {{r, f.x}};
    Vertex s = f.need(f.first(f.Y, [&](Vertex w) { return !global(w) && friends(r, w); }), "friend of r");
    return {{r, f.x}, {s, f.y}};
  }
  if (!ux && !vx) {
    Vertex s = u == f.y ? v : u;
    if (!global(s)) {
      if (friends(f.x, s)) return {{s, f.y}};
      Vertex r = f.need(f.first(f.X, [&](Vertex w) { return w != f.x && friends(w, s); }), "friend of s");
      return {{s, f.y}, {r, f.x}};
    }
    if (auto t = f.first(f.Y, [&](Vertex w) { return w != f.y && !global(w) && friends(f.x, w); }))
      return {{s, f.y}, {*t, s}};
    Vertex t = f.need(f.first(f.Y, [&](Vertex w) { return w != f.y && !global(w); }), "second non-global");
    Vertex r = f.need(f.first(f.X, [&](Vertex w) { return w != f.x && friends(w, t); }), "friend of t");
    return {{s, f.y}, {t, s}, {r, f.x}};
  }
  Vertex xs = ux ? u : v, ys = ux ? v : u;
  if (xs == f.x) {
    if (!global(ys)) {
      Vertex r = f.need(f.first(f.X, [&](Vertex w) { return w != f.x && friends(w, ys); }), "friend of s");
      return {{ys, f.x}, {g1, f.y}, {r, g1}};
    }
    if (auto r = f.first(f.X, [&](Vertex w) { return w != f.x && friends(w, f.y); })) return {{ys, f.x}, {*r, ys}};
    Vertex r = f.need(f.first(f.X, [&](Vertex w) { return w != f.x; }), "other A vertex");
    Vertex t = f.need(f.first(f.Y, [&](Vertex w) { return w != f.y && !global(w) && friends(r, w); }), "friend of r");
    return {{ys, f.x}, {t, f.y}, {r, ys}};
  }
  // (r, y) with r in X guarded
  Vertex r = xs;
  Vertex t = f.need(f.first(f.Y, [&](Vertex w) { return w != f.y && !global(w); }), "second non-global");
  if (friends(t, r)) return {{r, f.y}, {g1, f.x}, {t, g1}};
  if (friends(t, f.x)) return {{r, f.y}, {t, r}};
  Vertex s = f.need(f.first(f.X, [&](Vertex w) { return w != f.x && w != r && friends(w, t); }), "friend of t");
  return {{r, f.y}, {t, r}, {s, f.x}};
}

// p = 2 with both A vertices attached; parts are relative to the empty A vertex x.
Moves p2_parts(const Frame& f, bool partial, Vertex u, Vertex v) {
  const Vertex x = f.x, yy = f.X[0] == x ? f.X[1] : f.X[0];
  auto part = [&](Vertex w) {
    bool nx = f.adj(x, w), ny = f.adj(yy, w);
    return nx && ny ? 3 : nx ? 1 : ny ? 2 : 4;
  };
  auto pick = [&](std::initializer_list<int> parts, Vertex avoid) {
    return f.need(f.first(f.Y,
                          [&](Vertex w) {
                            return w != avoid && std::find(parts.begin(), parts.end(), part(w)) != parts.end();
                          }),
                  "vertex in the required part");
  };
  const Vertex bj = f.y;
  const bool ux = f.in_x(u), vx = f.in_x(v);
  if (ux && vx) {
    if (part(bj) == 4) return {{yy, x}};
    Vertex k = partial ? pick({1, 4}, bj) : pick({1}, bj);
    return {{yy, x}, {k, bj}};
  }
  if (!ux && !vx) {
    Vertex k = u == bj ? v : u;
    switch (part(k)) {
      case 2:
      case 4: return {{k, bj}};
      case 1: return {{k, bj}, {yy, x}};
      default: {
        if (auto r = f.first(f.Y, [&](Vertex w) { return w != bj && (part(w) == 2 || part(w) == 4); }))
          return {{k, bj}, {*r, k}};
        Vertex r = pick({1}, bj);
        return {{k, bj}, {r, k}, {yy, x}};
      }
    }
  }
  Vertex xs = ux ? u : v, ys = ux ? v : u;
  if (xs == x) {
    if (part(ys) == 1) {
      if (part(bj) == 2) return {{ys, x}, {yy, bj}};
      Vertex r = partial ? pick({2, 3}, bj) : pick({2}, bj);
      return {{ys, x}, {r, ys}, {yy, r}};
    }
    // part 3
    if (part(bj) == 4) return {{ys, x}, {yy, ys}};
    Vertex r = pick({1, 4}, bj);
    return {{ys, x}, {r, ys}, {yy, bj}};
  }
  // (yy, bj), bj in part 2
  if (auto k = f.first(f.Y, [&](Vertex w) { return part(w) == 1; })) return {{yy, bj}, {*k, x}};
  Vertex k = pick({4}, bj);
  Vertex r = pick({3}, bj);
  return {{yy, bj}, {r, yy}, {k, r}};
}

// C4-like p = q = 2: a_1 b_1 and a_2 b_2 are the only cross edges.
Moves rotate(const Frame& f, Vertex u, Vertex v) {
  const Vertex x = f.x, yy = f.X[0] == x ? f.X[1] : f.X[0];
  const Vertex bj = f.y, bx = f.Y[0] == bj ? f.Y[1] : f.Y[0];
  const Edge e = make_edge(u, v);
  if (e == make_edge(x, yy)) return {{yy, x}, {bx, bj}};
  if (e == make_edge(bx, bj)) return {{bx, bj}, {yy, x}};
  if (e == make_edge(x, bx)) return {{bx, x}, {yy, bj}};
  return {{yy, bj}, {bx, x}};
}

}  // namespace

CobipStrategy::CobipStrategy(CobipInstance inst) : inst_(std::move(inst)) {
  if (!inst_.normalized) throw Error("instance is not normalized");
  analysis_ = analyze(inst_);
  value_ = evc_cobip(inst_);
  const auto& g = inst_.g;
  if (value_.branch == CobipBranch::big_one_edge) {
    for (auto x : inst_.a)
      for (auto y : inst_.b)
        if (g.has_edge(x, y)) {
          pinned_a_ = x;
          pinned_b_ = y;
        }
  } else if (value_.branch == CobipBranch::big_one_a_source) {
    for (auto x : inst_.a)
      if (analysis_.friends[x].size() < inst_.q()) pinned_a_ = x;
  } else if (value_.branch == CobipBranch::big_one_b_source) {
    for (auto y : inst_.b)
      if (analysis_.friends[y].size() < inst_.p()) pinned_b_ = y;
  }
}

bool CobipStrategy::is_valid(const CoverTemplate& t) const {
  const auto& g = inst_.g;
  if (!uses_sij(value_.branch))
    return t.kind == CoverTemplate::Kind::all_but_one && t.a < g.size();
  if (t.kind != CoverTemplate::Kind::sij || t.a >= g.size() || t.b >= g.size()) return false;
  if (!inst_.in_a(t.a) || inst_.in_a(t.b) || g.has_edge(t.a, t.b)) return false;
  if (pinned_a_ && t.a == *pinned_a_) return false;
  if (pinned_b_ && t.b == *pinned_b_) return false;
  return true;
}

std::vector<CoverTemplate> CobipStrategy::valid_templates() const {
  std::vector<CoverTemplate> out;
  if (!uses_sij(value_.branch)) {
    for (Vertex v = 0; v < inst_.g.size(); ++v) out.push_back(CoverTemplate::all_but_one(v));
    return out;
  }
  for (auto x : inst_.a)
    for (auto y : inst_.b)
      if (is_valid(CoverTemplate::sij(x, y))) out.push_back(CoverTemplate::sij(x, y));
  return out;
}

CoverTemplate CobipStrategy::initial() const {
  auto all = valid_templates();
  if (all.empty()) throw Error("no valid cover template");
  return all.front();
}

std::optional<CoverTemplate> CobipStrategy::recognize(const Config& c) const {
  const auto& g = inst_.g;
  if (c.universe() != g.size()) return std::nullopt;
  auto missing = (g.full_set() - c).members();
  std::optional<CoverTemplate> t;
  if (missing.size() == 1) t = CoverTemplate::all_but_one(missing[0]);
  if (missing.size() == 2) {
    Vertex u = missing[0], v = missing[1];
    if (!inst_.in_a(u)) std::swap(u, v);
    t = CoverTemplate::sij(u, v);
  }
  if (t && is_valid(*t)) return t;
  return std::nullopt;
}

std::pair<MovePlan, CoverTemplate> CobipStrategy::defend(const CoverTemplate& t, Edge attacked) const {
  const auto& g = inst_.g;
  if (!is_valid(t)) throw Error("template " + t.label(g) + " is not valid for branch " + std::string(to_string(value_.branch)));
  attacked = make_edge(attacked.first, attacked.second);
  if (!g.has_edge(attacked.first, attacked.second)) throw GraphError("attacked pair is not an edge");
  const Config c = t.materialize(g);
  auto [u, v] = attacked;

  if (c.contains(u) && c.contains(v)) {
    auto [plan, next] = exchange_plan(c, attacked);
    return {plan, t};
  }
  if (t.kind == CoverTemplate::Kind::all_but_one) {
    const Vertex other = u == t.a ? v : u;
    MovePlan plan = plan_from_moves(c, std::vector<Move>{{other, t.a}}, attacked);
    return {plan, CoverTemplate::all_but_one(other)};
  }

  const Frame f{g, inst_.a, inst_.b, t.a, t.b};
  Moves moves;
  switch (value_.branch) {
    case CobipBranch::p1_q1_empty:
    case CobipBranch::p1_isolated:
    case CobipBranch::p2q2_no_cross:
    case CobipBranch::p2_no_cross:
    case CobipBranch::big_no_cross: moves = no_cross(f, u, v); break;
    case CobipBranch::p2q2_disjoint: moves = rotate(f, u, v); break;
    case CobipBranch::p2_b3_empty: moves = p2_parts(f, false, u, v); break;
    case CobipBranch::p2_b3_partial: moves = p2_parts(f, true, u, v); break;
    case CobipBranch::big_one_edge: moves = one_edge(f, u, v, *pinned_a_, *pinned_b_); break;
    case CobipBranch::big_some_globals: moves = some_globals(f, analysis_.globals_b, u, v); break;
    case CobipBranch::big_one_a_source: moves = one_source(f, u, v, *pinned_a_); break;
    case CobipBranch::big_one_b_source: moves = one_source(f.mirror(), u, v, *pinned_b_); break;
    case CobipBranch::big_spread: moves = spread(f, u, v); break;
    default: throw Error("branch has no S_ij strategy");
  }
  MovePlan plan = plan_from_moves(c, moves, attacked);
  auto next = recognize(plan.destination(g.size()));
  if (!next) throw Error("defence of " + g.format_edge(attacked) + " from " + t.label(g) + " left the template family");
  return {plan, *next};
}

Config CobipDefender::initial() { return s_->initial().materialize(s_->instance().g); }

std::optional<std::pair<MovePlan, Config>> CobipDefender::respond(const Config& c, Edge attacked) {
  auto t = s_->recognize(c);
  if (!t) return std::nullopt;
  auto [plan, next] = s_->defend(*t, attacked);
  return std::make_pair(plan, next.materialize(s_->instance().g));
}

std::string CobipDefender::annotate(const Config& c) const {
  auto t = s_->recognize(c);
  return t ? t->label(s_->instance().g) : "unrecognized";
}

}  // namespace evc
