#include <algorithm>
#include <array>
#include <atomic>

#include "evc/algorithms.hpp"
#include "evc/game.hpp"
#include "mask_kernel.hpp"

namespace evc {
namespace detail {

Board::Board(const Graph& g) : n(g.size()), edges(g.edges()) {
  if (n > kEngineVertexLimit) throw LimitExceeded("exact engine supports at most 64 vertices");
  closed.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    Mask row = bit(v);
    for (Vertex w : g.neighbors(v)) row |= bit(w);
    closed[v] = row;
  }
}

namespace {

struct Kuhn {
  const Board& board;
  Mask to;
  std::array<int, 64> owner{};
  Mask seen = 0;

  bool augment(int x) {
    Mask cand = board.closed[static_cast<std::size_t>(x)] & to & ~seen;
    while (cand) {
      int y = std::countr_zero(cand);
      cand &= cand - 1;
      seen |= bit(static_cast<Vertex>(y));
      if (owner[static_cast<std::size_t>(y)] < 0 || augment(owner[static_cast<std::size_t>(y)])) {
        owner[static_cast<std::size_t>(y)] = x;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

bool match(const Board& b, Mask from, Mask to, std::vector<Move>* assignment) {
  if (std::popcount(from) != std::popcount(to)) return false;
  if ((b.reach(from) & to) != to) return false;
  Kuhn k{b, to};
  k.owner.fill(-1);
  for (Mask rest = from; rest; rest &= rest - 1) {
    k.seen = 0;
    if (!k.augment(std::countr_zero(rest))) return false;
  }
  if (assignment) {
    for (Mask rest = to; rest; rest &= rest - 1) {
      int y = std::countr_zero(rest);
      assignment->push_back({static_cast<Vertex>(k.owner[static_cast<std::size_t>(y)]), static_cast<Vertex>(y)});
    }
  }
  return true;
}

std::optional<MovePlan> legal(const Board& b, Mask c, Mask c2, Edge e) {
  const Edge orientations[2] = {e, {e.second, e.first}};
  for (auto [u, v] : orientations) {
    if (!(c & bit(u)) || !(c2 & bit(v))) continue;
    MovePlan plan;
    if (!match(b, c & ~bit(u), c2 & ~bit(v), &plan.assignment)) continue;
    plan.assignment.push_back({u, v});
    std::sort(plan.assignment.begin(), plan.assignment.end());
    plan.crossing = {u, v};
    return plan;
  }
  return std::nullopt;
}

namespace {

class CoverEnumerator {
 public:
  CoverEnumerator(const Board& b, std::size_t k, std::size_t cap) : b_(b), k_(k), cap_(cap) {}

  std::vector<Mask> run() {
    if (k_ <= b_.n) visit(0, 0, 0);
    return std::move(out_);
  }

 private:
  bool covers(Mask chosen) const {
    for (auto [u, v] : b_.edges)
      if (!(chosen & bit(u)) && !(chosen & bit(v))) return false;
    return true;
  }

  void emit(Mask m) {
    if (out_.size() >= cap_)
      throw BudgetExceeded("more than " + std::to_string(cap_) + " vertex covers of size " + std::to_string(k_));
    out_.push_back(m);
  }

  void visit(std::size_t v, Mask chosen, Mask forced) {
    const auto count = static_cast<std::size_t>(std::popcount(chosen));
    if (count == k_) {
      if (covers(chosen)) emit(chosen);
      return;
    }
    if (v == b_.n || count + (b_.n - v) < k_) return;
    if (count + static_cast<std::size_t>(std::popcount(forced & ~chosen)) > k_) return;
    const Mask vb = bit(static_cast<Vertex>(v));
    visit(v + 1, chosen | vb, forced);
    if (forced & vb) return;
    const Mask lower = vb - 1;
    const Mask nbrs = b_.closed[v] & ~vb;
    if (nbrs & lower & ~chosen) return;  // an earlier neighbour was left out
    visit(v + 1, chosen, forced | (nbrs & ~lower));
  }

  const Board& b_;
  std::size_t k_;
  std::size_t cap_;
  std::vector<Mask> out_;
};

}  // namespace

std::vector<Mask> enumerate_covers(const Board& b, std::size_t k, std::size_t max_configs) {
  return CoverEnumerator(b, k, max_configs).run();
}

}  // namespace detail

using detail::Mask;

constexpr std::uint32_t kNoPolicy = UINT32_MAX;

struct SafeSetBuilder {
  static SafeSet start(const Graph& g, std::size_t k, const detail::Board& board, const Budget& budget) {
    SafeSet s;
    s.graph_ = std::make_shared<const Graph>(g);
    s.k_ = k;
    s.covers_ = detail::enumerate_covers(board, k, budget.max_configs);
    s.alive_.assign(s.covers_.size(), 1);
    s.killer_edge_.assign(s.covers_.size(), 0);
    s.elimination_sweep_.assign(s.covers_.size(), 0);
    return s;
  }

  static void finish(SafeSet& s, std::vector<std::uint32_t> policy) {
    s.policy_ = std::move(policy);
    s.member_count_ = static_cast<std::size_t>(std::count(s.alive_.begin(), s.alive_.end(), 1));
  }

  // Same sweeps as the reference, but each (cover, edge) pair keeps a cursor
  // into the cover list. Candidates behind the cursor are illegal or dead,
  // both permanent, so the search resumes instead of restarting and the final
  // cursors are exactly the reference policy.
  static SafeSet parallel(const Graph& g, std::size_t k, const Budget& budget) {
    const detail::Board board(g);
    SafeSet s = start(g, k, board, budget);
    const auto& covers = s.covers_;
    const std::size_t count = covers.size();
    const std::size_t m = board.edges.size();
    const auto n_covers = static_cast<std::int64_t>(count);

    std::vector<std::uint32_t> cursor(count * m, 0);
    std::vector<std::uint8_t> confirmed(count * m, 0);  // cursor points at a known legal answer
    std::uint64_t tests = 0;

    std::size_t sweep = 0;
    while (true) {
      ++sweep;
      std::vector<std::uint8_t> dies(count, 0);
      std::vector<std::uint32_t> killer(count, 0);
      std::atomic<std::uint64_t> sweep_tests{0};
      std::atomic<bool> over{false};
#pragma omp parallel for schedule(dynamic, 16)
      for (std::int64_t ii = 0; ii < n_covers; ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        if (!s.alive_[i] || over.load(std::memory_order_relaxed)) continue;
        const Mask c = covers[i];
        const Mask reach = board.reach(c);
        std::uint64_t local = 0;
        for (std::size_t e = 0; e < m; ++e) {
          auto& j = cursor[i * m + e];
          auto& known = confirmed[i * m + e];
          if (known && s.alive_[j]) continue;
          if (known) {
            known = 0;
            ++j;
          }
          for (; j < count; ++j) {
            if (!s.alive_[j]) continue;
            const Mask c2 = covers[j];
            if ((c2 & reach) != c2 || !detail::crossing_possible(c, c2, board.edges[e])) continue;
            ++local;  // only matching runs count against the budget
            if (detail::legal(board, c, c2, board.edges[e])) break;
          }
          if (j == count) {
            dies[i] = 1;
            killer[i] = static_cast<std::uint32_t>(e);
            break;
          }
          known = 1;
        }
        if (tests + sweep_tests.fetch_add(local, std::memory_order_relaxed) + local > budget.max_transition_tests)
          over.store(true, std::memory_order_relaxed);
      }
      // the sweep total does not depend on scheduling, so this is deterministic
      if (over.load()) throw BudgetExceeded("transition test budget exceeded");
      tests += sweep_tests.load();

      bool any = false;
      for (std::size_t i = 0; i < count; ++i) {
        if (!dies[i]) continue;
        any = true;
        s.alive_[i] = 0;
        s.killer_edge_[i] = killer[i];
        s.elimination_sweep_[i] = static_cast<std::uint32_t>(sweep);
      }
      if (!any) break;
    }
    s.sweeps_ = sweep;

    std::vector<std::uint32_t> policy(count * m, kNoPolicy);
    for (std::size_t i = 0; i < count; ++i)
      if (s.alive_[i])
        for (std::size_t e = 0; e < m; ++e) policy[i * m + e] = cursor[i * m + e];
    finish(s, std::move(policy));
    return s;
  }

  static SafeSet reference(const Graph& g, std::size_t k, const Budget& budget) {
    const detail::Board board(g);
    SafeSet s = start(g, k, board, budget);
    const auto& covers = s.covers_;
    const std::size_t count = covers.size();
    const std::size_t m = board.edges.size();
    std::uint64_t tests = 0;
    auto first_answer = [&](std::size_t i, std::size_t e) -> std::optional<std::uint32_t> {
      for (std::size_t j = 0; j < count; ++j) {
        if (!s.alive_[j]) continue;
        if (++tests > budget.max_transition_tests) throw BudgetExceeded("transition test budget exceeded");
        if (detail::legal(board, covers[i], covers[j], board.edges[e])) return static_cast<std::uint32_t>(j);
      }
      return std::nullopt;
    };

    std::size_t sweep = 0;
    while (true) {
      ++sweep;
      std::vector<std::pair<std::size_t, std::uint32_t>> doomed;
      for (std::size_t i = 0; i < count; ++i) {
        if (!s.alive_[i]) continue;
        for (std::size_t e = 0; e < m; ++e) {
          if (!first_answer(i, e)) {
            doomed.emplace_back(i, static_cast<std::uint32_t>(e));
            break;
          }
        }
      }
      if (doomed.empty()) break;
      for (auto [i, e] : doomed) {
        s.alive_[i] = 0;
        s.killer_edge_[i] = e;
        s.elimination_sweep_[i] = static_cast<std::uint32_t>(sweep);
      }
    }
    s.sweeps_ = sweep;

    std::vector<std::uint32_t> policy(count * m, kNoPolicy);
    for (std::size_t i = 0; i < count; ++i) {
      if (!s.alive_[i]) continue;
      for (std::size_t e = 0; e < m; ++e) policy[i * m + e] = *first_answer(i, e);
    }
    finish(s, std::move(policy));
    return s;
  }
};

SafeSet safe_set(const Graph& g, std::size_t k, const Budget& budget) { return SafeSetBuilder::parallel(g, k, budget); }

SafeSet safe_set_reference(const Graph& g, std::size_t k, const Budget& budget) {
  return SafeSetBuilder::reference(g, k, budget);
}

std::optional<std::size_t> SafeSet::index_of(std::uint64_t mask) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(), mask, detail::mask_less);
  if (it == covers_.end() || *it != mask) return std::nullopt;
  return static_cast<std::size_t>(it - covers_.begin());
}

std::vector<Config> SafeSet::members() const {
  std::vector<Config> out;
  for (std::size_t i = 0; i < covers_.size(); ++i)
    if (alive_[i]) out.push_back(detail::from_mask(covers_[i], graph_->size()));
  return out;
}

bool SafeSet::contains(const Config& c) const {
  if (c.size() != k_ || c.universe() != graph_->size()) return false;
  auto i = index_of(detail::to_mask(c));
  return i && alive_[*i];
}

std::pair<MovePlan, Config> SafeSet::defend(const Config& c, Edge attacked) const {
  if (!graph_->has_edge(attacked.first, attacked.second)) throw GraphError("attacked pair is not an edge");
  auto i = c.size() == k_ ? index_of(detail::to_mask(c)) : std::nullopt;
  if (!i || !alive_[*i]) throw Error("configuration {" + graph_->format_set(c) + "} is not safe");
  auto e = *graph_->edge_index(attacked.first, attacked.second);
  auto j = policy_[*i * graph_->edge_count() + e];
  detail::Board board(*graph_);
  auto plan = detail::legal(board, covers_[*i], covers_[j], graph_->edges()[e]);
  return {*plan, detail::from_mask(covers_[j], graph_->size())};
}

std::optional<Edge> SafeSet::killer(const Config& c) const {
  if (c.size() != k_ || c.universe() != graph_->size()) return std::nullopt;
  auto i = index_of(detail::to_mask(c));
  if (!i || alive_[*i]) return std::nullopt;
  return graph_->edges()[killer_edge_[*i]];
}

std::optional<std::size_t> SafeSet::elimination_sweep(const Config& c) const {
  if (c.size() != k_ || c.universe() != graph_->size()) return std::nullopt;
  auto i = index_of(detail::to_mask(c));
  if (!i || alive_[*i]) return std::nullopt;
  return elimination_sweep_[*i];
}

bool SafeSet::operator==(const SafeSet& o) const {
  return k_ == o.k_ && covers_ == o.covers_ && alive_ == o.alive_ && policy_ == o.policy_ &&
         elimination_sweep_ == o.elimination_sweep_ &&
         [&] {
           for (std::size_t i = 0; i < covers_.size(); ++i)
             if (!alive_[i] && killer_edge_[i] != o.killer_edge_[i]) return false;
           return true;
         }();
}

EvcResult evc_exact(const Graph& g, std::optional<std::size_t> k_max, const Budget& budget) {
  if (g.size() > kEngineVertexLimit) throw LimitExceeded("evc_exact supports at most 64 vertices");
  EvcResult r;
  r.mvc = mvc_exact(g, kEngineVertexLimit).size;
  std::size_t hi = std::min(2 * r.mvc, g.size());
  if (k_max) hi = std::min(hi, *k_max);
  for (std::size_t k = r.mvc; k <= hi; ++k) {
    auto s = safe_set(g, k, budget);
    bool win = !s.empty();
    r.win_profile[k] = win;
    if (win && !r.evc) {
      r.evc = k;
      r.safe = std::move(s);
    }
  }
  for (auto it = r.win_profile.begin(); it != r.win_profile.end(); ++it) {
    auto next = std::next(it);
    if (next != r.win_profile.end() && it->second && !next->second)
      r.warnings.push_back("non-monotone win profile: win at k=" + std::to_string(it->first) + ", loss at k=" +
                           std::to_string(next->first));
  }
  return r;
}

}  // namespace evc
