#include "evc/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace evc {

bool is_vertex_cover(const Graph& g, const VertexSet& s) { return !first_uncovered_edge(g, s).has_value(); }

std::optional<Edge> first_uncovered_edge(const Graph& g, const VertexSet& s) {
  for (const auto& e : g.edges())
    if (!s.contains(e.first) && !s.contains(e.second)) return e;
  return std::nullopt;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!g.has_edge(m[i], m[j])) return false;
  return true;
}

namespace {

class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g) : g_(g), best_(g.full_set()), best_size_(g.size()) {}

  CoverResult run() {
    VertexSet alive = g_.full_set();
    VertexSet chosen = g_.empty_set();
    // the full vertex set is always a cover; tighten from there
    search(alive, chosen);
    return {best_size_, best_};
  }

 private:
  std::size_t live_degree(Vertex v, const VertexSet& alive) const {
    return (g_.closed_neighborhood(v) & alive).size() - 1;
  }

  // greedy maximal matching on the live subgraph; a valid lower bound
  std::size_t matching_bound(const VertexSet& alive) const {
    VertexSet free = alive;
    std::size_t size = 0;
    for (Vertex v : alive.members()) {
      if (!free.contains(v)) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (free.contains(w)) {
          free.erase(v);
          free.erase(w);
          ++size;
          break;
        }
      }
    }
    return size;
  }

  void search(VertexSet alive, VertexSet chosen) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v : alive.members()) {
        if (!alive.contains(v)) continue;
        auto d = live_degree(v, alive);
        if (d == 0) {
          alive.erase(v);
          changed = true;
        } else if (d == 1) {
          auto nb = (g_.closed_neighborhood(v) & alive);
          nb.erase(v);
          Vertex w = nb.members().front();
          chosen.insert(w);
          alive.erase(w);
          alive.erase(v);
          changed = true;
        }
      }
    }
    std::size_t count = chosen.size();
    if (count >= best_size_) return;
    if (alive.empty()) {
      best_size_ = count;
      best_ = chosen;
      return;
    }
    if (count + matching_bound(alive) >= best_size_) return;

    Vertex pivot = 0;
    std::size_t pivot_degree = 0;
    for (Vertex v : alive.members()) {
      auto d = live_degree(v, alive);
      if (d > pivot_degree) {
        pivot_degree = d;
        pivot = v;
      }
    }
    {
      VertexSet a = alive;
      VertexSet c = chosen;
      a.erase(pivot);
      c.insert(pivot);
      search(std::move(a), std::move(c));
    }
    {
      auto nb = g_.closed_neighborhood(pivot) & alive;
      nb.erase(pivot);
      VertexSet c = chosen | nb;
      VertexSet a = alive - nb;
      a.erase(pivot);
      search(std::move(a), std::move(c));
    }
  }

  const Graph& g_;
  VertexSet best_;
  std::size_t best_size_;
};

}  // namespace

CoverResult mvc_exact(const Graph& g, std::size_t limit) {
  if (g.size() > limit)
    throw LimitExceeded("mvc_exact: " + std::to_string(g.size()) + " vertices exceeds limit " +
                        std::to_string(limit));
  return CoverSearch(g).run();
}

CoverResult mvc_brute_force(const Graph& g) {
  const std::size_t n = g.size();
  if (n > 16) throw LimitExceeded("mvc_brute_force handles at most 16 vertices");
  std::uint32_t best_mask = (n == 0) ? 0u : ((1u << n) - 1);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) >= std::popcount(best_mask)) continue;
    bool ok = std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
      return ((mask >> e.first) & 1u) || ((mask >> e.second) & 1u);
    });
    if (ok) best_mask = mask;
  }
  VertexSet w(n);
  for (Vertex v = 0; v < n; ++v)
    if ((best_mask >> v) & 1u) w.insert(v);
  return {w.size(), w};
}

Matching max_matching(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(g.size());
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(g.size());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  Matching m;
  const auto null = boost::graph_traits<BoostGraph>::null_vertex();
  for (Vertex v = 0; v < g.size(); ++v)
    if (mate[v] != null && v < mate[v]) m.emplace_back(v, static_cast<Vertex>(mate[v]));
  return m;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> colour(g.size(), -1);
  for (Vertex s = 0; s < g.size(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

CoverResult mvc_bipartite(const Graph& g) {
  auto colour = two_coloring(g);
  if (!colour) throw GraphError("mvc_bipartite: graph is not bipartite");
  auto matching = max_matching(g);
  std::vector<std::optional<Vertex>> mate(g.size());
  for (auto [u, v] : matching) {
    mate[u] = v;
    mate[v] = u;
  }
  // alternating BFS from unmatched left vertices
  std::vector<bool> reached(g.size(), false);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < g.size(); ++v) {
    if ((*colour)[v] == 0 && !mate[v]) {
      reached[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if ((*colour)[v] == 0) {
      for (Vertex w : g.neighbors(v)) {
        if (!reached[w] && mate[v] != w) {
          reached[w] = true;
          queue.push_back(w);
        }
      }
    } else if (mate[v] && !reached[*mate[v]]) {
      reached[*mate[v]] = true;
      queue.push_back(*mate[v]);
    }
  }
  VertexSet cover(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    bool left = (*colour)[v] == 0;
    if ((left && !reached[v]) || (!left && reached[v])) cover.insert(v);
  }
  return {cover.size(), cover};
}

VertexSet two_matching_cover(const Graph& g) {
  VertexSet s(g.size());
  for (auto [u, v] : max_matching(g)) {
    s.insert(u);
    s.insert(v);
  }
  return s;
}

namespace {

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  constexpr auto unreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.size(), unreached);
  dist[source] = 0;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == unreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.size(); ++s) {
    for (auto d : bfs_distances(g, s)) {
      if (d == std::numeric_limits<std::size_t>::max()) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_connected(const Graph& g) { return g.size() <= 1 || diameter(g).has_value(); }

namespace {

// Hammer-Simeone degree-sequence characterisation of split graphs.
bool is_split(const Graph& g) {
  std::vector<std::size_t> deg;
  for (Vertex v = 0; v < g.size(); ++v) deg.push_back(g.degree(v));
  std::sort(deg.begin(), deg.end(), std::greater<>());
  std::size_t m = 0;
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] + 1 >= i + 1) m = i + 1;  // d_i >= i - 1 with 1-based i
  std::size_t head = std::accumulate(deg.begin(), deg.begin() + static_cast<std::ptrdiff_t>(m), std::size_t{0});
  std::size_t tail = std::accumulate(deg.begin() + static_cast<std::ptrdiff_t>(m), deg.end(), std::size_t{0});
  return head == m * (m - (m > 0 ? 1 : 0)) + tail;
}

}  // namespace

GraphClass classify(const Graph& g) {
  GraphClass c;
  c.bipartite = two_coloring(g).has_value();
  c.cobipartite = two_coloring(g.complement()).has_value();
  c.split = is_split(g);
  return c;
}

}  // namespace evc
