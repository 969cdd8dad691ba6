#include "evc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "evc/algorithms.hpp"

namespace evc {

Graph random_graph(std::size_t n, double edge_prob, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.coin(edge_prob)) edges.emplace_back(i, j);
  return Graph::with_default_ids(n, edges);
}

Graph random_connected_graph(std::size_t n, double edge_prob, Rng& rng) {
  if (n > 1 && edge_prob <= 0.0) throw Error("edge probability must be positive for connected graphs");
  while (true) {
    Graph g = random_graph(n, edge_prob, rng);
    if (is_connected(g)) return g;
  }
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::with_default_ids(n, edges);
}

std::vector<Graph> connected_graphs_up_to(std::size_t max_n) {
  if (max_n > 6) throw LimitExceeded("connected_graphs_up_to supports max_n <= 6");
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<std::vector<std::size_t>> slot_of(n, std::vector<std::size_t>(n));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      slot_of[slots[s].first][slots[s].second] = s;
      slot_of[slots[s].second][slots[s].first] = s;
    }
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
      std::uint32_t canon = mask;
      for (const auto& pm : perms) {
        std::uint32_t image = 0;
        for (std::size_t s = 0; s < slots.size(); ++s)
          if ((mask >> s) & 1u) image |= std::uint32_t{1} << slot_of[pm[slots[s].first]][pm[slots[s].second]];
        canon = std::min(canon, image);
      }
      if (!seen.insert(canon).second) continue;
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((canon >> s) & 1u) edges.push_back(slots[s]);
      Graph g = Graph::with_default_ids(n, edges);
      if (is_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

namespace {

RbdsInstance rbds_shell(std::size_t r, std::size_t b, std::size_t k) {
  RbdsInstance inst;
  for (std::size_t i = 1; i <= r; ++i) inst.reds.push_back("r" + std::to_string(i));
  for (std::size_t j = 1; j <= b; ++j) inst.blues.push_back("b" + std::to_string(j));
  inst.k = k;
  return inst;
}

}  // namespace

RbdsInstance random_rbds(std::size_t r, std::size_t b, std::size_t k, double edge_prob, Rng& rng) {
  auto inst = rbds_shell(r, b, k);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (rng.coin(edge_prob)) inst.edges.emplace_back(inst.reds[i], inst.blues[j]);
  return inst;
}

std::vector<RbdsInstance> all_rbds(std::size_t r, std::size_t b, std::size_t k) {
  if (r * b > 20) throw LimitExceeded("all_rbds supports r * b <= 20");
  std::vector<RbdsInstance> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (r * b)); ++mask) {
    auto inst = rbds_shell(r, b, k);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < b; ++j)
        if ((mask >> (i * b + j)) & 1u) inst.edges.emplace_back(inst.reds[i], inst.blues[j]);
    out.push_back(std::move(inst));
  }
  return out;
}

CobipInstance random_cobipartite(std::size_t p, std::size_t q, double cross_prob, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> cross;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j)
      if (rng.coin(cross_prob)) cross.emplace_back(i, j);
  Graph g = cobipartite_graph(p, q, cross);
  VertexSet a = g.empty_set(), b = g.empty_set();
  for (std::size_t i = 0; i < p; ++i) a.insert(g.at("a" + std::to_string(i)));
  for (std::size_t j = 0; j < q; ++j) b.insert(g.at("b" + std::to_string(j)));
  return normalize(g, a, b);
}

}  // namespace evc
