#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "evc/algorithms.hpp"
#include "evc/game.hpp"
#include "evc/graph.hpp"
#include "evc/reduction.hpp"

namespace evc::oracle {

/// Tries every bijection c -> c2.
inline bool legal_by_bijection(const Graph& g, const Config& c, const Config& c2, Edge attacked) {
  auto from = c.members();
  auto to = c2.members();
  if (from.size() != to.size()) return false;
  std::sort(to.begin(), to.end());
  do {
    bool ok = true;
    bool crossed = false;
    for (std::size_t i = 0; i < from.size() && ok; ++i) {
      if (!g.closed_neighborhood(from[i]).contains(to[i])) ok = false;
      if (make_edge(from[i], to[i]) == attacked && from[i] != to[i]) crossed = true;
    }
    if (ok && crossed) return true;
  } while (std::next_permutation(to.begin(), to.end()));
  return false;
}

inline std::vector<std::uint64_t> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (static_cast<std::size_t>(__builtin_popcountll(m)) == k) out.push_back(m);
  return out;
}

inline Config to_config(const Graph& g, std::uint64_t m) {
  Config c = g.empty_set();
  for (std::size_t v = 0; v < g.size(); ++v)
    if ((m >> v) & 1u) c.insert(static_cast<Vertex>(v));
  return c;
}

/// Naive greatest fixed point over all k-subsets using the bijection oracle.
/// Returns the surviving subsets as masks. n <= 8.
inline std::vector<std::uint64_t> safe_masks(const Graph& g, std::size_t k) {
  std::vector<Config> sets;
  for (auto m : subsets_of_size(g.size(), k)) {
    Config c = to_config(g, m);
    if (is_vertex_cover(g, c)) sets.push_back(c);
  }
  std::vector<bool> alive(sets.size(), true);
  std::vector<std::vector<std::vector<std::size_t>>> succ(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (auto e : g.edges()) {
      std::vector<std::size_t> s;
      for (std::size_t j = 0; j < sets.size(); ++j)
        if (legal_by_bijection(g, sets[i], sets[j], e)) s.push_back(j);
      succ[i].push_back(std::move(s));
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (!alive[i]) continue;
      for (const auto& s : succ[i]) {
        if (std::none_of(s.begin(), s.end(), [&](std::size_t j) { return alive[j]; })) {
          alive[i] = false;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!alive[i]) continue;
    std::uint64_t m = 0;
    for (auto v : sets[i].members()) m |= std::uint64_t{1} << v;
    out.push_back(m);
  }
  return out;
}

/// Smallest k with a nonempty naive safe set, searching k = 0..n.
inline std::size_t evc_naive(const Graph& g) {
  for (std::size_t k = 0; k <= g.size(); ++k)
    if (!safe_masks(g, k).empty()) return k;
  return g.size();
}

/// Largest matching by trying every edge subset. edge_count <= 20.
inline std::size_t matching_number(const Graph& g) {
  const auto& es = g.edges();
  std::size_t best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << es.size()); ++m) {
    std::uint64_t used = 0;
    bool ok = true;
    std::size_t count = 0;
    for (std::size_t i = 0; i < es.size() && ok; ++i) {
      if (!((m >> i) & 1u)) continue;
      std::uint64_t bits = (std::uint64_t{1} << es[i].first) | (std::uint64_t{1} << es[i].second);
      if (used & bits) ok = false;
      used |= bits;
      ++count;
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

/// Smallest vertex cover size by trying every subset. n <= 20.
inline std::size_t cover_number(const Graph& g) {
  std::size_t best = g.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.size()); ++m) {
    auto size = static_cast<std::size_t>(__builtin_popcountll(m));
    if (size >= best) continue;
    bool ok = std::all_of(g.edges().begin(), g.edges().end(),
                          [&](Edge e) { return ((m >> e.first) & 1u) || ((m >> e.second) & 1u); });
    if (ok) best = size;
  }
  return best;
}

/// Red-blue domination by trying every red subset of size <= k.
inline bool rbds_brute(const RbdsInstance& inst) {
  const std::size_t r = inst.r();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << r); ++m) {
    if (static_cast<std::size_t>(__builtin_popcountll(m)) > inst.k) continue;
    bool all = true;
    for (std::size_t j = 1; j <= inst.b() && all; ++j) {
      bool hit = false;
      for (std::size_t i = 1; i <= r; ++i)
        if (((m >> (i - 1)) & 1u) && inst.adjacent(i, j)) hit = true;
      all = hit;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace evc::oracle
