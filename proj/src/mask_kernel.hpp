#pragma once

// Bit-mask primitives shared by the safe-set kernels (n <= 64).

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "evc/game.hpp"

namespace evc::detail {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline Mask to_mask(const Config& c) { return c.words().empty() ? 0 : c.words()[0]; }

inline Config from_mask(Mask m, std::size_t n) {
  Config c(n);
  while (m) {
    c.insert(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return c;
}

/// Canonical order for equal-size sets: the set holding the smallest element
/// of the symmetric difference comes first.
inline bool mask_less(Mask a, Mask b) {
  Mask d = a ^ b;
  if (!d) return false;
  return (a & (d & (~d + 1))) != 0;
}

struct Board {
  std::size_t n = 0;
  std::vector<Mask> closed;
  std::vector<Edge> edges;

  explicit Board(const Graph& g);

  Mask reach(Mask c) const {
    Mask r = 0;
    while (c) {
      r |= closed[std::countr_zero(c)];
      c &= c - 1;
    }
    return r;
  }
};

/// Perfect matching from guards on `from` to vertices `to` within closed
/// neighbourhoods (Kuhn's augmenting paths, smallest candidates first).
bool match(const Board& b, Mask from, Mask to, std::vector<Move>* assignment);

std::optional<MovePlan> legal(const Board& b, Mask c, Mask c2, Edge e);

/// Cheap necessary condition for `legal`: some orientation of e fits.
inline bool crossing_possible(Mask c, Mask c2, Edge e) {
  return ((c & bit(e.first)) && (c2 & bit(e.second))) || ((c & bit(e.second)) && (c2 & bit(e.first)));
}

/// Size-k covers in canonical order; throws BudgetExceeded past max_configs.
std::vector<Mask> enumerate_covers(const Board& b, std::size_t k, std::size_t max_configs);

}  // namespace evc::detail
