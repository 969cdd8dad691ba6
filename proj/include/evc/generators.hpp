#pragma once

#include <cstddef>
#include <vector>

#include "evc/cobipartite.hpp"
#include "evc/graph.hpp"
#include "evc/random.hpp"
#include "evc/reduction.hpp"

namespace evc {

/// G(n, p) with ids v0..v{n-1}.
Graph random_graph(std::size_t n, double edge_prob, Rng& rng);

/// G(n, p) resampled until connected.
Graph random_connected_graph(std::size_t n, double edge_prob, Rng& rng);

Graph complete_graph(std::size_t n);

/// All connected graphs on 1..max_n vertices, one per isomorphism class. max_n <= 6.
std::vector<Graph> connected_graphs_up_to(std::size_t max_n);

/// Reds r1.., blues b1.., each red-blue pair an edge with probability edge_prob.
RbdsInstance random_rbds(std::size_t r, std::size_t b, std::size_t k, double edge_prob, Rng& rng);

/// Every red-blue edge pattern for fixed r, b, k (bit i*b + j: red i+1 - blue j+1).
std::vector<RbdsInstance> all_rbds(std::size_t r, std::size_t b, std::size_t k);

/// Sides a0.., b0.., cross edges with probability cross_prob, normalized.
CobipInstance random_cobipartite(std::size_t p, std::size_t q, double cross_prob, Rng& rng);

}  // namespace evc
