#pragma once

#include "ghct/graph.hpp"
#include "ghct/rng.hpp"

namespace ghct {

Graph path_graph(int n);
Graph star_graph(int leaves);  // center 0
Graph clique_graph(int n);
Graph cycle_graph(int n);

/// Uniform simple graph with exactly m distinct edges.
Graph random_gnm(int n, int m, Rng& rng);

/// Simple r-regular graph by the configuration model with restarts.
/// Throws ContractError when n*r is odd or r >= n.
Graph random_regular(int n, int r, Rng& rng);

}  // namespace ghct
