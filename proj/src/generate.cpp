#include "ghct/generate.hpp"

#include <algorithm>
#include <set>

namespace ghct {

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph clique_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw ContractError("cycle needs at least 3 nodes");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph random_gnm(int n, int m, Rng& rng) {
  if (n < 0 || m < 0) throw ContractError("random_gnm: negative size");
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (m > pairs) throw ContractError("random_gnm: more edges than node pairs");
  std::set<std::pair<int, int>> chosen;
  Graph g(n);
  while (static_cast<int>(chosen.size()) < m) {
    int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (chosen.insert({u, v}).second) g.add_edge(u, v);
  }
  return g;
}

Graph random_regular(int n, int r, Rng& rng) {
  if (n <= 0 || r < 0) throw ContractError("random_regular: bad size");
  if (r >= n) throw ContractError("random_regular: degree must be below node count");
  if ((static_cast<long long>(n) * r) % 2 != 0) throw ContractError("random_regular: n*r must be even");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(r), v);
    rng.shuffle(stubs);
    std::set<std::pair<int, int>> seen;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
      int u = std::min(stubs[i], stubs[i + 1]);
      int v = std::max(stubs[i], stubs[i + 1]);
      simple = u != v && seen.insert({u, v}).second;
    }
    if (!simple) continue;
    Graph g(n);
    for (const auto& [u, v] : seen) g.add_edge(u, v);
    return g;
  }
  throw ContractError("random_regular: no simple pairing found");
}

}  // namespace ghct
