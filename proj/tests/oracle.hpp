#pragma once

// Reference computations used by the tests. They share nothing with the
// library beyond the Graph container: dense Edmonds-Karp instead of Dinic,
// explicit subset enumeration for cuts, and naive tree walks.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include "ghct/cuttree.hpp"
#include "ghct/graph.hpp"

namespace oracle {

using ghct::Capacity;
using ghct::Graph;
using ghct::NodeId;

using Matrix = std::vector<std::vector<Capacity>>;

// Dense residual matrix: undirected edges add capacity both ways.
inline Matrix capacity_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.node_count());
  Matrix c(n, std::vector<Capacity>(n, 0));
  for (const auto& e : g.edges()) {
    c[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] += e.cap;
    if (!e.directed) c[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] += e.cap;
  }
  return c;
}

inline Capacity edmonds_karp(Matrix c, int s, int t) {
  const int n = static_cast<int>(c.size());
  Capacity total = 0;
  while (true) {
    std::vector<int> prev(static_cast<std::size_t>(n), -1);
    prev[static_cast<std::size_t>(s)] = s;
    std::deque<int> q{s};
    while (!q.empty() && prev[static_cast<std::size_t>(t)] < 0) {
      const int x = q.front();
      q.pop_front();
      for (int y = 0; y < n; ++y) {
        if (prev[static_cast<std::size_t>(y)] < 0 && c[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] > 0) {
          prev[static_cast<std::size_t>(y)] = x;
          q.push_back(y);
        }
      }
    }
    if (prev[static_cast<std::size_t>(t)] < 0) return total;
    Capacity push = std::numeric_limits<Capacity>::max();
    for (int y = t; y != s; y = prev[static_cast<std::size_t>(y)]) {
      push = std::min(push, c[static_cast<std::size_t>(prev[static_cast<std::size_t>(y)])][static_cast<std::size_t>(y)]);
    }
    for (int y = t; y != s; y = prev[static_cast<std::size_t>(y)]) {
      const auto x = static_cast<std::size_t>(prev[static_cast<std::size_t>(y)]);
      c[x][static_cast<std::size_t>(y)] -= push;
      c[static_cast<std::size_t>(y)][x] += push;
    }
    total += push;
  }
}

inline Capacity max_flow(const Graph& g, NodeId s, NodeId t) { return edmonds_karp(capacity_matrix(g), s, t); }

inline Matrix all_pairs(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.node_count());
  Matrix m(n, std::vector<Capacity>(n, 0));
  const Matrix c = capacity_matrix(g);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      m[s][t] = m[t][s] = edmonds_karp(c, static_cast<int>(s), static_cast<int>(t));
    }
  }
  return m;
}

// Minimum s-t cut by enumerating every node subset; n <= 20.
inline Capacity min_cut_bruteforce(const Graph& g, NodeId s, NodeId t) {
  const int n = g.node_count();
  Capacity best = std::numeric_limits<Capacity>::max();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> s & 1u) || (mask >> t & 1u)) continue;
    Capacity cut = 0;
    for (const auto& e : g.edges()) {
      const bool a = mask >> e.u & 1u, b = mask >> e.v & 1u;
      if (a && !b) cut += e.cap;
      if (!a && b && !e.directed) cut += e.cap;
    }
    best = std::min(best, cut);
  }
  return best;
}

// Node-capacitated max-flow between s and t: each other capacitated node v
// becomes v_in -> v_out with its capacity; terminals are left uncapacitated.
inline Capacity node_capacitated_flow(const Graph& g, NodeId s, NodeId t) {
  const int n = g.node_count();
  Capacity inf = 1;
  for (const auto& e : g.edges()) inf += e.cap;
  for (NodeId v = 0; v < n; ++v) inf += g.node_cap(v).value_or(0);
  const auto N = static_cast<std::size_t>(2 * n);
  Matrix c(N, std::vector<Capacity>(N, 0));
  auto in = [](NodeId v) { return static_cast<std::size_t>(2 * v); };
  auto out = [](NodeId v) { return static_cast<std::size_t>(2 * v + 1); };
  for (NodeId v = 0; v < n; ++v) {
    const auto cap = g.node_cap(v);
    c[in(v)][out(v)] = (v == s || v == t || !cap) ? inf : *cap;
  }
  for (const auto& e : g.edges()) {
    c[out(e.u)][in(e.v)] += e.cap;
    if (!e.directed) c[out(e.v)][in(e.u)] += e.cap;
  }
  return edmonds_karp(std::move(c), static_cast<int>(out(s)), static_cast<int>(in(t)));
}

// Path minimum between a and b, found by walking parent pointers.
inline Capacity tree_path_min(const ghct::CutTree& t, NodeId a, NodeId b) {
  const auto& par = t.parent();
  const auto& w = t.weight();
  std::vector<char> anc(par.size(), 0);
  for (NodeId x = a; x >= 0; x = par[static_cast<std::size_t>(x)]) anc[static_cast<std::size_t>(x)] = 1;
  NodeId lca = b;
  while (!anc[static_cast<std::size_t>(lca)]) lca = par[static_cast<std::size_t>(lca)];
  Capacity best = std::numeric_limits<Capacity>::max();
  for (NodeId x = a; x != lca; x = par[static_cast<std::size_t>(x)]) best = std::min(best, w[static_cast<std::size_t>(x)]);
  for (NodeId x = b; x != lca; x = par[static_cast<std::size_t>(x)]) best = std::min(best, w[static_cast<std::size_t>(x)]);
  return best;
}

inline Matrix tree_matrix(const ghct::CutTree& t) {
  const auto n = static_cast<std::size_t>(t.node_count());
  Matrix m(n, std::vector<Capacity>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      m[a][b] = m[b][a] = tree_path_min(t, static_cast<NodeId>(a), static_cast<NodeId>(b));
    }
  }
  return m;
}

// Valid cut tree: every tree edge's weight equals the capacity of the cut
// it induces in g, and the all-pairs matrix equals the flow matrix.
inline bool is_cut_equivalent(const Graph& g, const ghct::CutTree& t, const Matrix& flows) {
  if (t.node_count() != g.node_count()) return false;
  for (NodeId v = 0; v < t.node_count(); ++v) {
    if (t.parent()[static_cast<std::size_t>(v)] < 0) continue;
    std::vector<char> side(static_cast<std::size_t>(g.node_count()), 0);
    for (NodeId x = 0; x < g.node_count(); ++x) {
      for (NodeId y = x; y >= 0; y = t.parent()[static_cast<std::size_t>(y)]) {
        if (y == v) {
          side[static_cast<std::size_t>(x)] = 1;
          break;
        }
      }
    }
    Capacity cut = 0;
    for (const auto& e : g.edges()) {
      if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) cut += e.cap;
    }
    if (cut != t.weight()[static_cast<std::size_t>(v)]) return false;
  }
  return tree_matrix(t) == flows;
}

}  // namespace oracle

namespace oracle {

// All arborescences of a small digraph rooted at `root` that reach every
// node below `required` (other nodes are optional), as arc index lists.
// Exponential in the arc count.
inline std::vector<std::vector<int>> spanning_arborescences(const Graph& d, NodeId root, int required) {
  const int n = d.node_count();
  const int m = d.edge_count();
  std::vector<std::vector<int>> found;
  std::vector<int> chosen;
  std::vector<char> present(static_cast<std::size_t>(n), 0);
  present[static_cast<std::size_t>(root)] = 1;
  auto valid = [&]() {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<NodeId> stack{root};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      for (int a : chosen) {
        const auto& e = d.edge(a);
        if (e.u == x && !seen[static_cast<std::size_t>(e.v)]) {
          seen[static_cast<std::size_t>(e.v)] = 1;
          stack.push_back(e.v);
        }
      }
    }
    for (NodeId v = 0; v < n; ++v) {
      if (present[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)]) return false;
    }
    // A leaf outside the required set adds nothing; skip those duplicates.
    for (int a : chosen) {
      const NodeId v = d.edge(a).v;
      if (v < required) continue;
      bool has_child = false;
      for (int b : chosen) has_child = has_child || d.edge(b).u == v;
      if (!has_child) return false;
    }
    return true;
  };
  // One incoming arc per required node; optional nodes may also have none.
  auto rec = [&](auto&& self, NodeId v) -> void {
    if (v == n) {
      if (valid()) found.push_back(chosen);
      return;
    }
    if (v == root) {
      self(self, v + 1);
      return;
    }
    if (v >= required) self(self, v + 1);
    present[static_cast<std::size_t>(v)] = 1;
    for (int a = 0; a < m; ++a) {
      if (d.edge(a).v != v) continue;
      chosen.push_back(a);
      self(self, v + 1);
      chosen.pop_back();
    }
    present[static_cast<std::size_t>(v)] = 0;
  };
  rec(rec, 0);
  return found;
}

}  // namespace oracle
