#include "ghct/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

#include "ghct/maxflow.hpp"
#include "ghct/rng.hpp"

namespace ghct {

namespace {

using Adjacency = std::vector<std::vector<std::pair<NodeId, Capacity>>>;

inline std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// Sizes of the components of tree[S] - c, for every c in S; returns the
// smallest-id node whose largest remaining component has at most |S|/2 nodes.
NodeId find_centroid(const Adjacency& adj, const std::vector<NodeId>& nodes,
                     const std::vector<int>& label, int comp) {
  const int total = static_cast<int>(nodes.size());
  const NodeId root = *std::min_element(nodes.begin(), nodes.end());
  std::vector<NodeId> order{root};
  std::vector<NodeId> parent_of(adj.size(), -1);
  parent_of[idx(root)] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId v = order[i];
    for (auto [w, c] : adj[idx(v)]) {
      if (label[idx(w)] != comp || parent_of[idx(w)] != -1) continue;
      parent_of[idx(w)] = v;
      order.push_back(w);
    }
  }
  std::vector<int> size(adj.size(), 1);
  std::vector<int> heaviest(adj.size(), 0);
  for (std::size_t i = order.size(); i-- > 1;) {
    NodeId v = order[i];
    size[idx(parent_of[idx(v)])] += size[idx(v)];
    heaviest[idx(parent_of[idx(v)])] = std::max(heaviest[idx(parent_of[idx(v)])], size[idx(v)]);
  }
  NodeId best = -1;
  for (NodeId v : order) {
    int worst = std::max(heaviest[idx(v)], total - size[idx(v)]);
    if (2 * worst <= total && (best == -1 || v < best)) best = v;
  }
  return best;
}

bool is_centroid(const Adjacency& adj, const std::vector<int>& label, int comp,
                 int comp_size, NodeId c) {
  std::vector<char> seen(adj.size(), 0);
  seen[idx(c)] = 1;
  for (auto [u, w] : adj[idx(c)]) {
    if (label[idx(u)] != comp) continue;
    int count = 0;
    std::vector<NodeId> stack{u};
    seen[idx(u)] = 1;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      ++count;
      for (auto [x, cw] : adj[idx(v)]) {
        if (label[idx(x)] == comp && !seen[idx(x)]) {
          seen[idx(x)] = 1;
          stack.push_back(x);
        }
      }
    }
    if (2 * count > comp_size) return false;
  }
  return true;
}

// What an expansion of centroid c inside super-node S must look like.
struct Layout {
  std::vector<std::vector<NodeId>> blocks;  // S sorted, then outside components
  std::vector<NodeId> neighbors;            // u_k, ascending
  std::vector<Capacity> weights;            // tree weight of (c, u_k)
  std::vector<std::vector<NodeId>> sides;   // C'_k in original ids
  std::vector<int> aux_label;               // per aux node: 0 or k+1
  NodeId aux_centroid = 0;
  std::vector<NodeId> aux_neighbor;
};

Layout derive_layout(const Adjacency& adj, const std::vector<char>& in_s, NodeId c) {
  const int n = static_cast<int>(adj.size());
  Layout L;
  std::vector<NodeId> s_nodes;
  for (NodeId v = 0; v < n; ++v) {
    if (in_s[idx(v)]) s_nodes.push_back(v);
  }
  L.blocks.push_back(s_nodes);

  // Components of tree - S, each hanging off exactly one node of S.
  std::vector<int> comp(idx(n), -1);
  std::vector<NodeId> attach;
  for (NodeId v = 0; v < n; ++v) {
    if (in_s[idx(v)] || comp[idx(v)] != -1) continue;
    const int id = static_cast<int>(attach.size());
    attach.push_back(-1);
    std::vector<NodeId> members, stack{v};
    comp[idx(v)] = id;
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (auto [y, w] : adj[idx(x)]) {
        if (in_s[idx(y)]) {
          attach[idx(id)] = y;
        } else if (comp[idx(y)] == -1) {
          comp[idx(y)] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    L.blocks.push_back(std::move(members));
  }

  // U_k: components of tree[S] - c.
  std::vector<int> part(idx(n), -1);  // k+1 for U_k, 0 for c
  part[idx(c)] = 0;
  for (auto [u, w] : adj[idx(c)]) {
    if (!in_s[idx(u)]) continue;
    L.neighbors.push_back(u);
    L.weights.push_back(w);
  }
  // adjacency lists are sorted, so neighbors are ascending already
  for (std::size_t k = 0; k < L.neighbors.size(); ++k) {
    std::vector<NodeId> stack{L.neighbors[k]};
    part[idx(L.neighbors[k])] = static_cast<int>(k) + 1;
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      for (auto [y, w] : adj[idx(x)]) {
        if (in_s[idx(y)] && part[idx(y)] == -1) {
          part[idx(y)] = static_cast<int>(k) + 1;
          stack.push_back(y);
        }
      }
    }
  }

  const int s_size = static_cast<int>(s_nodes.size());
  L.aux_label.assign(s_nodes.size() + attach.size(), 0);
  L.sides.assign(L.neighbors.size(), {});
  for (int i = 0; i < s_size; ++i) {
    NodeId v = s_nodes[idx(i)];
    L.aux_label[idx(i)] = part[idx(v)];
    if (v == c) L.aux_centroid = i;
    if (part[idx(v)] > 0) L.sides[idx(part[idx(v)] - 1)].push_back(v);
  }
  for (std::size_t b = 0; b < attach.size(); ++b) {
    const int k = part[idx(attach[b])];
    L.aux_label[s_nodes.size() + b] = k;
    if (k > 0) {
      auto& side = L.sides[idx(k - 1)];
      side.insert(side.end(), L.blocks[b + 1].begin(), L.blocks[b + 1].end());
    }
  }
  for (auto& side : L.sides) std::sort(side.begin(), side.end());
  for (NodeId u : L.neighbors) {
    L.aux_neighbor.push_back(static_cast<NodeId>(std::lower_bound(s_nodes.begin(), s_nodes.end(), u) - s_nodes.begin()));
  }
  return L;
}

// One pass over the auxiliary edges. Sides are disjoint, so each edge
// touches at most two of the cuts.
std::vector<Capacity> evaluate_cuts(const Graph& aux, const std::vector<int>& label,
                                    std::size_t cuts, long* updates) {
  std::vector<Capacity> value(cuts, 0);
  for (const Edge& e : aux.edges()) {
    const int a = label[idx(e.u)], b = label[idx(e.v)];
    if (a == b) continue;
    if (a > 0) {
      value[idx(a - 1)] += e.cap;
      if (updates) ++*updates;
    }
    if (b > 0) {
      value[idx(b - 1)] += e.cap;
      if (updates) ++*updates;
    }
  }
  return value;
}

struct UnitEdges {
  std::vector<NodeId> u, v;
};

UnitEdges expand_units(const Graph& h) {
  UnitEdges units;
  for (const Edge& e : h.edges()) {
    if (e.directed) throw ContractError("eulerian_transform: graph must be undirected");
    for (Capacity k = 0; k < e.cap; ++k) {
      units.u.push_back(e.u);
      units.v.push_back(e.v);
    }
  }
  return units;
}

// Arc id of (from, to) in the Eulerian transform, or -1.
long arc_id(const UnitEdges& units, int n, NodeId from, NodeId to) {
  const long total = n + static_cast<long>(units.u.size());
  if (from < 0 || to < 0 || from >= total || to >= total) return -1;
  if (to >= n && from < n) {
    const long e = to - n;
    if (units.u[idx(static_cast<int>(e))] == from) return 4 * e + 0;
    if (units.v[idx(static_cast<int>(e))] == from) return 4 * e + 2;
  } else if (from >= n && to < n) {
    const long e = from - n;
    if (units.v[idx(static_cast<int>(e))] == to) return 4 * e + 1;
    if (units.u[idx(static_cast<int>(e))] == to) return 4 * e + 3;
  }
  return -1;
}

Verdict reject(int expansion, std::string check, std::string reason) {
  return Verdict{false, expansion, std::move(check), std::move(reason)};
}

}  // namespace

// ---------------------------------------------------------------------------

int CentroidPlan::max_depth() const {
  int d = 0;
  for (NodeId c : order) d = std::max(d, depth[idx(c)]);
  return d;
}

CentroidPlan centroid_decompose(const CutTree& t) {
  const int n = t.node_count();
  CentroidPlan plan;
  plan.depth.assign(idx(n), -1);
  if (n == 0) return plan;
  const Adjacency adj = t.adjacency();

  // label[v] = id of the live component holding v; -1 once v is a centroid.
  std::vector<int> label(idx(n), 0);
  std::vector<std::vector<NodeId>> level{std::vector<NodeId>(idx(n))};
  std::iota(level[0].begin(), level[0].end(), 0);
  int next_label = 1;
  for (int depth = 0; !level.empty(); ++depth) {
    std::vector<std::pair<NodeId, std::size_t>> picks;
    for (std::size_t i = 0; i < level.size(); ++i) {
      const int comp = label[idx(level[i].front())];
      picks.emplace_back(find_centroid(adj, level[i], label, comp), i);
    }
    std::sort(picks.begin(), picks.end());
    std::vector<std::vector<NodeId>> next;
    for (auto [c, i] : picks) {
      plan.order.push_back(c);
      plan.depth[idx(c)] = depth;
      auto nodes = level[i];
      std::sort(nodes.begin(), nodes.end());
      plan.subtree_nodes.push_back(nodes);
      const int comp = label[idx(c)];
      label[idx(c)] = -1;
      for (auto [u, w] : adj[idx(c)]) {
        if (label[idx(u)] != comp) continue;
        std::vector<NodeId> members, stack{u};
        const int fresh = next_label++;
        label[idx(u)] = fresh;
        while (!stack.empty()) {
          NodeId x = stack.back();
          stack.pop_back();
          members.push_back(x);
          for (auto [y, cw] : adj[idx(x)]) {
            if (label[idx(y)] == comp) {
              label[idx(y)] = fresh;
              stack.push_back(y);
            }
          }
        }
        next.push_back(std::move(members));
      }
    }
    level = std::move(next);
  }
  return plan;
}

// ---------------------------------------------------------------------------

Witness prove(const Graph& g, const CutTree& t, const ProveOptions& opts) {
  if (t.node_count() != g.node_count()) {
    throw ContractError("prove: tree does not span the graph's nodes");
  }
  if (g.has_node_caps() || g.has_directed_edges()) {
    throw UnsupportedError("prove: graph must be undirected and edge-capacitated");
  }
  const int n = g.node_count();
  const Adjacency adj = t.adjacency();
  const CentroidPlan plan = centroid_decompose(t);

  Witness w;
  w.node_count = n;
  for (std::size_t j = 0; j < plan.order.size(); ++j) {
    const auto& s_nodes = plan.subtree_nodes[j];
    if (s_nodes.size() < 2) continue;
    const NodeId c = plan.order[j];
    std::vector<char> in_s(idx(n), 0);
    for (NodeId v : s_nodes) in_s[idx(v)] = 1;
    Layout L = derive_layout(adj, in_s, c);

    const Partition p(n, L.blocks);
    const Contraction aux = contract(g, p, 0);
    const auto values = evaluate_cuts(aux.graph, L.aux_label, L.neighbors.size(), nullptr);

    Expansion ex;
    ex.centroid = c;
    ex.blocks = L.blocks;
    for (std::size_t k = 0; k < L.neighbors.size(); ++k) {
      ex.cuts.push_back({L.neighbors[k], L.sides[k], values[k]});
      FlowResult fr = max_flow(aux.graph, L.aux_centroid, L.aux_neighbor[k]);
      std::vector<FlowEntry> bundle;
      for (std::size_t i = 0; i < fr.edge_flows.size(); ++i) {
        const Edge& e = aux.graph.edges()[i];
        const Capacity f = fr.edge_flows[i];
        if (f > 0) bundle.push_back({e.u, e.v, f});
        if (f < 0) bundle.push_back({e.v, e.u, -f});
      }
      ex.flows.push_back(std::move(bundle));
    }
    if (opts.try_packing && g.unit_capacities() &&
        aux.graph.total_capacity() <= opts.packing_size_limit) {
      std::vector<Capacity> lambda(idx(aux.graph.node_count()), 0);
      for (std::size_t k = 0; k < L.neighbors.size(); ++k) lambda[idx(L.aux_neighbor[k])] = values[k];
      ex.packing = greedy_tree_packing(aux.graph, L.aux_centroid, lambda, opts.packing_attempts,
                                       0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(c));
    }
    w.expansions.push_back(std::move(ex));
  }
  return w;
}

Verdict verify(const Graph& g, const CutTree& t, const Witness& w, VerifyStats* stats) {
  const int n = g.node_count();
  if (t.node_count() != n) return reject(-1, "malformed", "tree does not span the graph");
  if (w.node_count != n) return reject(-1, "malformed", "witness node count differs from graph");
  if (g.has_node_caps() || g.has_directed_edges()) {
    return reject(-1, "malformed", "graph must be undirected and edge-capacitated");
  }
  const Adjacency adj = t.adjacency();

  // Current super-nodes of the intermediate tree.
  std::vector<int> super(idx(n), 0);
  std::vector<int> super_size{n};

  for (std::size_t j = 0; j < w.expansions.size(); ++j) {
    const int at = static_cast<int>(j);
    const Expansion& ex = w.expansions[j];
    const NodeId c = ex.centroid;
    if (c < 0 || c >= n) return reject(at, "malformed", "centroid out of range");
    const int sid = super[idx(c)];
    if (super_size[idx(sid)] < 2) return reject(at, "structure", "centroid already expanded");
    if (!is_centroid(adj, super, sid, super_size[idx(sid)], c)) {
      return reject(at, "structure", "node " + std::to_string(c) + " is not a centroid of its super-node");
    }
    std::vector<char> in_s(idx(n), 0);
    for (NodeId v = 0; v < n; ++v) in_s[idx(v)] = super[idx(v)] == sid;
    const Layout L = derive_layout(adj, in_s, c);

    if (ex.blocks != L.blocks) return reject(at, "structure", "auxiliary partition does not match the tree");
    if (ex.cuts.size() != L.neighbors.size()) return reject(at, "structure", "wrong number of claimed cuts");
    for (std::size_t k = 0; k < L.neighbors.size(); ++k) {
      if (ex.cuts[k].neighbor != L.neighbors[k] || ex.cuts[k].side != L.sides[k]) {
        return reject(at, "structure", "claimed cut " + std::to_string(k) + " is not the tree-induced cut");
      }
    }
    // Sides are disjoint and miss the centroid by construction of L; the
    // claims were just matched against L, so the same holds for them.

    const Partition p(n, L.blocks);
    const Contraction aux = contract(g, p, 0);
    long updates = 0;
    const auto values = evaluate_cuts(aux.graph, L.aux_label, L.neighbors.size(), &updates);
    if (stats) {
      stats->aux_edges.push_back(aux.graph.edge_count());
      stats->cut_updates.push_back(updates);
    }
    for (std::size_t k = 0; k < L.neighbors.size(); ++k) {
      if (values[k] != ex.cuts[k].value || values[k] != L.weights[k]) {
        return reject(at, "cut",
                      "cut toward " + std::to_string(L.neighbors[k]) + " has capacity " +
                          std::to_string(values[k]) + ", claimed " + std::to_string(ex.cuts[k].value) +
                          ", tree weight " + std::to_string(L.weights[k]));
      }
    }

    // Flow evidence: a packing, a flow bundle, or both; each present piece must hold.
    if (!ex.packing && ex.flows.empty()) return reject(at, "flow", "no flow evidence");
    if (ex.packing) {
      if (aux.graph.total_capacity() > 10'000'000) return reject(at, "flow", "packing evidence on oversized graph");
      if (ex.packing->root != L.aux_centroid) return reject(at, "flow", "packing not rooted at the centroid");
      std::vector<Capacity> lambda(idx(aux.graph.node_count()), 0);
      for (std::size_t k = 0; k < L.neighbors.size(); ++k) lambda[idx(L.aux_neighbor[k])] = values[k];
      PackingCheck pc = check_tree_packing(aux.graph, L.aux_centroid, lambda, ex.packing->trees);
      if (!pc) return reject(at, "flow", "tree packing: " + pc.reason);
      if (stats) ++stats->packings_checked;
    }
    if (!ex.flows.empty()) {
      if (ex.flows.size() != L.neighbors.size()) return reject(at, "flow", "wrong number of flow bundles");
      // Index auxiliary edges by endpoint pair (contraction leaves one edge per pair).
      const auto& edges = aux.graph.edges();
      std::vector<std::vector<std::pair<NodeId, int>>> edge_at(idx(aux.graph.node_count()));
      for (std::size_t i = 0; i < edges.size(); ++i) {
        edge_at[idx(edges[i].u)].emplace_back(edges[i].v, static_cast<int>(i));
        edge_at[idx(edges[i].v)].emplace_back(edges[i].u, static_cast<int>(i));
      }
      for (std::size_t k = 0; k < L.neighbors.size(); ++k) {
        std::vector<Capacity> flow(edges.size(), 0);
        for (const FlowEntry& fe : ex.flows[k]) {
          if (fe.from < 0 || fe.to < 0 || fe.from >= aux.graph.node_count() || fe.to >= aux.graph.node_count()) {
            return reject(at, "flow", "flow entry endpoint out of range");
          }
          if (fe.units < 0) return reject(at, "flow", "negative flow entry");
          int found = -1;
          for (auto [y, i] : edge_at[idx(fe.from)]) {
            if (y == fe.to) found = i;
          }
          if (found < 0) return reject(at, "flow", "flow on a non-edge");
          flow[idx(found)] += edges[idx(found)].u == fe.from ? fe.units : -fe.units;
        }
        Capacity value = 0;
        try {
          value = check_flow(aux.graph, flow, L.aux_centroid, L.aux_neighbor[k]);
        } catch (const IntegrityError& e) {
          return reject(at, "flow", std::string("infeasible flow bundle: ") + e.what());
        }
        if (value < L.weights[k]) {
          return reject(at, "flow",
                        "flow toward " + std::to_string(L.neighbors[k]) + " carries " + std::to_string(value) +
                            " < tree weight " + std::to_string(L.weights[k]));
        }
        if (stats) ++stats->bundles_checked;
      }
    }

    // Replace the super-node by the star {c}, U_1, ..., U_d.
    super[idx(c)] = static_cast<int>(super_size.size());
    super_size.push_back(1);
    super_size[idx(sid)] = 0;
    for (std::size_t k = 0; k < L.neighbors.size(); ++k) {
      const int fresh = static_cast<int>(super_size.size());
      int count = 0;
      for (NodeId v : L.sides[k]) {
        if (in_s[idx(v)]) {
          super[idx(v)] = fresh;
          ++count;
        }
      }
      super_size.push_back(count);
    }
  }
  for (int size : super_size) {
    if (size > 1) return reject(-1, "structure", "witness leaves a super-node unexpanded");
  }
  return Verdict{true, -1, "", ""};
}

// ---------------------------------------------------------------------------

Graph eulerian_transform(const Graph& h) {
  const UnitEdges units = expand_units(h);
  const int n = h.node_count();
  Graph out(n + static_cast<int>(units.u.size()));
  for (std::size_t e = 0; e < units.u.size(); ++e) {
    const NodeId x = n + static_cast<NodeId>(e);
    out.add_directed_edge(units.u[e], x, 1);
    out.add_directed_edge(x, units.v[e], 1);
    out.add_directed_edge(units.v[e], x, 1);
    out.add_directed_edge(x, units.u[e], 1);
  }
  return out;
}

PackingCheck check_tree_packing(const Graph& h, NodeId root, const std::vector<Capacity>& lambda,
                                const std::vector<DirectedTree>& trees) {
  const int n = h.node_count();
  if (root < 0 || root >= n) return {false, "root out of range"};
  if (static_cast<int>(lambda.size()) != n) return {false, "lambda size differs from node count"};
  UnitEdges units;
  try {
    units = expand_units(h);
  } catch (const ContractError& e) {
    return {false, e.what()};
  }
  const int total = n + static_cast<int>(units.u.size());
  std::vector<char> used(4 * units.u.size(), 0);
  std::vector<NodeId> parent(idx(total), -1);
  std::vector<int> stamp(idx(total), -1);
  std::vector<int> mark(idx(total), -1);
  std::vector<Capacity> count(idx(n), 0);

  for (std::size_t ti = 0; ti < trees.size(); ++ti) {
    const int tag = static_cast<int>(ti);
    const std::string name = "tree " + std::to_string(ti);
    std::vector<NodeId> children;
    for (auto [p, ch] : trees[ti].arcs) {
      const long a = arc_id(units, n, p, ch);
      if (a < 0) return {false, name + ": arc (" + std::to_string(p) + "," + std::to_string(ch) + ") is not in the Eulerian graph"};
      if (used[static_cast<std::size_t>(a)]) return {false, name + ": arc (" + std::to_string(p) + "," + std::to_string(ch) + ") already used"};
      if (ch == root) return {false, name + ": arc enters the root"};
      if (stamp[idx(ch)] == tag) return {false, name + ": node " + std::to_string(ch) + " has two parents"};
      used[static_cast<std::size_t>(a)] = 1;
      stamp[idx(ch)] = tag;
      parent[idx(ch)] = p;
      children.push_back(ch);
    }
    // Every child must climb to the root; `mark` detects cycles per walk.
    for (NodeId ch : children) {
      NodeId x = ch;
      std::vector<NodeId> trail;
      while (x != root) {
        if (stamp[idx(x)] != tag) return {false, name + ": node " + std::to_string(x) + " is not connected to the root"};
        if (mark[idx(x)] == tag) break;  // already known to reach the root
        if (std::find(trail.begin(), trail.end(), x) != trail.end()) {
          return {false, name + ": cycle through node " + std::to_string(x)};
        }
        trail.push_back(x);
        x = parent[idx(x)];
      }
      for (NodeId y : trail) mark[idx(y)] = tag;
    }
    for (NodeId ch : children) {
      if (ch < n) ++count[idx(ch)];
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (v != root && count[idx(v)] < lambda[idx(v)]) {
      return {false, "node " + std::to_string(v) + " lies in " + std::to_string(count[idx(v)]) +
                         " trees, needs " + std::to_string(lambda[idx(v)])};
    }
  }
  return {true, ""};
}

std::optional<TreePacking> greedy_tree_packing(const Graph& h, NodeId root,
                                               const std::vector<Capacity>& lambda, int attempts,
                                               std::uint64_t seed) {
  const int n = h.node_count();
  const Graph he = eulerian_transform(h);
  const int total = he.node_count();
  std::vector<std::vector<int>> out(idx(total));
  for (int a = 0; a < he.edge_count(); ++a) out[idx(he.edge(a).u)].push_back(a);

  for (int attempt = 0; attempt < attempts; ++attempt) {
    Rng rng(seed + 0x632be59bd9b4e019ULL * static_cast<std::uint64_t>(attempt + 1));
    auto order = out;
    if (attempt > 0) {
      for (auto& list : order) rng.shuffle(list);
    }
    std::vector<Capacity> demand(lambda.begin(), lambda.end());
    demand[idx(root)] = 0;
    std::vector<char> used(idx(he.edge_count()), 0);
    TreePacking packing{root, {}};
    bool failed = false;
    auto pending = [&] {
      return std::any_of(demand.begin(), demand.end(), [](Capacity d) { return d > 0; });
    };
    while (pending()) {
      std::vector<char> in_tree(idx(total), 0);
      in_tree[idx(root)] = 1;
      std::vector<NodeId> tree_nodes{root};
      DirectedTree tree;
      // Attach the nearest still-demanding target by a BFS from the tree.
      for (;;) {
        std::vector<int> via(idx(total), -1);
        // Root arcs bound the number of trees, so the root is searched last.
        std::vector<NodeId> queue(tree_nodes.rbegin(), tree_nodes.rend() - 1);
        if (attempt > 0) rng.shuffle(queue);
        queue.push_back(root);
        NodeId hit = -1;
        for (std::size_t q = 0; q < queue.size() && hit == -1; ++q) {
          for (int a : order[idx(queue[q])]) {
            const NodeId y = he.edge(a).v;
            if (used[idx(a)] || in_tree[idx(y)] || via[idx(y)] != -1) continue;
            via[idx(y)] = a;
            if (y < n && demand[idx(y)] > 0) {
              hit = y;
              break;
            }
            queue.push_back(y);
          }
        }
        if (hit == -1) break;
        for (NodeId y = hit; !in_tree[idx(y)];) {
          const int a = via[idx(y)];
          used[idx(a)] = 1;
          in_tree[idx(y)] = 1;
          tree_nodes.push_back(y);
          tree.arcs.emplace_back(he.edge(a).u, y);
          y = he.edge(a).u;
        }
      }
      bool progress = false;
      for (NodeId v : tree_nodes) {
        if (v < n && v != root && demand[idx(v)] > 0) {
          --demand[idx(v)];
          progress = true;
        }
      }
      if (!progress) {
        failed = true;
        break;
      }
      packing.trees.push_back(std::move(tree));
    }
    if (!failed) return packing;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

StretchReport stretch_check(const Graph& g, const CutTree& t) {
  if (t.node_count() != g.node_count()) throw ContractError("stretch_check: tree does not span the graph");
  StretchReport r;
  for (const Edge& e : g.edges()) r.lhs += e.cap * t.distance(e.u, e.v);
  r.rhs_equality = t.total_weight();
  r.rhs_bound = 2 * g.total_capacity();
  r.ok = r.lhs == r.rhs_equality && r.lhs <= r.rhs_bound;
  return r;
}

AuxSizeReport aux_size_audit(const Graph& g, const CutTree& t, const CentroidPlan& plan) {
  const int n = g.node_count();
  if (t.node_count() != n) throw ContractError("aux_size_audit: tree does not span the graph");
  const Adjacency adj = t.adjacency();
  AuxSizeReport r;
  r.per_depth.assign(idx(plan.max_depth() + 1), 0);
  for (std::size_t j = 0; j < plan.order.size(); ++j) {
    const auto& s_nodes = plan.subtree_nodes[j];
    if (s_nodes.size() < 2) continue;
    std::vector<char> in_s(idx(n), 0);
    for (NodeId v : s_nodes) in_s[idx(v)] = 1;
    std::vector<int> comp(idx(n), -1);
    int next = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (in_s[idx(v)] || comp[idx(v)] != -1) continue;
      std::vector<NodeId> stack{v};
      comp[idx(v)] = next;
      while (!stack.empty()) {
        NodeId x = stack.back();
        stack.pop_back();
        for (auto [y, w] : adj[idx(x)]) {
          if (!in_s[idx(y)] && comp[idx(y)] == -1) {
            comp[idx(y)] = next;
            stack.push_back(y);
          }
        }
      }
      ++next;
    }
    long count = 0;
    for (const Edge& e : g.edges()) {
      if (in_s[idx(e.u)] || in_s[idx(e.v)] || comp[idx(e.u)] != comp[idx(e.v)]) ++count;
    }
    r.per_depth[idx(plan.depth[idx(plan.order[j])])] += count;
    r.total += count;
  }
  const long m = static_cast<long>(g.total_capacity());
  const int log_n = n <= 1 ? 0 : static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
  r.depth_bound = 4 * m;
  r.total_bound = 4 * m * (log_n + 1);
  r.asserted = g.unit_capacities();
  if (r.asserted) {
    r.ok = r.total <= r.total_bound &&
           std::all_of(r.per_depth.begin(), r.per_depth.end(), [&](long x) { return x <= r.depth_bound; });
  }
  return r;
}

// ---------------------------------------------------------------------------

using nlohmann::json;

std::string witness_to_json(const Witness& w) {
  json root;
  root["format"] = "ghct-witness/1";
  root["nodes"] = w.node_count;
  json expansions = json::array();
  for (const Expansion& ex : w.expansions) {
    json e;
    e["centroid"] = ex.centroid;
    e["blocks"] = ex.blocks;
    json cuts = json::array();
    for (const ClaimedCut& c : ex.cuts) {
      cuts.push_back({{"neighbor", c.neighbor}, {"side", c.side}, {"value", c.value}});
    }
    e["cuts"] = std::move(cuts);
    json evidence;
    evidence["kind"] = ex.packing ? "packing" : "flows";
    json flows = json::array();
    for (const auto& bundle : ex.flows) {
      json b = json::array();
      for (const FlowEntry& f : bundle) b.push_back({f.from, f.to, f.units});
      flows.push_back(std::move(b));
    }
    evidence["flows"] = std::move(flows);
    if (ex.packing) {
      json trees = json::array();
      for (const DirectedTree& t : ex.packing->trees) {
        json arcs = json::array();
        for (auto [p, c] : t.arcs) arcs.push_back({p, c});
        trees.push_back(std::move(arcs));
      }
      evidence["packing"] = {{"root", ex.packing->root}, {"trees", std::move(trees)}};
    }
    e["evidence"] = std::move(evidence);
    expansions.push_back(std::move(e));
  }
  root["expansions"] = std::move(expansions);
  return root.dump() + "\n";
}

Witness witness_from_json(const std::string& text) {
  try {
    const json root = json::parse(text);
    if (root.at("format").get<std::string>() != "ghct-witness/1") {
      throw WitnessFormatError("unsupported witness format");
    }
    Witness w;
    w.node_count = root.at("nodes").get<int>();
    for (const json& e : root.at("expansions")) {
      Expansion ex;
      ex.centroid = e.at("centroid").get<NodeId>();
      ex.blocks = e.at("blocks").get<std::vector<std::vector<NodeId>>>();
      for (const json& c : e.at("cuts")) {
        ex.cuts.push_back({c.at("neighbor").get<NodeId>(), c.at("side").get<std::vector<NodeId>>(),
                           c.at("value").get<Capacity>()});
      }
      const json& evidence = e.at("evidence");
      const std::string kind = evidence.at("kind").get<std::string>();
      if (kind != "flows" && kind != "packing") throw WitnessFormatError("unknown evidence kind " + kind);
      if (evidence.contains("flows")) {
        for (const json& b : evidence.at("flows")) {
          std::vector<FlowEntry> bundle;
          for (const json& f : b) {
            if (!f.is_array() || f.size() != 3) throw WitnessFormatError("flow entry must be [from, to, units]");
            bundle.push_back({f[0].get<NodeId>(), f[1].get<NodeId>(), f[2].get<Capacity>()});
          }
          ex.flows.push_back(std::move(bundle));
        }
      }
      if (kind == "packing") {
        const json& p = evidence.at("packing");
        TreePacking packing;
        packing.root = p.at("root").get<NodeId>();
        for (const json& t : p.at("trees")) {
          DirectedTree tree;
          for (const json& a : t) {
            if (!a.is_array() || a.size() != 2) throw WitnessFormatError("arc must be [parent, child]");
            tree.arcs.emplace_back(a[0].get<NodeId>(), a[1].get<NodeId>());
          }
          packing.trees.push_back(std::move(tree));
        }
        ex.packing = std::move(packing);
      }
      w.expansions.push_back(std::move(ex));
    }
    return w;
  } catch (const json::exception& e) {
    throw WitnessFormatError(std::string("malformed witness: ") + e.what());
  }
}

}  // namespace ghct
