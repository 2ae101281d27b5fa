#include "ghct/cuttree.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ghct/maxflow.hpp"

namespace ghct {

// ---------------------------------------------------------------------------
// CutTree

CutTree::CutTree(std::vector<NodeId> parent, std::vector<Capacity> weight)
    : parent_(std::move(parent)), weight_(std::move(weight)) {
  if (parent_.size() != weight_.size()) throw ContractError("cut tree: size mismatch");
  index();
}

void CutTree::index() {
  const int n = node_count();
  root_ = -1;
  std::vector<std::vector<NodeId>> children(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    NodeId p = parent_[static_cast<std::size_t>(v)];
    if (p == -1) {
      if (root_ != -1) throw ContractError("cut tree: more than one root");
      root_ = v;
      continue;
    }
    if (p < 0 || p >= n || p == v) throw ContractError("cut tree: bad parent of node " + std::to_string(v));
    if (weight_[static_cast<std::size_t>(v)] < 0) throw ContractError("cut tree: negative weight");
    children[static_cast<std::size_t>(p)].push_back(v);
  }
  depth_.assign(static_cast<std::size_t>(n), -1);
  if (n == 0) return;
  if (root_ == -1) throw ContractError("cut tree: no root");
  std::vector<NodeId> stack{root_};
  depth_[static_cast<std::size_t>(root_)] = 0;
  int seen = 0;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    ++seen;
    for (NodeId c : children[static_cast<std::size_t>(v)]) {
      depth_[static_cast<std::size_t>(c)] = depth_[static_cast<std::size_t>(v)] + 1;
      stack.push_back(c);
    }
  }
  if (seen != n) throw ContractError("cut tree: parent links contain a cycle");
}

CutTree CutTree::from_edges(int node_count, const std::vector<TreeEdge>& edges) {
  if (node_count < 0) throw ContractError("cut tree: negative node count");
  if (node_count > 0 && static_cast<int>(edges.size()) != node_count - 1) {
    throw ContractError("cut tree: expected " + std::to_string(node_count - 1) + " edges");
  }
  std::vector<std::vector<std::pair<NodeId, Capacity>>> adj(static_cast<std::size_t>(node_count));
  for (const TreeEdge& e : edges) {
    if (e.a < 0 || e.a >= node_count || e.b < 0 || e.b >= node_count || e.a == e.b) {
      throw ContractError("cut tree: bad edge endpoint");
    }
    if (e.weight < 0) throw ContractError("cut tree: negative weight");
    adj[static_cast<std::size_t>(e.a)].emplace_back(e.b, e.weight);
    adj[static_cast<std::size_t>(e.b)].emplace_back(e.a, e.weight);
  }
  std::vector<NodeId> parent(static_cast<std::size_t>(node_count), -2);
  std::vector<Capacity> weight(static_cast<std::size_t>(node_count), 0);
  if (node_count == 0) return CutTree({}, {});
  parent[0] = -1;
  std::vector<NodeId> stack{0};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (auto [w, c] : adj[static_cast<std::size_t>(v)]) {
      if (w == parent[static_cast<std::size_t>(v)]) continue;
      if (parent[static_cast<std::size_t>(w)] != -2) throw ContractError("cut tree: edges contain a cycle");
      parent[static_cast<std::size_t>(w)] = v;
      weight[static_cast<std::size_t>(w)] = c;
      stack.push_back(w);
    }
  }
  if (std::find(parent.begin(), parent.end(), -2) != parent.end()) {
    throw ContractError("cut tree: edges do not span all nodes");
  }
  return CutTree(std::move(parent), std::move(weight));
}

std::vector<TreeEdge> CutTree::edges() const {
  std::vector<TreeEdge> out;
  for (NodeId v = 0; v < node_count(); ++v) {
    if (parent_[static_cast<std::size_t>(v)] >= 0) {
      out.push_back({v, parent_[static_cast<std::size_t>(v)], weight_[static_cast<std::size_t>(v)]});
    }
  }
  return out;
}

std::vector<std::vector<std::pair<NodeId, Capacity>>> CutTree::adjacency() const {
  std::vector<std::vector<std::pair<NodeId, Capacity>>> adj(static_cast<std::size_t>(node_count()));
  for (const TreeEdge& e : edges()) {
    adj[static_cast<std::size_t>(e.a)].emplace_back(e.b, e.weight);
    adj[static_cast<std::size_t>(e.b)].emplace_back(e.a, e.weight);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

Capacity CutTree::total_weight() const noexcept {
  return std::accumulate(weight_.begin(), weight_.end(), Capacity{0});
}

int CutTree::distance(NodeId a, NodeId b) const {
  int hops = 0;
  while (a != b) {
    if (depth_[static_cast<std::size_t>(a)] >= depth_[static_cast<std::size_t>(b)]) {
      a = parent_[static_cast<std::size_t>(a)];
    } else {
      b = parent_[static_cast<std::size_t>(b)];
    }
    ++hops;
  }
  return hops;
}

std::vector<char> CutTree::subtree_indicator(NodeId child) const {
  std::vector<char> in(static_cast<std::size_t>(node_count()), 0);
  // A node is below `child` iff climbing from it meets `child` before the
  // depth drops under child's depth.
  const int stop = depth_[static_cast<std::size_t>(child)];
  for (NodeId v = 0; v < node_count(); ++v) {
    NodeId x = v;
    while (depth_[static_cast<std::size_t>(x)] > stop) x = parent_[static_cast<std::size_t>(x)];
    in[static_cast<std::size_t>(v)] = (x == child);
  }
  return in;
}

// ---------------------------------------------------------------------------
// Queries

CutQuery tree_query(const CutTree& t, NodeId s, NodeId u) {
  const int n = t.node_count();
  if (s < 0 || s >= n || u < 0 || u >= n) throw ContractError("tree_query: node out of range");
  if (s == u) throw ContractError("tree_query: s == u");

  // Path edges named by their child endpoint, in order from s to u.
  std::vector<NodeId> from_s, from_u;
  {
    const auto& parent = t.parent();
    auto depth_of = [&](NodeId v) {
      int d = 0;
      while (parent[static_cast<std::size_t>(v)] != -1) {
        v = parent[static_cast<std::size_t>(v)];
        ++d;
      }
      return d;
    };
    NodeId a = s, b = u;
    int da = depth_of(a), db = depth_of(b);
    while (a != b) {
      if (da >= db) {
        from_s.push_back(a);
        a = parent[static_cast<std::size_t>(a)];
        --da;
      } else {
        from_u.push_back(b);
        b = parent[static_cast<std::size_t>(b)];
        --db;
      }
    }
  }
  std::vector<NodeId> path = from_s;
  path.insert(path.end(), from_u.rbegin(), from_u.rend());

  NodeId best = path.front();
  for (NodeId c : path) {
    if (t.weight()[static_cast<std::size_t>(c)] < t.weight()[static_cast<std::size_t>(best)]) best = c;
  }
  auto below = t.subtree_indicator(best);
  const bool s_below = below[static_cast<std::size_t>(s)] != 0;
  CutQuery q;
  q.value = t.weight()[static_cast<std::size_t>(best)];
  for (NodeId v = 0; v < n; ++v) {
    if ((below[static_cast<std::size_t>(v)] != 0) == s_below) q.cut_side.push_back(v);
  }
  return q;
}

std::vector<std::vector<Capacity>> all_pairs_matrix(const CutTree& t) {
  const int n = t.node_count();
  std::vector<std::vector<Capacity>> m(static_cast<std::size_t>(n),
                                       std::vector<Capacity>(static_cast<std::size_t>(n), 0));
  auto adj = t.adjacency();
  for (NodeId s = 0; s < n; ++s) {
    // DFS carrying the running bottleneck.
    std::vector<std::tuple<NodeId, NodeId, Capacity>> stack;
    for (auto [w, c] : adj[static_cast<std::size_t>(s)]) stack.emplace_back(w, s, c);
    while (!stack.empty()) {
      auto [v, from, best] = stack.back();
      stack.pop_back();
      m[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] = best;
      for (auto [w, c] : adj[static_cast<std::size_t>(v)]) {
        if (w != from) stack.emplace_back(w, v, std::min(best, c));
      }
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Super-node tree

std::optional<CutQuery> SuperNodeTree::query(NodeId s, NodeId t) const {
  const int bs = blocks.block_of(s);
  const int bt = blocks.block_of(t);
  if (bs == bt) return std::nullopt;
  const int k = blocks.block_count();
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < tree_edges.size(); ++i) {
    adj[static_cast<std::size_t>(tree_edges[i].a)].emplace_back(tree_edges[i].b, i);
    adj[static_cast<std::size_t>(tree_edges[i].b)].emplace_back(tree_edges[i].a, i);
  }
  // Path from bs to bt by parent pointers of a search from bs.
  std::vector<long> via(static_cast<std::size_t>(k), -1);
  std::vector<int> prev(static_cast<std::size_t>(k), -1);
  std::vector<int> stack{bs};
  prev[static_cast<std::size_t>(bs)] = bs;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto [y, e] : adj[static_cast<std::size_t>(x)]) {
      if (prev[static_cast<std::size_t>(y)] != -1) continue;
      prev[static_cast<std::size_t>(y)] = x;
      via[static_cast<std::size_t>(y)] = static_cast<long>(e);
      stack.push_back(y);
    }
  }
  if (prev[static_cast<std::size_t>(bt)] == -1) throw ContractError("super-node tree is disconnected");
  std::vector<std::size_t> path;  // from bt back to bs
  for (int x = bt; x != bs; x = prev[static_cast<std::size_t>(x)]) {
    path.push_back(static_cast<std::size_t>(via[static_cast<std::size_t>(x)]));
  }
  std::reverse(path.begin(), path.end());
  std::size_t best = path.front();
  for (std::size_t e : path) {
    if (tree_edges[e].weight < tree_edges[best].weight) best = e;
  }
  // Blocks reachable from bs without crossing `best`.
  std::vector<char> side(static_cast<std::size_t>(k), 0);
  stack = {bs};
  side[static_cast<std::size_t>(bs)] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (auto [y, e] : adj[static_cast<std::size_t>(x)]) {
      if (e == best || side[static_cast<std::size_t>(y)]) continue;
      side[static_cast<std::size_t>(y)] = 1;
      stack.push_back(y);
    }
  }
  CutQuery q;
  q.value = tree_edges[best].weight;
  for (NodeId v = 0; v < blocks.node_count(); ++v) {
    if (side[static_cast<std::size_t>(blocks.block_of(v))]) q.cut_side.push_back(v);
  }
  return q;
}

CutTree SuperNodeTree::to_cut_tree() const {
  for (const auto& b : blocks.blocks()) {
    if (b.size() != 1) throw ContractError("super-node tree has non-singleton blocks");
  }
  std::vector<TreeEdge> edges;
  for (const TreeEdge& e : tree_edges) {
    edges.push_back({blocks.block(e.a).front(), blocks.block(e.b).front(), e.weight});
  }
  return CutTree::from_edges(blocks.node_count(), edges);
}

// ---------------------------------------------------------------------------
// Gomory-Hu engine

namespace {

// Mutable super-node tree driven by Gomory-Hu splits.
class GomoryHuState {
 public:
  GomoryHuState(const Graph& g, BuildStats* stats) : g_(g), stats_(stats) {
    const int n = g.node_count();
    block_of_.assign(static_cast<std::size_t>(n), 0);
    if (n > 0) {
      blocks_.emplace_back(static_cast<std::size_t>(n));
      std::iota(blocks_[0].begin(), blocks_[0].end(), 0);
      incident_.emplace_back();
    }
  }

  int block_of(NodeId v) const { return block_of_[static_cast<std::size_t>(v)]; }
  const std::vector<NodeId>& block(int b) const { return blocks_[static_cast<std::size_t>(b)]; }

  enum class Outcome { kSplit, kCapped };

  // One Gomory-Hu step on the block holding s and t. With a cap, a flow that
  // reaches it leaves the tree unchanged.
  Outcome split(NodeId s, NodeId t, std::optional<Capacity> cap, Capacity* value_out = nullptr) {
    const int b = block_of(s);
    if (block_of(t) != b) throw std::logic_error("split: s and t in different blocks");

    // One merged node per component of the tree minus block b; component c
    // is reached through incident edge incident_[b][c].
    const std::vector<std::size_t> inc = incident_[static_cast<std::size_t>(b)];
    std::vector<std::vector<NodeId>> parts{block(b)};
    for (std::size_t e : inc) {
      const int start = other_end(e, b);
      std::vector<NodeId> nodes;
      std::vector<int> stack{start};
      std::vector<int> from{b};
      while (!stack.empty()) {
        int x = stack.back();
        int px = from.back();
        stack.pop_back();
        from.pop_back();
        nodes.insert(nodes.end(), block(x).begin(), block(x).end());
        for (std::size_t f : incident_[static_cast<std::size_t>(x)]) {
          int y = other_end(f, x);
          if (y == px) continue;
          stack.push_back(y);
          from.push_back(x);
        }
      }
      parts.push_back(std::move(nodes));
    }
    const Partition p(g_.node_count(), std::move(parts));
    Contraction aux = contract(g_, p, 0);

    FlowResult fr = max_flow(aux.graph, aux.mapping[static_cast<std::size_t>(s)],
                             aux.mapping[static_cast<std::size_t>(t)], cap);
    if (stats_) {
      ++stats_->flow_calls;
      stats_->aux_edges += aux.graph.edge_count();
    }
    if (fr.capped) {
      if (stats_) ++stats_->capped_calls;
      return Outcome::kCapped;
    }
    if (stats_) stats_->flow_value_sum += fr.value;
    if (value_out) *value_out = fr.value;

    // Source side keeps id b; the rest becomes a new block.
    std::vector<NodeId> keep, moved;
    for (NodeId v : block(b)) {
      (fr.cut_side[static_cast<std::size_t>(aux.mapping[static_cast<std::size_t>(v)])] ? keep : moved).push_back(v);
    }
    const int nb = static_cast<int>(blocks_.size());
    blocks_[static_cast<std::size_t>(b)] = std::move(keep);
    for (NodeId v : moved) block_of_[static_cast<std::size_t>(v)] = nb;
    blocks_.push_back(std::move(moved));
    incident_.emplace_back();

    // Reattach each outside component to the side its merged node fell on.
    std::vector<std::size_t> stay;
    const int first_outside = static_cast<int>(block(b).size() + block(nb).size());
    for (std::size_t c = 0; c < inc.size(); ++c) {
      const std::size_t e = inc[c];
      const NodeId merged = first_outside + static_cast<int>(c);
      if (fr.cut_side[static_cast<std::size_t>(merged)]) {
        stay.push_back(e);
      } else {
        retarget(e, b, nb);
        incident_[static_cast<std::size_t>(nb)].push_back(e);
      }
    }
    incident_[static_cast<std::size_t>(b)] = std::move(stay);
    add_edge(b, nb, fr.value);
    return Outcome::kSplit;
  }

  SuperNodeTree snapshot() const {
    std::vector<std::vector<NodeId>> blocks = blocks_;
    for (auto& blk : blocks) std::sort(blk.begin(), blk.end());
    SuperNodeTree out{Partition(g_.node_count(), std::move(blocks)), edges_};
    return out;
  }

  int block_count() const { return static_cast<int>(blocks_.size()); }

 private:
  int other_end(std::size_t e, int b) const {
    return edges_[e].a == b ? edges_[e].b : edges_[e].a;
  }
  void retarget(std::size_t e, int from, int to) {
    if (edges_[e].a == from) {
      edges_[e].a = to;
    } else {
      edges_[e].b = to;
    }
  }
  void add_edge(int a, int b, Capacity w) {
    edges_.push_back({a, b, w});
    incident_[static_cast<std::size_t>(a)].push_back(edges_.size() - 1);
    incident_[static_cast<std::size_t>(b)].push_back(edges_.size() - 1);
  }

  const Graph& g_;
  BuildStats* stats_;
  std::vector<std::vector<NodeId>> blocks_;
  std::vector<int> block_of_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

void require_edge_capacitated(const Graph& g, const char* who) {
  if (g.has_node_caps()) {
    throw UnsupportedError(std::string(who) + ": node-capacitated graphs are not supported");
  }
  if (g.has_directed_edges()) {
    throw UnsupportedError(std::string(who) + ": directed edges are not supported");
  }
}

// Smallest node lying in a non-singleton block, or -1.
NodeId first_splittable(const GomoryHuState& st, int n) {
  for (NodeId v = 0; v < n; ++v) {
    if (st.block(st.block_of(v)).size() > 1) return v;
  }
  return -1;
}

void run_gomory_hu(GomoryHuState& st, int n) {
  for (NodeId s = first_splittable(st, n); s != -1; s = first_splittable(st, n)) {
    const auto& blk = st.block(st.block_of(s));
    NodeId t = -1;
    for (NodeId v : blk) {
      if (v != s && (t == -1 || v < t)) t = v;
    }
    st.split(s, t, std::nullopt);
  }
}

// Minimal union-find for the "connectivity > k" clusters.
class Clusters {
 public:
  explicit Clusters(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      parent_[static_cast<std::size_t>(v)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
      v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

void run_partial(GomoryHuState& st, int n, Capacity k) {
  Clusters high(n);
  for (;;) {
    NodeId s = -1, t = -1;
    for (NodeId v = 0; v < n && s == -1; ++v) {
      auto blk = st.block(st.block_of(v));
      if (blk.size() < 2) continue;
      std::sort(blk.begin(), blk.end());
      const int cs = high.find(blk.front());
      for (NodeId w : blk) {
        if (high.find(w) != cs) {
          s = blk.front();
          t = w;
          break;
        }
      }
    }
    if (s == -1) return;
    if (st.split(s, t, k + 1) == GomoryHuState::Outcome::kCapped) high.unite(s, t);
  }
}

}  // namespace

CutTree gomory_hu(const Graph& g, BuildStats* stats) {
  require_edge_capacitated(g, "gomory_hu");
  GomoryHuState st(g, stats);
  run_gomory_hu(st, g.node_count());
  if (g.node_count() == 0) return CutTree({}, {});
  return st.snapshot().to_cut_tree();
}

CutTree gusfield(const Graph& g, BuildStats* stats) {
  require_edge_capacitated(g, "gusfield");
  const int n = g.node_count();
  std::vector<NodeId> parent(static_cast<std::size_t>(n), 0);
  std::vector<Capacity> weight(static_cast<std::size_t>(n), 0);
  if (n == 0) return CutTree({}, {});
  parent[0] = -1;
  for (NodeId s = 1; s < n; ++s) {
    const NodeId t = parent[static_cast<std::size_t>(s)];
    FlowResult fr = max_flow(g, s, t);
    if (stats) {
      ++stats->flow_calls;
      stats->flow_value_sum += fr.value;
      stats->aux_edges += g.edge_count();
    }
    weight[static_cast<std::size_t>(s)] = fr.value;
    for (NodeId v = 0; v < n; ++v) {
      if (v != s && fr.cut_side[static_cast<std::size_t>(v)] && parent[static_cast<std::size_t>(v)] == t) {
        parent[static_cast<std::size_t>(v)] = s;
      }
    }
    const NodeId pt = parent[static_cast<std::size_t>(t)];
    if (pt >= 0 && fr.cut_side[static_cast<std::size_t>(pt)]) {
      parent[static_cast<std::size_t>(s)] = pt;
      parent[static_cast<std::size_t>(t)] = s;
      weight[static_cast<std::size_t>(s)] = weight[static_cast<std::size_t>(t)];
      weight[static_cast<std::size_t>(t)] = fr.value;
    }
  }
  // Re-root canonically at node 0 so trees compare structurally.
  CutTree raw(std::move(parent), std::move(weight));
  return CutTree::from_edges(n, raw.edges());
}

SuperNodeTree partial_tree(const Graph& g, Capacity k, BuildStats* stats) {
  require_edge_capacitated(g, "partial_tree");
  if (k < 1) throw ContractError("partial_tree: k must be at least 1");
  GomoryHuState st(g, stats);
  run_partial(st, g.node_count(), k);
  if (g.node_count() == 0) return SuperNodeTree{Partition(0, {}), {}};
  return st.snapshot();
}

Capacity default_degree_threshold(const Graph& g) {
  const Capacity m = g.total_capacity();
  auto d = static_cast<Capacity>(std::ceil(std::sqrt(static_cast<double>(m))));
  while (d * d < m) ++d;
  while (d > 1 && (d - 1) * (d - 1) >= m) --d;
  return std::max<Capacity>(d, 1);
}

CutTree hybrid_cut_tree(const Graph& g, std::optional<Capacity> d, BuildStats* stats) {
  require_edge_capacitated(g, "hybrid_cut_tree");
  const Capacity threshold = d.value_or(default_degree_threshold(g));
  if (threshold < 1) throw ContractError("hybrid_cut_tree: d must be at least 1");
  const int n = g.node_count();
  if (n == 0) return CutTree({}, {});

  BuildStats local;
  BuildStats& s = stats ? *stats : local;
  s.degree_threshold = threshold;
  for (Capacity deg : g.weighted_degrees()) {
    if (deg > threshold) ++s.high_degree_nodes;
  }

  GomoryHuState st(g, &s);
  run_partial(st, n, threshold);
  s.stage1_calls = s.flow_calls;
  const Capacity before = s.flow_value_sum;
  run_gomory_hu(st, n);
  s.stage2_calls = s.flow_calls - s.stage1_calls;
  s.stage2_flow_sum = s.flow_value_sum - before;
  return st.snapshot().to_cut_tree();
}

// ---------------------------------------------------------------------------
// Files

void save_tree(const CutTree& t, std::ostream& out) {
  out << "t " << t.node_count() << '\n';
  for (const TreeEdge& e : t.edges()) out << "e " << e.a << ' ' << e.b << ' ' << e.weight << '\n';
}

std::string tree_to_text(const CutTree& t) {
  std::ostringstream out;
  save_tree(t, out);
  return out.str();
}

CutTree load_tree(std::istream& in) {
  std::optional<int> n;
  std::vector<TreeEdge> edges;
  std::size_t line_no = 0;
  std::string line;
  auto number = [&](const std::string& tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad number '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line_no, "bad number '" + tok + "'");
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string x; ls >> x;) tok.push_back(std::move(x));
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "t") {
      if (n || tok.size() != 2) throw ParseError(line_no, "expected a single 't <n>' header");
      long long v = number(tok[1]);
      if (v < 0) throw ParseError(line_no, "negative node count");
      n = static_cast<int>(v);
    } else if (tok[0] == "e") {
      if (!n) throw ParseError(line_no, "edge before 't <n>' header");
      if (tok.size() != 4) throw ParseError(line_no, "expected 'e <u> <v> <w>'");
      long long a = number(tok[1]), b = number(tok[2]), w = number(tok[3]);
      if (a < 0 || a >= *n || b < 0 || b >= *n) throw ParseError(line_no, "node id out of range");
      if (w < 0) throw ParseError(line_no, "negative weight");
      edges.push_back({static_cast<int>(a), static_cast<int>(b), w});
    } else {
      throw ParseError(line_no, "unknown record type '" + tok[0] + "'");
    }
  }
  if (!n) throw ParseError(line_no, "missing 't <n>' header");
  try {
    return CutTree::from_edges(*n, edges);
  } catch (const ContractError& e) {
    throw ParseError(line_no, e.what());
  }
}

CutTree load_tree_text(const std::string& text) {
  std::istringstream in(text);
  return load_tree(in);
}

CutTree load_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return load_tree(in);
}

void save_super_node_tree(const SuperNodeTree& t, std::ostream& out) {
  auto canon = t.blocks.canonical();
  // Block ids in the file follow canonical order.
  std::vector<int> rename(static_cast<std::size_t>(t.blocks.block_count()));
  for (int b = 0; b < t.blocks.block_count(); ++b) {
    rename[static_cast<std::size_t>(b)] = canon.block_of(t.blocks.block(b).front());
  }
  out << "s " << t.blocks.node_count() << ' ' << canon.block_count() << '\n';
  for (int b = 0; b < canon.block_count(); ++b) {
    out << "b " << b;
    for (NodeId v : canon.block(b)) out << ' ' << v;
    out << '\n';
  }
  std::vector<TreeEdge> edges;
  for (const TreeEdge& e : t.tree_edges) {
    int a = rename[static_cast<std::size_t>(e.a)], b = rename[static_cast<std::size_t>(e.b)];
    edges.push_back({std::min(a, b), std::max(a, b), e.weight});
  }
  std::sort(edges.begin(), edges.end(), [](const TreeEdge& x, const TreeEdge& y) {
    return std::tie(x.a, x.b, x.weight) < std::tie(y.a, y.b, y.weight);
  });
  for (const TreeEdge& e : edges) out << "e " << e.a << ' ' << e.b << ' ' << e.weight << '\n';
}

}  // namespace ghct
