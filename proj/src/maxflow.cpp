#include "ghct/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace ghct {

namespace {

// Residual network over the graph's edges. Arc 2i runs u -> v for edge i and
// arc 2i+1 runs v -> u; the reverse arc starts at the edge capacity for
// undirected edges and at 0 for directed ones.
class Residual {
 public:
  Residual(const Graph& g, NodeId s, NodeId t)
      : g_(g), s_(s), t_(t),
        head_(static_cast<std::size_t>(g.node_count()) + 1, 0),
        level_(static_cast<std::size_t>(g.node_count())),
        iter_(static_cast<std::size_t>(g.node_count())) {
    const auto m = static_cast<std::size_t>(g.edge_count());
    residual_.resize(2 * m);
    to_.resize(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      const Edge& e = g.edges()[i];
      residual_[2 * i] = e.cap;
      residual_[2 * i + 1] = e.directed ? 0 : e.cap;
      to_[2 * i] = e.v;
      to_[2 * i + 1] = e.u;
      ++head_[static_cast<std::size_t>(e.u) + 1];
      ++head_[static_cast<std::size_t>(e.v) + 1];
    }
    for (std::size_t v = 1; v < head_.size(); ++v) head_[v] += head_[v - 1];
    adj_.resize(2 * m);
    auto fill = head_;
    for (std::size_t i = 0; i < m; ++i) {
      const Edge& e = g.edges()[i];
      adj_[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.u)]++)] = static_cast<int>(2 * i);
      adj_[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.v)]++)] = static_cast<int>(2 * i + 1);
    }
  }

  Capacity run(std::optional<Capacity> cap) {
    Capacity flow = 0;
    const Capacity limit = cap.value_or(std::numeric_limits<Capacity>::max());
    while (flow < limit && bfs()) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (flow < limit) {
        Capacity pushed = dfs(s_, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  std::vector<char> reachable_from_source() const {
    std::vector<char> seen(static_cast<std::size_t>(g_.node_count()), 0);
    std::vector<NodeId> stack{s_};
    seen[static_cast<std::size_t>(s_)] = 1;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (int k = head_[static_cast<std::size_t>(v)]; k < head_[static_cast<std::size_t>(v) + 1]; ++k) {
        int a = adj_[static_cast<std::size_t>(k)];
        NodeId w = to_[static_cast<std::size_t>(a)];
        if (residual_[static_cast<std::size_t>(a)] > 0 && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

  std::vector<Capacity> edge_flows() const {
    std::vector<Capacity> f(static_cast<std::size_t>(g_.edge_count()));
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = g_.edges()[i].cap - residual_[2 * i];
    return f;
  }

 private:
  bool bfs() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<NodeId> q;
    level_[static_cast<std::size_t>(s_)] = 0;
    q.push(s_);
    while (!q.empty()) {
      NodeId v = q.front();
      q.pop();
      for (int k = head_[static_cast<std::size_t>(v)]; k < head_[static_cast<std::size_t>(v) + 1]; ++k) {
        int a = adj_[static_cast<std::size_t>(k)];
        NodeId w = to_[static_cast<std::size_t>(a)];
        if (residual_[static_cast<std::size_t>(a)] > 0 && level_[static_cast<std::size_t>(w)] < 0) {
          level_[static_cast<std::size_t>(w)] = level_[static_cast<std::size_t>(v)] + 1;
          q.push(w);
        }
      }
    }
    return level_[static_cast<std::size_t>(t_)] >= 0;
  }

  Capacity dfs(NodeId v, Capacity budget) {
    if (v == t_) return budget;
    const auto vi = static_cast<std::size_t>(v);
    const int end = head_[vi + 1] - head_[vi];
    for (int& k = iter_[vi]; k < end; ++k) {
      int a = adj_[static_cast<std::size_t>(head_[vi] + k)];
      NodeId w = to_[static_cast<std::size_t>(a)];
      auto& r = residual_[static_cast<std::size_t>(a)];
      if (r <= 0 || level_[static_cast<std::size_t>(w)] != level_[vi] + 1) continue;
      Capacity got = dfs(w, std::min(budget, r));
      if (got > 0) {
        r -= got;
        residual_[static_cast<std::size_t>(a ^ 1)] += got;
        return got;
      }
    }
    return 0;
  }

  const Graph& g_;
  NodeId s_, t_;
  std::vector<int> head_;
  std::vector<int> adj_;
  std::vector<NodeId> to_;
  std::vector<Capacity> residual_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace

std::vector<NodeId> FlowResult::cut_nodes() const {
  std::vector<NodeId> nodes;
  for (std::size_t v = 0; v < cut_side.size(); ++v) {
    if (cut_side[v]) nodes.push_back(static_cast<NodeId>(v));
  }
  return nodes;
}

FlowResult max_flow(const Graph& g, NodeId s, NodeId t, std::optional<Capacity> cap) {
  g.check_node(s);
  g.check_node(t);
  if (s == t) throw ContractError("max_flow: source equals sink");
  if (cap && *cap < 1) throw ContractError("max_flow: cap must be positive");

  Residual net(g, s, t);
  FlowResult fr;
  fr.value = net.run(cap);
  fr.capped = cap.has_value() && fr.value >= *cap;
  if (!fr.capped) fr.cut_side = net.reachable_from_source();
  fr.edge_flows = net.edge_flows();
  return fr;
}

Capacity check_flow(const Graph& g, const std::vector<Capacity>& edge_flows,
                    NodeId s, NodeId t) {
  if (static_cast<int>(edge_flows.size()) != g.edge_count()) {
    throw IntegrityError("edge flow vector size mismatch");
  }
  std::vector<Capacity> excess(static_cast<std::size_t>(g.node_count()), 0);
  for (std::size_t i = 0; i < edge_flows.size(); ++i) {
    const Edge& e = g.edges()[i];
    Capacity f = edge_flows[i];
    if (f > e.cap || -f > e.cap || (e.directed && f < 0)) {
      throw IntegrityError("edge " + std::to_string(i) + " flow " + std::to_string(f) +
                           " exceeds capacity");
    }
    excess[static_cast<std::size_t>(e.u)] -= f;
    excess[static_cast<std::size_t>(e.v)] += f;
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (v != s && v != t && excess[static_cast<std::size_t>(v)] != 0) {
      throw IntegrityError("conservation violated at node " + std::to_string(v));
    }
  }
  return -excess[static_cast<std::size_t>(s)];
}

std::vector<FlowPath> flow_decompose(const Graph& g, const FlowResult& fr,
                                     NodeId s, NodeId t) {
  g.check_node(s);
  g.check_node(t);
  if (s == t) throw ContractError("flow_decompose: source equals sink");
  Capacity value = check_flow(g, fr.edge_flows, s, t);
  if (value != fr.value) throw IntegrityError("flow value disagrees with edge flows");

  // Oriented arcs carrying positive flow.
  struct Arc {
    NodeId to;
    Capacity left;
  };
  std::vector<std::vector<Arc>> out(static_cast<std::size_t>(g.node_count()));
  for (std::size_t i = 0; i < fr.edge_flows.size(); ++i) {
    const Edge& e = g.edges()[i];
    Capacity f = fr.edge_flows[i];
    if (f > 0) out[static_cast<std::size_t>(e.u)].push_back({e.v, f});
    if (f < 0) out[static_cast<std::size_t>(e.v)].push_back({e.u, -f});
  }
  std::vector<std::size_t> next(out.size(), 0);
  auto advance = [&](NodeId v) -> Arc* {
    auto& arcs = out[static_cast<std::size_t>(v)];
    auto& k = next[static_cast<std::size_t>(v)];
    while (k < arcs.size() && arcs[k].left == 0) ++k;
    return k < arcs.size() ? &arcs[k] : nullptr;
  };

  std::vector<FlowPath> paths;
  Capacity remaining = value;
  std::vector<int> pos(out.size(), -1);
  while (remaining > 0) {
    std::vector<NodeId> walk{s};
    std::vector<Arc*> used;
    pos[static_cast<std::size_t>(s)] = 0;
    while (walk.back() != t) {
      Arc* a = advance(walk.back());
      if (a == nullptr) throw IntegrityError("flow path dead-ends before sink");
      NodeId w = a->to;
      if (pos[static_cast<std::size_t>(w)] >= 0) {
        // Cancel the cycle closed by this arc and resume from w.
        std::size_t from = static_cast<std::size_t>(pos[static_cast<std::size_t>(w)]);
        Capacity bottleneck = a->left;
        for (std::size_t k = from; k < used.size(); ++k) bottleneck = std::min(bottleneck, used[k]->left);
        a->left -= bottleneck;
        for (std::size_t k = from; k < used.size(); ++k) used[k]->left -= bottleneck;
        for (std::size_t k = from + 1; k < walk.size(); ++k) pos[static_cast<std::size_t>(walk[k])] = -1;
        walk.resize(from + 1);
        used.resize(from);
        continue;
      }
      pos[static_cast<std::size_t>(w)] = static_cast<int>(walk.size());
      walk.push_back(w);
      used.push_back(a);
    }
    Capacity units = remaining;
    for (Arc* a : used) units = std::min(units, a->left);
    for (Arc* a : used) a->left -= units;
    for (NodeId v : walk) pos[static_cast<std::size_t>(v)] = -1;
    remaining -= units;
    paths.push_back({std::move(walk), units});
  }
  return paths;
}

}  // namespace ghct
