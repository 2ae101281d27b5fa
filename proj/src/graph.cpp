#include "ghct/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ghct {

Graph::Graph(int node_count) : node_count_(node_count) {
  if (node_count < 0) throw ContractError("negative node count");
}

void Graph::check_node(NodeId v) const {
  if (v < 0 || v >= node_count_) {
    throw ContractError("node id " + std::to_string(v) + " out of range");
  }
}

int Graph::add_edge(NodeId u, NodeId v, Capacity cap) {
  check_node(u);
  check_node(v);
  if (u == v) throw ContractError("self-loop on node " + std::to_string(u));
  if (cap < 1) throw ContractError("edge capacity must be positive");
  edges_.push_back({u, v, cap, false});
  return edge_count() - 1;
}

int Graph::add_directed_edge(NodeId u, NodeId v, Capacity cap) {
  int i = add_edge(u, v, cap);
  edges_.back().directed = true;
  return i;
}

std::optional<Capacity> Graph::node_cap(NodeId v) const {
  check_node(v);
  if (!node_caps_) return std::nullopt;
  Capacity c = (*node_caps_)[static_cast<std::size_t>(v)];
  if (c == 0) return std::nullopt;
  return c;
}

void Graph::set_node_cap(NodeId v, Capacity cap) {
  check_node(v);
  if (cap < 1) throw ContractError("node capacity must be positive");
  if (!node_caps_) node_caps_.emplace(static_cast<std::size_t>(node_count_), 0);
  (*node_caps_)[static_cast<std::size_t>(v)] = cap;
}

const std::vector<Capacity>& Graph::node_cap_table() const {
  if (!node_caps_) throw ContractError("graph has no node capacities");
  return *node_caps_;
}

bool Graph::has_directed_edges() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.directed; });
}

bool Graph::unit_capacities() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.cap == 1; });
}

Capacity Graph::total_capacity() const noexcept {
  Capacity sum = 0;
  for (const Edge& e : edges_) sum += e.cap;
  return sum;
}

std::vector<Capacity> Graph::weighted_degrees() const {
  std::vector<Capacity> deg(static_cast<std::size_t>(node_count_), 0);
  for (const Edge& e : edges_) {
    deg[static_cast<std::size_t>(e.u)] += e.cap;
    deg[static_cast<std::size_t>(e.v)] += e.cap;
  }
  return deg;
}

Capacity Graph::cut_capacity(const std::vector<char>& side) const {
  if (static_cast<int>(side.size()) != node_count_) {
    throw ContractError("cut indicator size mismatch");
  }
  Capacity sum = 0;
  for (const Edge& e : edges_) {
    bool a = side[static_cast<std::size_t>(e.u)] != 0;
    bool b = side[static_cast<std::size_t>(e.v)] != 0;
    if (a == b) continue;
    if (e.directed && !a) continue;
    sum += e.cap;
  }
  return sum;
}

// ---------------------------------------------------------------------------

Partition::Partition(int node_count, std::vector<std::vector<NodeId>> blocks)
    : blocks_(std::move(blocks)),
      block_of_(static_cast<std::size_t>(node_count), -1) {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw ContractError("empty partition block");
    for (NodeId v : blocks_[b]) {
      if (v < 0 || v >= node_count) throw ContractError("partition node out of range");
      if (block_of_[static_cast<std::size_t>(v)] != -1) {
        throw ContractError("partition blocks overlap at node " + std::to_string(v));
      }
      block_of_[static_cast<std::size_t>(v)] = static_cast<int>(b);
    }
  }
  if (std::find(block_of_.begin(), block_of_.end(), -1) != block_of_.end()) {
    throw ContractError("partition does not cover every node");
  }
}

Partition Partition::singletons(int node_count) {
  std::vector<std::vector<NodeId>> blocks(static_cast<std::size_t>(node_count));
  for (NodeId v = 0; v < node_count; ++v) blocks[static_cast<std::size_t>(v)] = {v};
  return Partition(node_count, std::move(blocks));
}

Partition Partition::whole(int node_count) {
  if (node_count == 0) return Partition(0, {});
  std::vector<NodeId> all(static_cast<std::size_t>(node_count));
  std::iota(all.begin(), all.end(), 0);
  return Partition(node_count, {std::move(all)});
}

Partition Partition::canonical() const {
  auto blocks = blocks_;
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return Partition(node_count(), std::move(blocks));
}

// ---------------------------------------------------------------------------

Contraction contract(const Graph& g, const Partition& p, int keep) {
  if (p.node_count() != g.node_count()) {
    throw ContractError("contract: partition and graph sizes differ");
  }
  if (keep < 0 || keep >= p.block_count()) {
    throw ContractError("contract: kept block is not a block of the partition");
  }
  std::vector<NodeId> mapping(static_cast<std::size_t>(g.node_count()), -1);
  int next = 0;
  for (int b = 0; b < p.block_count(); ++b) {
    if (b == keep) {
      auto members = p.block(b);
      std::sort(members.begin(), members.end());
      for (NodeId v : members) mapping[static_cast<std::size_t>(v)] = next++;
    } else {
      for (NodeId v : p.block(b)) mapping[static_cast<std::size_t>(v)] = next;
      ++next;
    }
  }

  // Sum parallel edges per (unordered or directed) mapped pair.
  std::map<std::tuple<NodeId, NodeId, bool>, Capacity> merged;
  for (const Edge& e : g.edges()) {
    NodeId a = mapping[static_cast<std::size_t>(e.u)];
    NodeId b = mapping[static_cast<std::size_t>(e.v)];
    if (a == b) continue;
    if (!e.directed && a > b) std::swap(a, b);
    merged[{a, b, e.directed}] += e.cap;
  }
  Graph out(next);
  for (const auto& [key, cap] : merged) {
    const auto& [a, b, directed] = key;
    if (directed) {
      out.add_directed_edge(a, b, cap);
    } else {
      out.add_edge(a, b, cap);
    }
  }
  return {std::move(out), std::move(mapping)};
}

Contraction contract(const Graph& g, const Partition& p,
                     const std::vector<NodeId>& keep) {
  if (keep.empty()) throw ContractError("contract: empty kept set");
  g.check_node(keep.front());
  int b = p.block_of(keep.front());
  auto want = keep;
  auto have = p.block(b);
  std::sort(want.begin(), want.end());
  std::sort(have.begin(), have.end());
  if (want != have) {
    throw ContractError("contract: kept set is not a block of the partition");
  }
  return contract(g, p, b);
}

// ---------------------------------------------------------------------------

SplitGraph split_node_capacities(const Graph& g, NodeId s, NodeId t) {
  if (!g.has_node_caps()) {
    throw ContractError("split_node_capacities: graph has no node capacities");
  }
  g.check_node(s);
  g.check_node(t);
  if (s == t) throw ContractError("split_node_capacities: s == t");

  const auto& caps = g.node_cap_table();
  Capacity inf = 1;
  for (Capacity c : caps) inf += c;

  const int n = g.node_count();
  SplitGraph sg;
  sg.infinity = inf;
  sg.in.resize(static_cast<std::size_t>(n));
  sg.out.resize(static_cast<std::size_t>(n));
  int next = 0;
  for (NodeId v = 0; v < n; ++v) {
    sg.in[static_cast<std::size_t>(v)] = next++;
    if (v == s || v == t) {
      sg.out[static_cast<std::size_t>(v)] = sg.in[static_cast<std::size_t>(v)];
    } else {
      sg.out[static_cast<std::size_t>(v)] = next++;
    }
  }
  sg.graph = Graph(next);
  for (NodeId v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    Capacity c = caps[static_cast<std::size_t>(v)];
    sg.graph.add_directed_edge(sg.in[static_cast<std::size_t>(v)],
                               sg.out[static_cast<std::size_t>(v)],
                               c == 0 ? inf : c);
  }
  for (const Edge& e : g.edges()) {
    auto u = static_cast<std::size_t>(e.u);
    auto v = static_cast<std::size_t>(e.v);
    sg.graph.add_directed_edge(sg.out[u], sg.in[v], inf);
    if (!e.directed) sg.graph.add_directed_edge(sg.out[v], sg.in[u], inf);
  }
  return sg;
}

// ---------------------------------------------------------------------------

namespace {

Capacity parse_positive(const std::string& tok, std::size_t line, const char* what) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  return value;
}

NodeId parse_node(const std::string& tok, std::size_t line, int n) {
  Capacity v = parse_positive(tok, line, "node id");
  if (v < 0 || v >= n) throw ParseError(line, "node id out of range: " + tok);
  return static_cast<NodeId>(v);
}

Capacity parse_cap(const std::string& tok, std::size_t line) {
  Capacity c = parse_positive(tok, line, "capacity");
  if (c < 1) throw ParseError(line, "capacity must be positive: " + tok);
  return c;
}

}  // namespace

Graph load_graph(std::istream& in) {
  std::optional<Graph> g;
  long long declared_edges = 0;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(std::move(t));
    if (tok.empty() || tok[0] == "c") continue;

    const std::string& kind = tok[0];
    if (kind == "p") {
      if (g) throw ParseError(line_no, "duplicate header");
      if (tok.size() != 4 || tok[1] != "ghct") throw ParseError(line_no, "expected 'p ghct <n> <m>'");
      Capacity n = parse_positive(tok[2], line_no, "node count");
      declared_edges = parse_positive(tok[3], line_no, "edge count");
      if (n < 0 || declared_edges < 0) throw ParseError(line_no, "negative size in header");
      g.emplace(static_cast<int>(n));
      continue;
    }
    if (!g) throw ParseError(line_no, "record before 'p ghct' header");
    const int n = g->node_count();
    if (kind == "e") {
      if (tok.size() != 3 && tok.size() != 4) throw ParseError(line_no, "expected 'e <u> <v> [cap]'");
      NodeId u = parse_node(tok[1], line_no, n);
      NodeId v = parse_node(tok[2], line_no, n);
      Capacity c = tok.size() == 4 ? parse_cap(tok[3], line_no) : 1;
      if (u == v) throw ParseError(line_no, "self-loop");
      g->add_edge(u, v, c);
    } else if (kind == "d") {
      if (tok.size() != 4) throw ParseError(line_no, "expected 'd <u> <v> <cap>'");
      NodeId u = parse_node(tok[1], line_no, n);
      NodeId v = parse_node(tok[2], line_no, n);
      Capacity c = parse_cap(tok[3], line_no);
      if (u == v) throw ParseError(line_no, "self-loop");
      g->add_directed_edge(u, v, c);
    } else if (kind == "n") {
      if (tok.size() != 3) throw ParseError(line_no, "expected 'n <v> <cap>'");
      NodeId v = parse_node(tok[1], line_no, n);
      g->set_node_cap(v, parse_cap(tok[2], line_no));
    } else {
      throw ParseError(line_no, "unknown record type '" + kind + "'");
    }
  }
  if (!g) throw ParseError(line_no, "missing 'p ghct' header");
  if (g->edge_count() != declared_edges) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_edges) +
                                  " edges but file has " + std::to_string(g->edge_count()));
  }
  return std::move(*g);
}

Graph load_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_graph(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return load_graph(in);
}

void save_graph(const Graph& g, std::ostream& out) {
  out << "p ghct " << g.node_count() << ' ' << g.edge_count() << '\n';
  if (g.has_node_caps()) {
    const auto& caps = g.node_cap_table();
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (caps[static_cast<std::size_t>(v)] > 0) {
        out << "n " << v << ' ' << caps[static_cast<std::size_t>(v)] << '\n';
      }
    }
  }
  for (const Edge& e : g.edges()) {
    if (e.directed) {
      out << "d " << e.u << ' ' << e.v << ' ' << e.cap << '\n';
    } else if (e.cap == 1) {
      out << "e " << e.u << ' ' << e.v << '\n';
    } else {
      out << "e " << e.u << ' ' << e.v << ' ' << e.cap << '\n';
    }
  }
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  save_graph(g, out);
  return out.str();
}

}  // namespace ghct
