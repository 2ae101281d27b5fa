#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ghct {

using NodeId = int;
using Capacity = std::int64_t;

/// Malformed input text. The message names the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A precondition of an operation was violated by the caller.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is well formed but the requested operation does not support it
/// (e.g. a node-capacitated graph handed to a cut-tree builder).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Capacity cap = 1;
  bool directed = false;  // u -> v only; appears inside gadget graphs

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with positive integer edge capacities and optional
/// node capacities. Parallel edges are allowed; an edge of capacity c stands
/// for c unit edges. Immutable once built except through the builder calls.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int node_count);

  int node_count() const noexcept { return node_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

  /// Returns the index of the new edge.
  int add_edge(NodeId u, NodeId v, Capacity cap = 1);
  int add_directed_edge(NodeId u, NodeId v, Capacity cap);

  bool has_node_caps() const noexcept { return node_caps_.has_value(); }
  /// Node capacity, or nullopt if the graph (or this node) is uncapacitated.
  std::optional<Capacity> node_cap(NodeId v) const;
  void set_node_cap(NodeId v, Capacity cap);
  /// Raw node-capacity table; 0 marks an uncapacitated node.
  const std::vector<Capacity>& node_cap_table() const;

  bool has_directed_edges() const noexcept;
  bool unit_capacities() const noexcept;
  Capacity total_capacity() const noexcept;
  /// Capacity-weighted degrees (multigraph degree for unit capacities).
  std::vector<Capacity> weighted_degrees() const;

  /// Capacity of the cut (side, complement). `side` is an indicator over nodes.
  /// Directed edges count only when they leave `side`.
  Capacity cut_capacity(const std::vector<char>& side) const;

  void check_node(NodeId v) const;

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::optional<std::vector<Capacity>> node_caps_;
};

/// Disjoint nonempty blocks covering 0..n-1.
class Partition {
 public:
  Partition() = default;
  /// Throws ContractError unless the blocks partition 0..n-1.
  Partition(int node_count, std::vector<std::vector<NodeId>> blocks);

  static Partition singletons(int node_count);
  static Partition whole(int node_count);

  int node_count() const noexcept { return static_cast<int>(block_of_.size()); }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<NodeId>>& blocks() const noexcept { return blocks_; }
  const std::vector<NodeId>& block(int b) const { return blocks_.at(static_cast<std::size_t>(b)); }
  int block_of(NodeId v) const { return block_of_.at(static_cast<std::size_t>(v)); }

  /// Sorts members of each block and orders blocks by smallest member.
  Partition canonical() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<NodeId>> blocks_;
  std::vector<int> block_of_;
};

struct Contraction {
  Graph graph;
  std::vector<NodeId> mapping;  // old node -> new node
};

/// Expands block `keep` of `p` into singletons and merges every other block
/// into one node. New ids follow block order; the kept block contributes its
/// members in ascending order. Parallel edges are summed, internal edges
/// dropped. Node capacities are not carried over.
Contraction contract(const Graph& g, const Partition& p, int keep);

/// Overload taking the kept block as a node set; it must equal a block of p.
Contraction contract(const Graph& g, const Partition& p,
                     const std::vector<NodeId>& keep);

/// Node ids in the split digraph produced by split_node_capacities.
struct SplitGraph {
  Graph graph;
  std::vector<NodeId> in;   // v -> v_in
  std::vector<NodeId> out;  // v -> v_out (== in[v] for unsplit nodes)
  Capacity infinity = 0;
};

/// Reduces node capacities to arc capacities. Every node other than the
/// terminals becomes v_in -> v_out with capacity c(v); every edge becomes
/// arcs of capacity INF = (sum of node caps) + 1. Nodes without a capacity
/// entry are treated as having capacity INF.
SplitGraph split_node_capacities(const Graph& g, NodeId s, NodeId t);

Graph load_graph(std::istream& in);
Graph load_graph_text(std::string_view text);
Graph load_graph_file(const std::string& path);
void save_graph(const Graph& g, std::ostream& out);
std::string graph_to_text(const Graph& g);

}  // namespace ghct
