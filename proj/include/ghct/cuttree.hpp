#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ghct/graph.hpp"

namespace ghct {

struct TreeEdge {
  int a = 0;
  int b = 0;
  Capacity weight = 0;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

struct CutQuery {
  Capacity value = 0;
  std::vector<NodeId> cut_side;  // sorted; contains the first query node
};

/// Weighted tree on the graph's nodes in rooted form: weight[v] is the weight
/// of edge v - parent[v]; the root has parent -1 and weight 0.
class CutTree {
 public:
  CutTree() = default;
  CutTree(std::vector<NodeId> parent, std::vector<Capacity> weight);

  /// Roots an edge list at node 0. Throws ContractError unless the edges
  /// form a spanning tree on n nodes.
  static CutTree from_edges(int node_count, const std::vector<TreeEdge>& edges);

  int node_count() const noexcept { return static_cast<int>(parent_.size()); }
  const std::vector<NodeId>& parent() const noexcept { return parent_; }
  const std::vector<Capacity>& weight() const noexcept { return weight_; }
  NodeId root() const noexcept { return root_; }

  /// Edges as (child, parent, weight), ordered by child id.
  std::vector<TreeEdge> edges() const;
  std::vector<std::vector<std::pair<NodeId, Capacity>>> adjacency() const;
  Capacity total_weight() const noexcept;

  /// Hop distance between two nodes.
  int distance(NodeId a, NodeId b) const;
  /// Nodes on the root side of edge (child, parent[child]) are excluded;
  /// returns the subtree hanging below `child` as an indicator.
  std::vector<char> subtree_indicator(NodeId child) const;

  friend bool operator==(const CutTree&, const CutTree&) = default;

 private:
  void index();

  std::vector<NodeId> parent_;
  std::vector<Capacity> weight_;
  std::vector<int> depth_;
  NodeId root_ = -1;
};

/// Tree over the blocks of a node partition (intermediate Gomory-Hu state).
struct SuperNodeTree {
  Partition blocks;
  std::vector<TreeEdge> tree_edges;  // endpoints are block ids

  /// Bottleneck of the block path between the blocks of s and t, with the
  /// union of blocks on s's side. nullopt if s and t share a block.
  std::optional<CutQuery> query(NodeId s, NodeId t) const;
  /// All blocks singletons: the equivalent CutTree rooted at node 0.
  CutTree to_cut_tree() const;
};

/// Instrumentation for the tree builders.
struct BuildStats {
  long flow_calls = 0;           // all max-flow invocations
  long capped_calls = 0;         // calls that stopped at the cap
  Capacity flow_value_sum = 0;   // sum over uncapped calls
  long aux_edges = 0;            // sum of auxiliary-graph edge counts

  // Hybrid only.
  Capacity degree_threshold = 0;
  long high_degree_nodes = 0;    // |{v : deg v > d}|
  long stage1_calls = 0;
  long stage2_calls = 0;
  Capacity stage2_flow_sum = 0;
};

/// Classical Gomory-Hu: n-1 max-flow calls, each on the auxiliary graph in
/// which every component of the super-node tree outside the split block is
/// merged into one node.
CutTree gomory_hu(const Graph& g, BuildStats* stats = nullptr);

/// Gusfield's variant: every max-flow call runs on g itself.
CutTree gusfield(const Graph& g, BuildStats* stats = nullptr);

/// k-partial tree by a truncated Gomory-Hu execution with flow calls capped
/// at k+1. Pairs with connectivity > k end up in a common block.
SuperNodeTree partial_tree(const Graph& g, Capacity k, BuildStats* stats = nullptr);

/// ceil(sqrt(total capacity)), at least 1.
Capacity default_degree_threshold(const Graph& g);

/// Two-stage construction: a d-partial tree, then Gomory-Hu steps resumed
/// inside the remaining non-singleton blocks (which hold only nodes of
/// degree > d). d defaults to default_degree_threshold(g).
CutTree hybrid_cut_tree(const Graph& g, std::optional<Capacity> d = std::nullopt,
                        BuildStats* stats = nullptr);

/// Bottleneck value on the s-u path and the component of s after removing
/// the bottleneck edge. Ties go to the edge closest to s.
CutQuery tree_query(const CutTree& t, NodeId s, NodeId u);

/// matrix[s][u] = tree_query(t, s, u).value, diagonal 0.
std::vector<std::vector<Capacity>> all_pairs_matrix(const CutTree& t);

void save_tree(const CutTree& t, std::ostream& out);
std::string tree_to_text(const CutTree& t);
CutTree load_tree(std::istream& in);
CutTree load_tree_text(const std::string& text);
CutTree load_tree_file(const std::string& path);

void save_super_node_tree(const SuperNodeTree& t, std::ostream& out);

}  // namespace ghct
