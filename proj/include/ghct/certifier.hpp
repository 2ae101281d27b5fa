#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghct/cuttree.hpp"
#include "ghct/graph.hpp"

namespace ghct {

/// Recursive centroid decomposition of a tree. Centroids are listed by
/// increasing depth, smallest id first within a depth.
struct CentroidPlan {
  std::vector<NodeId> order;
  std::vector<int> depth;                          // per node
  std::vector<std::vector<NodeId>> subtree_nodes;  // parallel to order, sorted

  int max_depth() const;
};

CentroidPlan centroid_decompose(const CutTree& t);

// ---------------------------------------------------------------------------
// Witness

struct ClaimedCut {
  NodeId neighbor = 0;            // u_k, tree neighbour of the centroid
  std::vector<NodeId> side;       // original nodes on u_k's side (sorted)
  Capacity value = 0;
};

/// `units` of flow from auxiliary node `from` to auxiliary node `to`.
struct FlowEntry {
  NodeId from = 0;
  NodeId to = 0;
  Capacity units = 0;
};

/// Arborescence given as (parent, child) arcs of the Eulerian transform.
struct DirectedTree {
  std::vector<std::pair<NodeId, NodeId>> arcs;
};

struct TreePacking {
  NodeId root = 0;
  std::vector<DirectedTree> trees;
};

/// One expansion step. Auxiliary node ids follow `blocks`: the expanded
/// super-node's members in ascending order, then one node per further block.
struct Expansion {
  NodeId centroid = 0;
  std::vector<std::vector<NodeId>> blocks;
  std::vector<ClaimedCut> cuts;
  std::vector<std::vector<FlowEntry>> flows;  // one bundle per cut
  std::optional<TreePacking> packing;
};

struct Witness {
  int node_count = 0;
  std::vector<Expansion> expansions;
};

struct ProveOptions {
  bool try_packing = true;
  int packing_attempts = 16;
  /// Packing is attempted only when the auxiliary graph's total capacity
  /// stays below this.
  Capacity packing_size_limit = 20000;
};

/// Builds a witness for candidate tree t. Throws ContractError if t is not a
/// spanning tree of g's node set.
Witness prove(const Graph& g, const CutTree& t, const ProveOptions& opts = {});

struct Verdict {
  bool accepted = false;
  int expansion = -1;   // failing expansion index, -1 if not expansion-specific
  std::string check;    // "malformed", "structure", "cut", "flow"
  std::string reason;

  explicit operator bool() const noexcept { return accepted; }
};

struct VerifyStats {
  std::vector<long> aux_edges;      // per expansion
  std::vector<long> cut_updates;    // per expansion, single-pass counter
  long packings_checked = 0;
  long bundles_checked = 0;
};

/// Checks every expansion of w against g and t: the tree-induced cuts in the
/// auxiliary graph must match t's weights, and the evidence must show flows
/// of at least those values. Rejects at the first failure.
Verdict verify(const Graph& g, const CutTree& t, const Witness& w,
               VerifyStats* stats = nullptr);

// ---------------------------------------------------------------------------
// Tree packings

/// Subdivides every unit of edge capacity with a fresh node and orients both
/// halves both ways. Node n+e is the midpoint of unit edge e (edges expanded
/// in order); arcs come four per unit edge.
Graph eulerian_transform(const Graph& h);

struct PackingCheck {
  bool ok = false;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

/// True iff the trees are pairwise arc-disjoint directed trees of
/// eulerian_transform(h) rooted at `root`, and every node v of h lies in at
/// least lambda[v] of them.
PackingCheck check_tree_packing(const Graph& h, NodeId root,
                                const std::vector<Capacity>& lambda,
                                const std::vector<DirectedTree>& trees);

/// Best-effort greedy packing meeting lambda; nullopt when it fails.
std::optional<TreePacking> greedy_tree_packing(const Graph& h, NodeId root,
                                               const std::vector<Capacity>& lambda,
                                               int attempts, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Audits

struct StretchReport {
  Capacity lhs = 0;            // sum over edges of cap * tree hop distance
  Capacity rhs_equality = 0;   // sum of tree weights
  Capacity rhs_bound = 0;      // 2 * total capacity
  bool ok = false;
};

StretchReport stretch_check(const Graph& g, const CutTree& t);

struct AuxSizeReport {
  std::vector<long> per_depth;  // edges of g surviving into auxiliary graphs
  long total = 0;
  long depth_bound = 0;         // 4m
  long total_bound = 0;         // 4m (ceil(log2 n) + 1)
  bool asserted = false;        // bounds are asserted for unit capacities only
  bool ok = true;
};

AuxSizeReport aux_size_audit(const Graph& g, const CutTree& t, const CentroidPlan& plan);

// ---------------------------------------------------------------------------
// Serialization

class WitnessFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string witness_to_json(const Witness& w);
Witness witness_from_json(const std::string& text);

}  // namespace ghct
