#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ghct/graph.hpp"

namespace ghct {

/// Flow does not satisfy conservation or capacity constraints.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FlowResult {
  Capacity value = 0;
  /// True iff the requested cap was reached; value is then a lower bound.
  bool capped = false;
  /// Indicator of the source side of a minimum cut: the nodes reachable from
  /// s in the final residual network. Empty when capped.
  std::vector<char> cut_side;
  /// Net flow on each graph edge, positive in the u -> v direction.
  std::vector<Capacity> edge_flows;

  std::vector<NodeId> cut_nodes() const;
};

/// Exact integral s-t max-flow by blocking flows on level graphs. With `cap`
/// set, stops as soon as the flow value reaches cap.
FlowResult max_flow(const Graph& g, NodeId s, NodeId t,
                    std::optional<Capacity> cap = std::nullopt);

struct FlowPath {
  std::vector<NodeId> nodes;  // s ... t
  Capacity units = 0;
};

/// Splits a feasible s-t flow into simple paths; cycles are discarded.
/// Throws IntegrityError if the flow violates conservation or capacities.
std::vector<FlowPath> flow_decompose(const Graph& g, const FlowResult& fr,
                                     NodeId s, NodeId t);

/// Net outflow of s; throws IntegrityError unless every node other than
/// s and t is balanced and every edge flow respects its capacity and
/// direction.
Capacity check_flow(const Graph& g, const std::vector<Capacity>& edge_flows,
                    NodeId s, NodeId t);

}  // namespace ghct
