#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ghct/graph.hpp"
#include "ghct/rng.hpp"

namespace ghct {

using BitVector = std::vector<char>;  // entries 0 / 1

/// Three sets of n binary vectors of equal dimension.
struct OVInstance {
  int dim = 0;
  std::array<std::vector<BitVector>, 3> sets;

  int size() const { return static_cast<int>(sets[0].size()); }
  void validate() const;
  /// True iff no coordinate is 1 in all three vectors.
  bool orthogonal(int a, int b, int c) const;
};

/// Node roles of the 3OV gadget. Main nodes come first, laid out as
/// V1 | A (C_i^0, C_i^1 interleaved) | beta_i | beta' | v_B | B | V3,
/// followed by the capacity-1 subdivision nodes.
struct OVGadget {
  Graph graph;
  int main_nodes = 0;                      // n + 2d + nd + n + 1 + d + n
  std::vector<NodeId> alpha;               // V1
  std::vector<NodeId> gamma;               // V3
  std::vector<std::array<NodeId, 2>> coord_bit;    // A: C_i^0, C_i^1
  std::vector<std::vector<NodeId>> beta_coord;     // beta_i per beta
  std::vector<NodeId> beta_prime;
  NodeId v_b = -1;
  std::vector<NodeId> coord;               // B: C_i
  std::vector<NodeId> subdivision;
  Capacity infinity = 0;                   // capacity standing in for "uncapacitated"
};

/// G': directed alpha -> C_i^{alpha[i]} edges, node capacities 1 / d-1 / n / n(d-1).
OVGadget build_3ov_intermediate(const OVInstance& ov);
/// G: G' with directions dropped and every capacity outside V1 and V3 scaled by 2n.
OVGadget build_3ov_final(const OVInstance& ov);

/// First orthogonal triple in (U1, U2, U3) scan order, as indices.
std::optional<std::array<int, 3>> solve_3ov_bruteforce(const OVInstance& ov);

/// Max-flow between two nodes of a node-capacitated graph; the terminals'
/// own capacities are not enforced.
Capacity node_capacitated_flow(const Graph& g, NodeId s, NodeId t);

struct OVGadgetReport {
  int n = 0;
  int dim = 0;
  Capacity threshold = 0;                          // 2 n^2 d
  std::vector<std::vector<Capacity>> flows;        // [alpha][gamma] in G
  std::vector<std::vector<char>> pair_orthogonal;  // some beta orthogonal to (alpha, gamma)
  Capacity min_flow = 0;
  std::optional<std::array<int, 3>> triple;
  bool instance_equivalence = false;  // min >= threshold <=> no triple
  bool per_pair_equivalence = false;  // flow >= threshold <=> pair not orthogonal
  Capacity max_below_threshold = -1;  // largest sub-threshold value, -1 if none
};

OVGadgetReport check_gadget(const OVInstance& ov);

OVInstance random_ov(int n, int dim, Rng& rng, double one_probability = 0.5);

using BoolMatrix = std::vector<std::vector<char>>;

struct BMMGadget {
  Graph graph;
  std::vector<NodeId> a, b, c;
};

/// Tripartite A - B - C graph: a_i - b_j iff P[i][j], b_j - c_k iff Q[j][k];
/// middle nodes capacity 2n, outer nodes capacity 1.
BMMGadget build_bmm_gadget(const BoolMatrix& p, const BoolMatrix& q);

BoolMatrix boolean_product(const BoolMatrix& p, const BoolMatrix& q);

struct BMMReport {
  int n = 0;
  Capacity threshold = 0;                    // 2n
  std::vector<std::vector<Capacity>> flows;  // [a][c]
  BoolMatrix product;
  bool matches = false;     // (flow >= 2n) == product everywhere
  bool dichotomy = false;   // no flow equals 2n - 1
};

BMMReport check_bmm(const BoolMatrix& p, const BoolMatrix& q);

BoolMatrix random_bool_matrix(int n, Rng& rng, double one_probability = 0.5);

// Files: "ov <n> <d>" then 3n bitstring rows; "bmm <n>" then 2n rows (P then Q).
OVInstance load_ov(std::istream& in);
void save_ov(const OVInstance& ov, std::ostream& out);
std::pair<BoolMatrix, BoolMatrix> load_bmm(std::istream& in);
void save_bmm(const BoolMatrix& p, const BoolMatrix& q, std::ostream& out);

}  // namespace ghct
