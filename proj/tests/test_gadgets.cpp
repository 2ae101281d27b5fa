#include <gtest/gtest.h>

#include <sstream>

#include "ghct/gadgets.hpp"
#include "ghct/rng.hpp"
#include "oracle.hpp"

using namespace ghct;

namespace {

BitVector bits(const std::string& s) {
  BitVector v;
  for (char c : s) v.push_back(c == '1' ? 1 : 0);
  return v;
}

OVInstance make_ov(std::vector<std::string> u1, std::vector<std::string> u2, std::vector<std::string> u3) {
  OVInstance ov;
  ov.dim = static_cast<int>(u1.front().size());
  for (auto& s : u1) ov.sets[0].push_back(bits(s));
  for (auto& s : u2) ov.sets[1].push_back(bits(s));
  for (auto& s : u3) ov.sets[2].push_back(bits(s));
  return ov;
}

// U1 = {110, 011}, U2 = {101, 001}, U3 = {111, 101}.
OVInstance reference_instance() { return make_ov({"110", "011"}, {"101", "001"}, {"111", "101"}); }

}  // namespace

TEST(OVGadget, NodeCount) {
  const OVGadget g = build_3ov_intermediate(reference_instance());
  EXPECT_EQ(g.main_nodes, 22);
  EXPECT_EQ(g.graph.node_count(), 22 + static_cast<int>(g.subdivision.size()));
  // C_i^0 - beta' and C_i^1 - beta_i, for every beta and coordinate.
  EXPECT_EQ(g.subdivision.size(), 2u * 2 * 3);
}

TEST(OVGadget, IntermediateCapacities) {
  const OVInstance ov = reference_instance();
  const OVGadget g = build_3ov_intermediate(ov);
  const int n = 2, d = 3;
  for (NodeId v : g.alpha) EXPECT_EQ(g.graph.node_cap(v), 1);
  for (NodeId v : g.gamma) EXPECT_EQ(g.graph.node_cap(v), 1);
  for (const auto& pair : g.coord_bit) {
    EXPECT_EQ(g.graph.node_cap(pair[0]), n);
    EXPECT_EQ(g.graph.node_cap(pair[1]), n);
  }
  for (NodeId v : g.coord) EXPECT_EQ(g.graph.node_cap(v), n);
  for (const auto& b : g.beta_coord) {
    for (NodeId v : b) EXPECT_EQ(g.graph.node_cap(v), 1);
  }
  for (NodeId v : g.beta_prime) EXPECT_EQ(g.graph.node_cap(v), d - 1);
  EXPECT_EQ(g.graph.node_cap(g.v_b), n * (d - 1));
  for (NodeId v : g.subdivision) EXPECT_EQ(g.graph.node_cap(v), 1);
}

TEST(OVGadget, DirectedEdgesOnlyFromV1) {
  const OVGadget mid = build_3ov_intermediate(reference_instance());
  std::vector<char> is_alpha(static_cast<std::size_t>(mid.graph.node_count()), 0);
  for (NodeId v : mid.alpha) is_alpha[static_cast<std::size_t>(v)] = 1;
  int directed = 0;
  for (const Edge& e : mid.graph.edges()) {
    if (!e.directed) continue;
    ++directed;
    EXPECT_TRUE(is_alpha[static_cast<std::size_t>(e.u)]);
  }
  EXPECT_EQ(directed, 2 * 3);  // one per alpha and coordinate
  EXPECT_FALSE(build_3ov_final(reference_instance()).graph.has_directed_edges());
}

TEST(OVGadget, FinalScalesCapacities) {
  const OVGadget mid = build_3ov_intermediate(reference_instance());
  const OVGadget fin = build_3ov_final(reference_instance());
  const int n = 2, d = 3;
  for (NodeId v = 0; v < fin.graph.node_count(); ++v) {
    const bool terminal = std::count(fin.alpha.begin(), fin.alpha.end(), v) || std::count(fin.gamma.begin(), fin.gamma.end(), v);
    const Capacity expect = *mid.graph.node_cap(v) * (terminal ? 1 : 2 * n);
    EXPECT_EQ(fin.graph.node_cap(v), expect);
    EXPECT_LE(*fin.graph.node_cap(v), 2 * n * n * d);
  }
}

TEST(OVGadget, ReferenceInstanceFlowIsFive) {
  const OVInstance ov = reference_instance();
  EXPECT_TRUE(ov.orthogonal(0, 1, 1));  // alpha, beta~, gamma~
  const OVGadget g = build_3ov_intermediate(ov);
  EXPECT_EQ(node_capacitated_flow(g.graph, g.alpha[0], g.gamma[1]), 5);
  EXPECT_EQ(oracle::node_capacitated_flow(g.graph, g.alpha[0], g.gamma[1]), 5);
  const OVGadget fin = build_3ov_final(ov);
  EXPECT_LE(node_capacitated_flow(fin.graph, fin.alpha[0], fin.gamma[1]), 23);
}

TEST(OVGadget, AllOnesIntermediateFlowAtLeastND) {
  const OVInstance ov = make_ov({"1111", "1111"}, {"1111", "1111"}, {"1111", "1111"});
  const OVGadget g = build_3ov_intermediate(ov);
  for (NodeId a : g.alpha) {
    for (NodeId c : g.gamma) EXPECT_GE(node_capacitated_flow(g.graph, a, c), 2 * 4);
  }
  EXPECT_FALSE(solve_3ov_bruteforce(ov).has_value());
  const OVGadgetReport r = check_gadget(ov);
  EXPECT_GE(r.min_flow, r.threshold);
  EXPECT_TRUE(r.instance_equivalence);
  EXPECT_TRUE(r.per_pair_equivalence);
}

TEST(OVGadget, ZeroVectorsGiveTriple) {
  const OVInstance ov = make_ov({"000", "000"}, {"000", "000"}, {"000", "000"});
  ASSERT_TRUE(solve_3ov_bruteforce(ov).has_value());
  const OVGadgetReport r = check_gadget(ov);
  EXPECT_LT(r.min_flow, r.threshold);
  EXPECT_TRUE(r.instance_equivalence);
  const OVInstance one_zero = make_ov({"101", "000"}, {"111", "111"}, {"111", "111"});
  EXPECT_EQ(solve_3ov_bruteforce(one_zero), (std::array<int, 3>{1, 0, 0}));
}

TEST(OVGadget, SplitFlowMatchesOracle) {
  Rng rng(17);
  for (int round = 0; round < 5; ++round) {
    const OVInstance ov = random_ov(2, 3, rng);
    const OVGadget g = build_3ov_final(ov);
    for (NodeId a : g.alpha) {
      for (NodeId c : g.gamma) {
        EXPECT_EQ(node_capacitated_flow(g.graph, a, c), oracle::node_capacitated_flow(g.graph, a, c));
      }
    }
  }
}

TEST(OVGadget, RejectsBadInstances) {
  OVInstance empty;
  empty.dim = 3;
  EXPECT_THROW(build_3ov_final(empty), ContractError);
  EXPECT_THROW(build_3ov_final(make_ov({"1"}, {"1"}, {"1"})), ContractError);
  EXPECT_THROW(build_3ov_final(make_ov({"11", "10"}, {"11"}, {"11", "01"})), ContractError);
}

TEST(OVGadget, FileRoundTrip) {
  const OVInstance ov = reference_instance();
  std::stringstream s;
  save_ov(ov, s);
  const OVInstance back = load_ov(s);
  EXPECT_EQ(back.dim, 3);
  EXPECT_EQ(back.sets, ov.sets);
  std::istringstream bad("ov 2 3\n110\n");
  EXPECT_THROW(load_ov(bad), ParseError);
}

TEST(BMMGadget, Identity) {
  const BoolMatrix id{{1, 0}, {0, 1}};
  const BMMGadget g = build_bmm_gadget(id, id);
  EXPECT_EQ(g.graph.node_count(), 6);
  EXPECT_GE(node_capacitated_flow(g.graph, g.a[0], g.c[0]), 4);
  EXPECT_LE(node_capacitated_flow(g.graph, g.a[0], g.c[1]), 2);
  EXPECT_TRUE(check_bmm(id, id).matches);
}

TEST(BMMGadget, AllOnes) {
  const BoolMatrix ones(3, std::vector<char>(3, 1));
  const BMMReport r = check_bmm(ones, ones);
  for (const auto& row : r.flows) {
    for (Capacity f : row) EXPECT_GE(f, 6);
  }
}

TEST(BMMGadget, RandomFiveByFive) {
  Rng rng(23);
  const BoolMatrix p = random_bool_matrix(5, rng), q = random_bool_matrix(5, rng);
  const BMMReport r = check_bmm(p, q);
  // Direct product, independent of the library helper.
  for (int i = 0; i < 5; ++i) {
    for (int k = 0; k < 5; ++k) {
      bool any = false;
      for (int j = 0; j < 5; ++j) any = any || (p[i][j] && q[j][k]);
      EXPECT_EQ(r.flows[i][k] >= 10, any);
    }
  }
  EXPECT_TRUE(r.matches);
  EXPECT_TRUE(r.dichotomy);
}

TEST(BMMGadget, RejectsNonSquare) {
  EXPECT_THROW(build_bmm_gadget({{1, 0}}, {{1, 0}}), ContractError);
  EXPECT_THROW(build_bmm_gadget({{1}}, {{1, 0}, {0, 1}}), ContractError);
}
