#include <gtest/gtest.h>

#include <sstream>

#include "ghct/cuttree.hpp"
#include "ghct/generate.hpp"
#include "ghct/rng.hpp"
#include "oracle.hpp"

using namespace ghct;

namespace {

Graph two_components() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  return g;
}

}  // namespace

TEST(CutTree, PathGraph) {
  const CutTree t = gomory_hu(path_graph(3));
  for (const TreeEdge& e : t.edges()) EXPECT_EQ(e.weight, 1);
  EXPECT_EQ(tree_query(t, 0, 2).value, 1);
}

TEST(CutTree, WeightedPathQuery) {
  // Path 0 -1- 1 -5- 2.
  const CutTree t = CutTree::from_edges(3, {{0, 1, 1}, {1, 2, 5}});
  const auto m = all_pairs_matrix(t);
  EXPECT_EQ(m[0][1], 1);
  EXPECT_EQ(m[0][2], 1);
  EXPECT_EQ(m[1][2], 5);
  EXPECT_TRUE(all_pairs_matrix(CutTree::from_edges(1, {})).size() == 1u);
}

TEST(CutTree, TriangleAllTwo) {
  const auto m = all_pairs_matrix(gomory_hu(clique_graph(3)));
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a != b) EXPECT_EQ(m[a][b], 2);
    }
  }
}

TEST(CutTree, QueryReturnsMinimumCut) {
  const Graph g = clique_graph(4);
  const CutTree t = hybrid_cut_tree(g, 2);
  const CutQuery q = tree_query(t, 0, 3);
  EXPECT_EQ(q.value, 3);
  std::vector<char> side(4, 0);
  for (NodeId v : q.cut_side) side[static_cast<std::size_t>(v)] = 1;
  EXPECT_TRUE(side[0]);
  EXPECT_FALSE(side[3]);
  EXPECT_EQ(g.cut_capacity(side), 3);
}

TEST(CutTree, StarIsItsOwnTree) {
  const CutTree t = gomory_hu(star_graph(4));
  EXPECT_EQ(t.total_weight(), 4);
  for (const TreeEdge& e : t.edges()) EXPECT_TRUE(e.a == 0 || e.b == 0);
}

TEST(CutTree, DisconnectedGraphGetsZeroEdges) {
  const Graph g = two_components();
  const CutTree t = gusfield(g);
  EXPECT_EQ(tree_query(t, 0, 4).value, 0);
  EXPECT_EQ(tree_query(t, 3, 4).value, 1);
  EXPECT_EQ(tree_query(t, 0, 2).value, 2);
}

TEST(CutTree, BuildersAgreeWithOracle) {
  Rng rng(31);
  for (int round = 0; round < 25; ++round) {
    const int n = static_cast<int>(rng.between(2, 20));
    const Graph g = random_gnm(n, static_cast<int>(rng.between(0, std::min(60, n * (n - 1) / 2))), rng);
    const auto flows = oracle::all_pairs(g);
    EXPECT_TRUE(oracle::is_cut_equivalent(g, gomory_hu(g), flows));
    EXPECT_TRUE(oracle::is_cut_equivalent(g, gusfield(g), flows));
    EXPECT_TRUE(oracle::is_cut_equivalent(g, hybrid_cut_tree(g), flows));
  }
}

TEST(CutTree, WeightedEdges) {
  Rng rng(8);
  for (int round = 0; round < 15; ++round) {
    Graph g(10);
    for (int i = 0; i < 25; ++i) {
      const auto u = static_cast<NodeId>(rng.below(10));
      const auto v = static_cast<NodeId>(rng.below(10));
      if (u != v) g.add_edge(u, v, rng.between(1, 7));
    }
    const auto flows = oracle::all_pairs(g);
    EXPECT_TRUE(oracle::is_cut_equivalent(g, gomory_hu(g), flows));
    EXPECT_TRUE(oracle::is_cut_equivalent(g, hybrid_cut_tree(g, 3), flows));
  }
}

TEST(CutTree, RejectsNodeCapacities) {
  Graph g = path_graph(3);
  g.set_node_cap(1, 1);
  EXPECT_THROW(gomory_hu(g), UnsupportedError);
  EXPECT_THROW(hybrid_cut_tree(g), UnsupportedError);
  Graph d(2);
  d.add_directed_edge(0, 1, 1);
  EXPECT_THROW(gusfield(d), UnsupportedError);
}

TEST(PartialTree, CliqueIsOneBlock) {
  const SuperNodeTree st = partial_tree(clique_graph(4), 2);
  EXPECT_EQ(st.blocks.block_count(), 1);
  EXPECT_FALSE(st.query(0, 1).has_value());
}

TEST(PartialTree, SeparatesLowConnectivityPairs) {
  // Two K5 joined by a single edge: connectivity 1 across, 4 inside.
  Graph g(10);
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      g.add_edge(a, b);
      g.add_edge(a + 5, b + 5);
    }
  }
  g.add_edge(4, 5);
  const SuperNodeTree st = partial_tree(g, 2);
  EXPECT_EQ(st.blocks.block_count(), 2);
  const auto q = st.query(0, 9);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(q->value, 1);
  EXPECT_THROW(partial_tree(g, 0), ContractError);
}

TEST(PartialTree, ContractAgainstOracle) {
  // Pairs in different blocks get exact values <= k; pairs in one block
  // have connectivity > k.
  Rng rng(77);
  for (int round = 0; round < 20; ++round) {
    const Graph g = random_gnm(14, static_cast<int>(rng.between(10, 40)), rng);
    const auto flows = oracle::all_pairs(g);
    const Capacity k = rng.between(1, 4);
    const SuperNodeTree st = partial_tree(g, k);
    for (NodeId s = 0; s < 14; ++s) {
      for (NodeId t = s + 1; t < 14; ++t) {
        const auto q = st.query(s, t);
        if (q) {
          EXPECT_EQ(q->value, flows[s][t]);
          EXPECT_LE(q->value, k);
        } else {
          EXPECT_GT(flows[s][t], k);
        }
      }
    }
  }
}

TEST(Hybrid, StageTwoAccounting) {
  Rng rng(12);
  for (int round = 0; round < 20; ++round) {
    const Graph g = random_gnm(40, 150, rng);
    BuildStats stats;
    hybrid_cut_tree(g, std::nullopt, &stats);
    EXPECT_EQ(stats.degree_threshold, default_degree_threshold(g));
    EXPECT_LE(stats.stage2_calls, stats.high_degree_nodes);
    EXPECT_LE(stats.stage2_flow_sum, 2 * g.total_capacity());
  }
}

TEST(TreeIo, RoundTripAndErrors) {
  const CutTree t = gomory_hu(clique_graph(5));
  EXPECT_EQ(load_tree_text(tree_to_text(t)), t);
  EXPECT_THROW(load_tree_text("t 3\ne 1 0 1\n"), ParseError);          // too few edges
  EXPECT_THROW(load_tree_text("t 3\ne 1 0 1\ne 0 1 1\n"), ParseError); // not a tree
}
