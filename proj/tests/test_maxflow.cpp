#include <gtest/gtest.h>

#include "ghct/generate.hpp"
#include "ghct/maxflow.hpp"
#include "ghct/rng.hpp"
#include "oracle.hpp"

using namespace ghct;

TEST(MaxFlow, SmallCases) {
  EXPECT_EQ(max_flow(path_graph(3), 0, 2).value, 1);
  EXPECT_EQ(max_flow(clique_graph(4), 0, 3).value, 3);
  EXPECT_EQ(max_flow(cycle_graph(6), 0, 3).value, 2);

  Graph two(4);  // two components
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  const FlowResult fr = max_flow(two, 0, 3);
  EXPECT_EQ(fr.value, 0);
  EXPECT_EQ(fr.cut_nodes(), (std::vector<NodeId>{0, 1}));
}

TEST(MaxFlow, DirectedEdges) {
  Graph g(3);
  g.add_directed_edge(0, 1, 5);
  g.add_directed_edge(1, 2, 3);
  EXPECT_EQ(max_flow(g, 0, 2).value, 3);
  EXPECT_EQ(max_flow(g, 2, 0).value, 0);
}

TEST(MaxFlow, CapStopsEarly) {
  const Graph k = clique_graph(6);
  const FlowResult fr = max_flow(k, 0, 1, 3);
  EXPECT_TRUE(fr.capped);
  EXPECT_GE(fr.value, 3);
  EXPECT_TRUE(fr.cut_side.empty());
  const FlowResult full = max_flow(k, 0, 1, 6);
  EXPECT_FALSE(full.capped);
  EXPECT_EQ(full.value, 5);
}

TEST(MaxFlow, MatchesOracleOnRandomGraphs) {
  Rng rng(2024);
  for (int round = 0; round < 40; ++round) {
    const int n = static_cast<int>(rng.between(2, 12));
    const int max_m = n * (n - 1) / 2;
    const Graph g = random_gnm(n, static_cast<int>(rng.between(0, max_m)), rng);
    for (int pair = 0; pair < 5; ++pair) {
      const auto s = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));
      auto t = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));
      if (s == t) t = (t + 1) % n;
      const FlowResult fr = max_flow(g, s, t);
      EXPECT_EQ(fr.value, oracle::min_cut_bruteforce(g, s, t));
      EXPECT_EQ(fr.value, g.cut_capacity(fr.cut_side));
      EXPECT_TRUE(fr.cut_side[static_cast<std::size_t>(s)]);
      EXPECT_FALSE(fr.cut_side[static_cast<std::size_t>(t)]);
      EXPECT_EQ(check_flow(g, fr.edge_flows, s, t), fr.value);
    }
  }
}

TEST(MaxFlow, WeightedMatchesEdmondsKarp) {
  Rng rng(99);
  for (int round = 0; round < 30; ++round) {
    const int n = static_cast<int>(rng.between(2, 25));
    Graph g(n);
    const int m = static_cast<int>(rng.between(1, 3 * n));
    for (int i = 0; i < m; ++i) {
      const auto u = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));
      const auto v = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));
      if (u == v) continue;
      if (rng.coin()) {
        g.add_edge(u, v, rng.between(1, 9));
      } else {
        g.add_directed_edge(u, v, rng.between(1, 9));
      }
    }
    EXPECT_EQ(max_flow(g, 0, n - 1).value, oracle::max_flow(g, 0, n - 1));
  }
}

TEST(MaxFlow, CheckFlowRejectsBrokenFlows) {
  const Graph g = path_graph(3);
  EXPECT_EQ(check_flow(g, {1, 1}, 0, 2), 1);
  EXPECT_THROW(check_flow(g, {1, 0}, 0, 2), IntegrityError);  // imbalance at 1
  EXPECT_THROW(check_flow(g, {2, 2}, 0, 2), IntegrityError);  // over capacity
  Graph d(2);
  d.add_directed_edge(0, 1, 1);
  EXPECT_THROW(check_flow(d, {-1}, 1, 0), IntegrityError);    // against direction
}

TEST(MaxFlow, DecomposeCoversValue) {
  Rng rng(5);
  for (int round = 0; round < 20; ++round) {
    const Graph g = random_gnm(15, 40, rng);
    const FlowResult fr = max_flow(g, 0, 14);
    const auto paths = flow_decompose(g, fr, 0, 14);
    Capacity units = 0;
    for (const auto& p : paths) {
      ASSERT_GE(p.nodes.size(), 2u);
      EXPECT_EQ(p.nodes.front(), 0);
      EXPECT_EQ(p.nodes.back(), 14);
      units += p.units;
    }
    EXPECT_EQ(units, fr.value);
  }
}
