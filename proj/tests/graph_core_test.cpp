#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "congestion_lab/generators.hpp"
#include "congestion_lab/graph.hpp"
#include "congestion_lab/json_io.hpp"
#include "congestion_lab/rng.hpp"
#include "congestion_lab/sssp.hpp"
#include "test_util.hpp"

using namespace conlab;

TEST(Graph, RejectsInvalidInput) {
  EXPECT_THROW(Graph(0, {}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 0, 1.0}}), std::invalid_argument);             // self loop
  EXPECT_THROW(Graph(2, {{0, 1, 1.0}, {1, 0, 1.0}}), std::invalid_argument);  // duplicate
  EXPECT_THROW(Graph(2, {{0, 1, 0.0}}), std::invalid_argument);             // zero length
  EXPECT_THROW(Graph(2, {{0, 1, -1.0}}), std::invalid_argument);            // negative
  EXPECT_THROW(Graph(2, {{0, 2, 1.0}}), std::invalid_argument);             // id range
  // rotation listing a non-neighbor
  EXPECT_THROW(Graph(3, {{0, 1, 1.0}},
                     std::vector<std::vector<NodeId>>{{1}, {0}, {0}}),
               std::invalid_argument);
  // layers disagreeing with root distance
  EXPECT_THROW(Graph(3, {{0, 1, 1.0}, {1, 2, 1.0}}, std::nullopt,
                     std::vector<int>{0, 1, 1}, NodeId{0}),
               std::invalid_argument);
}

TEST(Graph, AdjacencyIsSortedAndComplete) {
  Graph g(4, {{2, 1, 1.0}, {0, 3, 2.0}, {0, 1, 1.0}});
  EXPECT_EQ(g.degree(0), 2);
  auto nb = g.neighbors(0);
  EXPECT_EQ(nb[0].to, 1);
  EXPECT_EQ(nb[1].to, 3);
  EXPECT_DOUBLE_EQ(nb[1].length, 2.0);
  EXPECT_EQ(g.edges()[0].u, 0);  // canonical order
}

TEST(BfsSssp, PathGraph) {
  auto g = testutil::path_graph(3);
  auto r = bfs_sssp(g, 0);
  EXPECT_EQ(r.dist, (std::vector<double>{0, 1, 2}));
  EXPECT_EQ(r.sigma, (std::vector<double>{1, 1, 1}));
}

TEST(BfsSssp, CycleFourHasTwoGeodesicsToAntipode) {
  auto g = testutil::cycle_graph(4);
  auto r = bfs_sssp(g, 0);
  EXPECT_EQ(r.dist, (std::vector<double>{0, 1, 2, 1}));
  EXPECT_EQ(r.sigma, (std::vector<double>{1, 1, 2, 1}));
  EXPECT_EQ(r.preds[2].size(), 2u);
}

TEST(BfsSssp, DisconnectedUsesSentinel) {
  Graph g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  auto r = bfs_sssp(g, 0);
  EXPECT_EQ(r.dist[2], kUnreachable);
  EXPECT_EQ(r.sigma[2], 0.0);
  EXPECT_THROW(bfs_sssp(g, 7), std::invalid_argument);
}

TEST(DijkstraSssp, TriangleTieDetection) {
  Graph tie(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 2.0}});
  auto r = dijkstra_sssp(tie, 0);
  EXPECT_DOUBLE_EQ(r.dist[2], 2.0);
  EXPECT_DOUBLE_EQ(r.sigma[2], 2.0);

  Graph notie(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 2.5}});
  auto r2 = dijkstra_sssp(notie, 0);
  EXPECT_DOUBLE_EQ(r2.dist[2], 2.0);
  EXPECT_DOUBLE_EQ(r2.sigma[2], 1.0);
}

TEST(DijkstraSssp, MatchesBfsOnUnitLengths) {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    auto g = testutil::er_connected(4 + static_cast<int>(seed % 9), 0.4, seed);
    for (NodeId s = 0; s < g.node_count(); ++s) {
      auto a = bfs_sssp(g, s);
      auto b = dijkstra_sssp(g, s);
      EXPECT_EQ(a.dist, b.dist);
      EXPECT_EQ(a.sigma, b.sigma);
    }
  }
}

TEST(SsspInvariants, SigmaIsSumOverPredecessors) {
  auto g = testutil::er_connected(10, 0.35, 99);
  for (NodeId s = 0; s < g.node_count(); ++s) {
    auto r = bfs_sssp(g, s);
    EXPECT_EQ(r.dist[s], 0.0);
    EXPECT_EQ(r.sigma[s], 1.0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (r.preds[v].empty()) continue;
      double sum = 0.0;
      for (NodeId u : r.preds[v]) {
        sum += r.sigma[u];
        EXPECT_DOUBLE_EQ(r.dist[v], r.dist[u] + 1.0);
      }
      EXPECT_DOUBLE_EQ(r.sigma[v], sum);
    }
  }
}

TEST(DijkstraSssp, WeightedSigmaConsistency) {
  // perturb lengths but keep deliberate symmetric ties via repeated values
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = testutil::er_connected(10, 0.4, seed);
    Rng rng(seed * 31);
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
      edges.push_back({e.u, e.v, 0.5 + 0.25 * static_cast<double>(rng.below(4))});
    Graph w(g.node_count(), std::move(edges));
    for (NodeId s = 0; s < w.node_count(); ++s) {
      auto r = dijkstra_sssp(w, s);
      for (NodeId v = 0; v < w.node_count(); ++v) {
        if (r.preds[v].empty()) continue;
        double sum = 0.0;
        for (NodeId u : r.preds[v]) sum += r.sigma[u];
        EXPECT_NEAR(r.sigma[v], sum, 1e-12 * sum);
        for (NodeId u : r.preds[v]) {
          double len = 0.0;
          for (const auto& nb : w.neighbors(u))
            if (nb.to == v) len = nb.length;
          EXPECT_LE(std::abs(r.dist[v] - (r.dist[u] + len)), 1e-12 * r.dist[v]);
        }
      }
    }
  }
}

TEST(Diameter, SmallGraphs) {
  EXPECT_DOUBLE_EQ(diameter(testutil::path_graph(3), false), 2.0);
  EXPECT_DOUBLE_EQ(diameter(testutil::cycle_graph(5), false), 2.0);
  Graph disc(3, {{0, 1, 1.0}});
  EXPECT_THROW(diameter(disc, false), std::runtime_error);
}

TEST(Diameter, InvariantUnderRelabeling) {
  auto g = testutil::er_connected(9, 0.4, 7);
  // relabel v -> (v + 3) mod n
  const NodeId n = g.node_count();
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    edges.push_back({static_cast<NodeId>((e.u + 3) % n), static_cast<NodeId>((e.v + 3) % n), 1.0});
  Graph h(n, std::move(edges));
  EXPECT_DOUBLE_EQ(diameter(g, false), diameter(h, false));
}

TEST(Ball, RadiusZeroAndIdentity) {
  auto g = testutil::cycle_graph(6);
  auto b0 = ball(g, 2, 0);
  EXPECT_EQ(b0.node_count(), 1);
  EXPECT_EQ(b0.edge_count(), 0);

  auto whole = ball(g, 2, 3);  // radius = eccentricity
  EXPECT_EQ(whole.node_count(), 6);
  EXPECT_EQ(whole.edge_count(), 6);
  EXPECT_DOUBLE_EQ(diameter(whole, false), 3.0);
}

TEST(Ball, NodeSetMatchesBfsDistances) {
  auto g = testutil::er_connected(12, 0.3, 3);
  auto r = bfs_sssp(g, 0);
  for (int radius = 0; radius <= 4; ++radius) {
    auto b = ball(g, 0, radius);
    int expect = 0;
    for (double d : r.dist)
      if (d <= radius) ++expect;
    EXPECT_EQ(b.node_count(), expect);
    EXPECT_EQ(*b.root(), 0);
    EXPECT_EQ(b.layer(0), 0);
  }
}

TEST(Sphere, CountsAndCenter) {
  auto g = testutil::cycle_graph(8);
  EXPECT_EQ(sphere(g, 0, 0), (std::vector<NodeId>{0}));
  EXPECT_EQ(sphere(g, 0, 2).size(), 2u);
}

TEST(Sphere, RegularTreeSphereSizes) {
  // |S_p| = k (k-1)^(p-1)
  auto g = gen_regular_tree(3, 3);
  EXPECT_EQ(sphere(g, 0, 1).size(), 3u);
  EXPECT_EQ(sphere(g, 0, 2).size(), 6u);
  EXPECT_EQ(sphere(g, 0, 3).size(), 12u);
}

TEST(DegreeStats, NamedExamples) {
  auto c4 = testutil::cycle_graph(4);
  auto s = degree_stats(c4);
  EXPECT_EQ(s.min_degree, 2);
  EXPECT_EQ(s.max_degree, 2);
  EXPECT_DOUBLE_EQ(s.mean_degree, 2.0);

  auto star = testutil::star_graph(4);
  auto t = degree_stats(star);
  EXPECT_EQ(t.min_degree, 1);
  EXPECT_EQ(t.max_degree, 4);
  EXPECT_DOUBLE_EQ(t.mean_degree, 8.0 / 5.0);
}

TEST(JsonIo, RoundTripIsByteStable) {
  auto star = testutil::star_graph(4);
  std::string a = to_json(star);
  Graph back = from_json(a);
  std::string b = to_json(back);
  EXPECT_EQ(a, b);
  EXPECT_EQ(back.node_count(), star.node_count());
  EXPECT_TRUE(back.has_rotation());
  EXPECT_EQ(a.back(), '\n');
}

TEST(JsonIo, RejectsMalformedInput) {
  EXPECT_THROW(from_json("{"), std::runtime_error);
  EXPECT_THROW(from_json(R"({"n":2,"edges":[[0,1,-1.0]]})"), std::runtime_error);
  EXPECT_THROW(from_json(R"({"n":3,"edges":[[0,1,1.0]],"rotation":[[1],[0],[0]]})"),
               std::runtime_error);
  EXPECT_THROW(from_json(R"({"n":2,"edges":[[0,1]]})"), std::runtime_error);
}
