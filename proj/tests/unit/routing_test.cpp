// Copyright 2026 The roadchange Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "roadchange/routing.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "roadchange/errors.hpp"
#include "roadchange/osm_fusion.hpp"

namespace roadchange {
namespace {

using testing::bellman_ford;
using testing::kInf;
using testing::random_weighted_graph;

WeightedGraph diamond() {
  RoadGraph g;
  g.add_node({0, 0});
  g.add_node({10, 10});
  g.add_node({10, -10});
  g.add_node({20, 0});
  g.add_edge(0, 1);
  g.add_edge(1, 3);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  return WeightedGraph::from_lengths(std::move(g));
}

RoadGraph grid_graph(int n, double spacing) {
  RoadGraph g;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) g.add_node({c * spacing, r * spacing});
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c + 1 < n) g.add_edge(r * n + c, r * n + c + 1);
      if (r + 1 < n) g.add_edge(r * n + c, (r + 1) * n + c);
    }
  }
  return g;
}

TEST(ShortestPathTest, SingleEdge) {
  WeightedGraph g;
  testing::add_segment(g.graph, {0, 0}, {1, 0});
  g.weights = {7.0};
  g.source_edge = {0};
  const PathResult r = shortest_path(g, 0, 1);
  EXPECT_EQ(r.status, PathStatus::kFound);
  EXPECT_EQ(r.total_weight, 7.0);
  EXPECT_EQ(r.node_sequence, (std::vector<NodeId>{0, 1}));
  const PathResult self = shortest_path(g, 1, 1);
  EXPECT_EQ(self.total_weight, 0.0);
  EXPECT_EQ(self.node_sequence, (std::vector<NodeId>{1}));
}

TEST(ShortestPathTest, DisconnectedIsNoPath) {
  WeightedGraph g = WeightedGraph::from_lengths(RoadGraph{});
  g.graph.add_node({0, 0});
  g.graph.add_node({5, 0});
  const PathResult r = shortest_path(g, 0, 1);
  EXPECT_EQ(r.status, PathStatus::kNoPath);
  EXPECT_TRUE(r.node_sequence.empty());
}

TEST(ShortestPathTest, ErrorCases) {
  WeightedGraph g = diamond();
  EXPECT_THROW(shortest_path(g, 0, 9), UnknownNode);
  EXPECT_THROW(shortest_path(g, -1, 2), UnknownNode);
  g.weights[1] = -1.0;
  EXPECT_THROW(Router{g}, std::invalid_argument);
  g.weights.pop_back();
  EXPECT_THROW(Router{g}, std::invalid_argument);
}

TEST(ShortestPathTest, EqualPathsPickLexicographicSequence) {
  const PathResult r = shortest_path(diamond(), 0, 3);
  EXPECT_EQ(r.node_sequence, (std::vector<NodeId>{0, 1, 3}));
  EXPECT_NEAR(r.total_weight, 2 * std::sqrt(200.0), 1e-12);
  EXPECT_EQ(shortest_path(diamond(), 3, 0).node_sequence, (std::vector<NodeId>{3, 1, 0}));
}

TEST(ShortestPathTest, CostlyEdgeForcesDetour) {
  const WeightedGraph base = diamond();
  const std::vector<DamageAssignment> damage = {{0, 0, 5.0, 1.0, std::nullopt}};
  const WeightedGraph costed = routing_view(apply_damage_costs(base.graph, damage, 1.0));
  EXPECT_NEAR(costed.weights[0], 5.0 * std::sqrt(200.0), 1e-12);
  const PathResult r = shortest_path(costed, 0, 3);
  EXPECT_EQ(r.node_sequence, (std::vector<NodeId>{0, 2, 3}));
  EXPECT_NEAR(r.total_weight, 2 * std::sqrt(200.0), 1e-12);
  const PathResult to_1 = shortest_path(costed, 0, 1);
  EXPECT_EQ(to_1.node_sequence, (std::vector<NodeId>{0, 2, 3, 1}));
}

TEST(ShortestPathTest, MatchesBellmanFord) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = testing::uniform_int(rng, 2, 50);
    const WeightedGraph g = random_weighted_graph(rng, n, testing::uniform_int(rng, 0, 3 * n));
    const Router router(g);
    for (NodeId s = 0; s < n; ++s) {
      const std::vector<double> expect = bellman_ford(g, s);
      EXPECT_EQ(router.distances_from(s), expect);
      for (NodeId t = 0; t < n; ++t) {
        const PathResult r = router.shortest_path(s, t);
        if (expect[t] == kInf) {
          EXPECT_EQ(r.status, PathStatus::kNoPath);
          continue;
        }
        ASSERT_EQ(r.status, PathStatus::kFound);
        EXPECT_EQ(r.total_weight, expect[t]);
        ASSERT_FALSE(r.node_sequence.empty());
        EXPECT_EQ(r.node_sequence.front(), s);
        EXPECT_EQ(r.node_sequence.back(), t);
        // Consecutive nodes share an edge and the walked weight is optimal.
        double walked = 0.0;
        for (std::size_t k = 1; k < r.node_sequence.size(); ++k) {
          double best = kInf;
          for (const RoadEdge& e : g.graph.edges()) {
            const NodeId u = r.node_sequence[k - 1], v = r.node_sequence[k];
            if ((e.a == u && e.b == v) || (e.a == v && e.b == u)) {
              best = std::min(best, g.weights[e.id]);
            }
          }
          ASSERT_NE(best, kInf);
          walked += best;
        }
        EXPECT_NEAR(walked, expect[t], 1e-9 * std::max(1.0, expect[t]));
      }
    }
  }
}

TEST(SamplePairsTest, DeterministicAndSeparated) {
  const RoadGraph g = grid_graph(10, 10.0);
  const auto a = sample_pairs(g, 500, 9, 35.0);
  EXPECT_EQ(a, sample_pairs(g, 500, 9, 35.0));
  EXPECT_NE(a, sample_pairs(g, 500, 10, 35.0));
  for (auto [s, t] : a) {
    EXPECT_NE(s, t);
    EXPECT_GE(distance(g.node(s).position, g.node(t).position), 35.0);
  }
}

TEST(SamplePairsTest, Infeasible) {
  const RoadGraph g = grid_graph(3, 10.0);
  EXPECT_THROW(sample_pairs(g, 10, 0, 100.0), Infeasible);
  RoadGraph one;
  one.add_node({0, 0});
  EXPECT_THROW(sample_pairs(one, 1, 0, 0.0), std::invalid_argument);
  EXPECT_TRUE(sample_pairs(g, 0, 0, 0.0).empty());
}

TEST(SamplePairsTest, EndpointsFollowUniformPairDistribution) {
  const RoadGraph g = grid_graph(10, 10.0);
  const double sep = 15.0;
  const std::size_t n = 1000;
  const auto pairs = sample_pairs(g, n, 2026, sep);
  // Under uniform sampling over valid ordered pairs, node i is the source
  // with probability v_i / sum(v), where v_i counts its valid partners.
  std::vector<double> valid(g.node_count(), 0.0);
  double total = 0.0;
  for (const RoadNode& a : g.nodes()) {
    for (const RoadNode& b : g.nodes()) {
      if (a.id != b.id && distance(a.position, b.position) >= sep) valid[a.id] += 1.0;
    }
    total += valid[a.id];
  }
  std::vector<double> observed(g.node_count(), 0.0);
  for (auto [s, t] : pairs) {
    observed[s] += 1.0;
    observed[t] += 1.0;
  }
  double chi2 = 0.0;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    const double expected = 2.0 * n * valid[i] / total;
    chi2 += (observed[i] - expected) * (observed[i] - expected) / expected;
  }
  const double dof = static_cast<double>(g.node_count() - 1);
  EXPECT_LT(chi2, dof + 3.0 * std::sqrt(2.0 * dof));
}

}  // namespace
}  // namespace roadchange
