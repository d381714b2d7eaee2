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

#ifndef ROADCHANGE_ROUTING_HPP_
#define ROADCHANGE_ROUTING_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "roadchange/road_graph.hpp"

namespace roadchange {

// A road graph with one non-negative travel weight per edge.
struct WeightedGraph {
  RoadGraph graph;
  std::vector<double> weights;  // indexed by edge id
  // Edge id in the graph this view was derived from, indexed by edge id.
  std::vector<EdgeId> source_edge;

  // Weight of every edge equals its polyline length.
  static WeightedGraph from_lengths(RoadGraph graph);
};

enum class PathStatus { kFound, kNoPath };

struct PathResult {
  PathStatus status = PathStatus::kNoPath;
  double total_weight = 0.0;
  std::vector<NodeId> node_sequence;
};

// Dijkstra over an undirected weighted graph. Holds only the adjacency, so a
// router can be reused for many queries against the same graph.
class Router {
 public:
  // Throws std::invalid_argument on negative or NaN weights or when the
  // weight count does not match the edge count.
  explicit Router(const WeightedGraph& graph);

  // Minimum-weight path. Among equal-weight paths the lexicographically
  // smallest node sequence is returned. Throws UnknownNode.
  PathResult shortest_path(NodeId src, NodeId dst) const;

  // Shortest distance from src to every node (+inf when unreachable).
  std::vector<double> distances_from(NodeId src) const;

  std::size_t node_count() const { return offsets_.size() - 1; }

 private:
  struct Arc {
    NodeId to;
    double weight;
  };
  std::vector<std::size_t> offsets_;
  std::vector<Arc> arcs_;
};

PathResult shortest_path(const WeightedGraph& graph, NodeId src, NodeId dst);

// n ordered node pairs (src != dst) drawn uniformly with replacement among
// pairs at least min_separation apart (euclidean), reproducible from seed.
// Throws std::invalid_argument for graphs with fewer than 2 nodes and
// Infeasible when no valid pair exists or the retry budget runs out.
std::vector<std::pair<NodeId, NodeId>> sample_pairs(const RoadGraph& graph, std::size_t n,
                                                    std::uint64_t seed, double min_separation);

}  // namespace roadchange

#endif  // ROADCHANGE_ROUTING_HPP_
