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


#ifndef ROADCHANGE_CONNECTIVITY_HPP_
#define ROADCHANGE_CONNECTIVITY_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "roadchange/geometry.hpp"
#include "roadchange/road_graph.hpp"
#include "roadchange/routing.hpp"

namespace roadchange {

enum class PairOutcome {
  kCorrect,
  kNoConnection,
  kTooShort,
  kTooLong,
  kExcluded,  // no truth path, or an endpoint with no truth node nearby
};

struct ConnectivityOptions {
  double ratio_low = 0.9;
  double ratio_high = 1.1;
  // Pair endpoints snap to the nearest node within this distance.
  double map_tolerance = 30.0;
};

// Route comparison summary. Percentages are over the evaluated pairs
// (pair_count) and sum to 100, or are all 0 when pair_count is 0.
struct ConnectivityReport {
  double correct = 0.0;
  double no_connections = 0.0;
  double too_short = 0.0;
  double too_long = 0.0;
  std::int64_t pair_count = 0;
  std::int64_t excluded_pairs = 0;
  // Pairs counted as no-connection because an endpoint had no predicted
  // node within map_tolerance.
  std::int64_t mapping_failures = 0;
  std::vector<PairOutcome> outcomes;  // one per input pair

  friend bool operator==(const ConnectivityReport&, const ConnectivityReport&) = default;
};

using PointPair = std::pair<Point, Point>;

// Nearest node to p within `tolerance` (ties to the lower id), or -1.
NodeId nearest_node(const RoadGraph& graph, Point p, double tolerance);

// Node positions of sampled id pairs, the usual input of connectivity_metrics.
std::vector<PointPair> pair_positions(const RoadGraph& graph,
                                      std::span<const std::pair<NodeId, NodeId>> pairs);

// Classifies each pair by comparing the predicted shortest-path weight w_p
// with the truth weight w_t: no predicted path is a no-connection,
// w_p < ratio_low * w_t too short, w_p > ratio_high * w_t too long, anything
// else correct. Throws std::invalid_argument unless
// 0 < ratio_low <= 1 <= ratio_high.
ConnectivityReport connectivity_metrics(const WeightedGraph& predicted, const WeightedGraph& truth,
                                        std::span<const PointPair> pairs,
                                        const ConnectivityOptions& options = {});

}  // namespace roadchange

#endif  // ROADCHANGE_CONNECTIVITY_HPP_
