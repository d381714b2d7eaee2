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


#include "roadchange/connectivity.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace roadchange {
namespace {

// Single-source distances, computed once per distinct source node.
class DistanceCache {
 public:
  explicit DistanceCache(const WeightedGraph& graph) : router_(graph) {}

  double distance(NodeId src, NodeId dst) {
    auto it = rows_.find(src);
    if (it == rows_.end()) it = rows_.emplace(src, router_.distances_from(src)).first;
    return it->second[dst];
  }

 private:
  Router router_;
  std::map<NodeId, std::vector<double>> rows_;
};

}  // namespace

NodeId nearest_node(const RoadGraph& graph, Point p, double tolerance) {
  NodeId best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (const RoadNode& n : graph.nodes()) {
    const double d = distance(p, n.position);
    if (d < best_d) {
      best_d = d;
      best = n.id;
    }
  }
  return best_d <= tolerance ? best : -1;
}

std::vector<PointPair> pair_positions(const RoadGraph& graph,
                                      std::span<const std::pair<NodeId, NodeId>> pairs) {
  std::vector<PointPair> out;
  out.reserve(pairs.size());
  for (auto [a, b] : pairs) out.emplace_back(graph.node(a).position, graph.node(b).position);
  return out;
}

ConnectivityReport connectivity_metrics(const WeightedGraph& predicted, const WeightedGraph& truth,
                                        std::span<const PointPair> pairs,
                                        const ConnectivityOptions& options) {
  if (!(options.ratio_low > 0.0 && options.ratio_low <= 1.0 && options.ratio_high >= 1.0)) {
    throw std::invalid_argument("ratio bounds must satisfy 0 < low <= 1 <= high");
  }
  DistanceCache truth_dist(truth);
  DistanceCache pred_dist(predicted);
  ConnectivityReport report;
  std::int64_t counts[4] = {0, 0, 0, 0};
  for (const auto& [from, to] : pairs) {
    const NodeId ts = nearest_node(truth.graph, from, options.map_tolerance);
    const NodeId td = nearest_node(truth.graph, to, options.map_tolerance);
    double w_t = std::numeric_limits<double>::infinity();
    if (ts >= 0 && td >= 0) w_t = truth_dist.distance(ts, td);
    if (std::isinf(w_t)) {
      report.outcomes.push_back(PairOutcome::kExcluded);
      ++report.excluded_pairs;
      continue;
    }
    PairOutcome outcome;
    const NodeId ps = nearest_node(predicted.graph, from, options.map_tolerance);
    const NodeId pd = nearest_node(predicted.graph, to, options.map_tolerance);
    if (ps < 0 || pd < 0) {
      outcome = PairOutcome::kNoConnection;
      ++report.mapping_failures;
    } else {
      const double w_p = pred_dist.distance(ps, pd);
      if (std::isinf(w_p)) {
        outcome = PairOutcome::kNoConnection;
      } else if (w_p < options.ratio_low * w_t) {
        outcome = PairOutcome::kTooShort;
      } else if (w_p > options.ratio_high * w_t) {
        outcome = PairOutcome::kTooLong;
      } else {
        outcome = PairOutcome::kCorrect;
      }
    }
    ++counts[static_cast<int>(outcome)];
    report.outcomes.push_back(outcome);
    ++report.pair_count;
  }
  if (report.pair_count > 0) {
    const double scale = 100.0 / static_cast<double>(report.pair_count);
    report.correct = static_cast<double>(counts[0]) * scale;
    report.no_connections = static_cast<double>(counts[1]) * scale;
    report.too_short = static_cast<double>(counts[2]) * scale;
    report.too_long = static_cast<double>(counts[3]) * scale;
  }
  return report;
}

}  // namespace roadchange
