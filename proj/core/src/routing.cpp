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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

#include "roadchange/errors.hpp"

namespace roadchange {
namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

WeightedGraph WeightedGraph::from_lengths(RoadGraph graph) {
  WeightedGraph out;
  out.weights.reserve(graph.edge_count());
  out.source_edge.reserve(graph.edge_count());
  for (const RoadEdge& e : graph.edges()) {
    out.weights.push_back(e.length);
    out.source_edge.push_back(e.id);
  }
  out.graph = std::move(graph);
  return out;
}

Router::Router(const WeightedGraph& graph) {
  const RoadGraph& g = graph.graph;
  if (graph.weights.size() != g.edge_count()) {
    throw std::invalid_argument("one weight per edge required");
  }
  std::vector<std::size_t> degree(g.node_count(), 0);
  for (const RoadEdge& e : g.edges()) {
    const double w = graph.weights[e.id];
    if (!(w >= 0.0)) throw std::invalid_argument("edge weights must be non-negative");
    ++degree[e.a];
    if (e.b != e.a) ++degree[e.b];
  }
  offsets_.assign(g.node_count() + 1, 0);
  for (std::size_t i = 0; i < degree.size(); ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  arcs_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const RoadEdge& e : g.edges()) {
    const double w = graph.weights[e.id];
    arcs_[fill[e.a]++] = {e.b, w};
    if (e.b != e.a) arcs_[fill[e.b]++] = {e.a, w};
  }
  // Sorted adjacency makes tie-breaking by node id a simple scan.
  for (std::size_t n = 0; n < degree.size(); ++n) {
    std::sort(arcs_.begin() + static_cast<std::ptrdiff_t>(offsets_[n]),
              arcs_.begin() + static_cast<std::ptrdiff_t>(offsets_[n + 1]),
              [](const Arc& x, const Arc& y) {
                return std::pair(x.to, x.weight) < std::pair(y.to, y.weight);
              });
  }
}

std::vector<double> Router::distances_from(NodeId src) const {
  if (src < 0 || static_cast<std::size_t>(src) >= node_count()) {
    throw UnknownNode("unknown source node " + std::to_string(src));
  }
  std::vector<double> dist(node_count(), kInf);
  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[src] = 0.0;
  queue.emplace(0.0, src);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (std::size_t i = offsets_[u]; i < offsets_[u + 1]; ++i) {
      const Arc& arc = arcs_[i];
      const double nd = d + arc.weight;
      if (nd < dist[arc.to]) {
        dist[arc.to] = nd;
        queue.emplace(nd, arc.to);
      }
    }
  }
  return dist;
}

PathResult Router::shortest_path(NodeId src, NodeId dst) const {
  if (dst < 0 || static_cast<std::size_t>(dst) >= node_count()) {
    throw UnknownNode("unknown destination node " + std::to_string(dst));
  }
  const std::vector<double> from_src = distances_from(src);
  PathResult result;
  if (from_src[dst] == kInf) return result;
  const std::vector<double> to_dst = distances_from(dst);
  const double total = from_src[dst];
  const double tol = 1e-9 * std::max(1.0, total);

  auto tight = [&](NodeId u, const Arc& arc) {
    return std::abs(from_src[u] + arc.weight + to_dst[arc.to] - total) <= tol;
  };
  // Whether dst is reachable from v along tight arcs avoiding the current
  // path. Only needed after zero-weight arcs, which may lead into cycles.
  std::vector<bool> on_path(node_count(), false);
  std::vector<bool> seen;
  std::vector<NodeId> stack;
  auto completes = [&](NodeId v) {
    seen.assign(node_count(), false);
    stack = {v};
    seen[v] = true;
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      if (x == dst) return true;
      for (std::size_t i = offsets_[x]; i < offsets_[x + 1]; ++i) {
        const Arc& arc = arcs_[i];
        if (!seen[arc.to] && !on_path[arc.to] && tight(x, arc)) {
          seen[arc.to] = true;
          stack.push_back(arc.to);
        }
      }
    }
    return false;
  };

  // Walk forward choosing the smallest node id that still lies on a shortest
  // path; this yields the lexicographically smallest optimal sequence.
  NodeId u = src;
  on_path[u] = true;
  result.node_sequence.push_back(u);
  while (u != dst) {
    NodeId next = -1;
    for (std::size_t i = offsets_[u]; i < offsets_[u + 1] && next < 0; ++i) {
      const Arc& arc = arcs_[i];
      if (on_path[arc.to] || !tight(u, arc)) continue;
      if (arc.weight > 0.0 || completes(arc.to)) next = arc.to;
    }
    if (next < 0) throw std::logic_error("shortest path reconstruction failed");
    on_path[next] = true;
    result.node_sequence.push_back(next);
    u = next;
  }
  result.status = PathStatus::kFound;
  result.total_weight = total;
  return result;
}

PathResult shortest_path(const WeightedGraph& graph, NodeId src, NodeId dst) {
  return Router(graph).shortest_path(src, dst);
}

std::vector<std::pair<NodeId, NodeId>> sample_pairs(const RoadGraph& graph, std::size_t n,
                                                    std::uint64_t seed, double min_separation) {
  const std::size_t count = graph.node_count();
  if (count < 2) throw std::invalid_argument("pair sampling needs at least 2 nodes");
  double min_x = kInf, min_y = kInf, max_x = -kInf, max_y = -kInf;
  for (const RoadNode& node : graph.nodes()) {
    min_x = std::min(min_x, node.position.x);
    min_y = std::min(min_y, node.position.y);
    max_x = std::max(max_x, node.position.x);
    max_y = std::max(max_y, node.position.y);
  }
  if (std::hypot(max_x - min_x, max_y - min_y) < min_separation) {
    throw Infeasible("minimum separation exceeds the extent of the graph");
  }

  std::mt19937_64 rng(seed);
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(n);
  const std::size_t budget = 100 * n + 10000;
  for (std::size_t attempt = 0; attempt < budget && pairs.size() < n; ++attempt) {
    const auto a = static_cast<NodeId>(rng() % count);
    const auto b = static_cast<NodeId>(rng() % count);
    if (a == b) continue;
    if (distance(graph.node(a).position, graph.node(b).position) < min_separation) continue;
    pairs.emplace_back(a, b);
  }
  if (pairs.size() < n) {
    throw Infeasible("could not draw " + std::to_string(n) + " pairs at separation " +
                     std::to_string(min_separation));
  }
  return pairs;
}

}  // namespace roadchange
