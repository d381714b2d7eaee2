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

#ifndef ROADCHANGE_ROAD_GRAPH_HPP_
#define ROADCHANGE_ROAD_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "roadchange/geometry.hpp"

namespace roadchange {

using NodeId = std::int64_t;
using EdgeId = std::int64_t;

struct RoadNode {
  NodeId id = 0;
  Point position;

  friend bool operator==(const RoadNode&, const RoadNode&) = default;
};

struct RoadEdge {
  EdgeId id = 0;
  NodeId a = 0;
  NodeId b = 0;
  // World-coordinate centreline; front() sits on node a, back() on node b.
  std::vector<Point> polyline;
  double length = 0.0;

  friend bool operator==(const RoadEdge&, const RoadEdge&) = default;
};

// Undirected spatial road graph. Node and edge ids are dense: the id of an
// element equals its index in nodes() / edges().
class RoadGraph {
 public:
  NodeId add_node(Point position);

  // Adds an edge between existing nodes. The polyline's first and last points
  // are pinned to the node positions; an empty or single-point polyline is
  // replaced by the straight segment a -> b. Throws UnknownNode.
  EdgeId add_edge(NodeId a, NodeId b, std::vector<Point> polyline = {});

  std::span<const RoadNode> nodes() const { return nodes_; }
  std::span<const RoadEdge> edges() const { return edges_; }
  const RoadNode& node(NodeId id) const;
  const RoadEdge& edge(EdgeId id) const;
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_node(NodeId id) const {
    return id >= 0 && static_cast<std::size_t>(id) < nodes_.size();
  }

  // Number of edge endpoints incident to each node; a self-loop counts twice.
  std::vector<int> degrees() const;

  double total_length() const;

  // Throws std::logic_error describing the first violated structural
  // invariant (ids, endpoint pinning, cached lengths).
  void validate() const;

  friend bool operator==(const RoadGraph&, const RoadGraph&) = default;

 private:
  std::vector<RoadNode> nodes_;
  std::vector<RoadEdge> edges_;
};

}  // namespace roadchange

#endif  // ROADCHANGE_ROAD_GRAPH_HPP_
