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

#include "roadchange/road_graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "roadchange/errors.hpp"

namespace roadchange {

NodeId RoadGraph::add_node(Point position) {
  const NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({id, position});
  return id;
}

EdgeId RoadGraph::add_edge(NodeId a, NodeId b, std::vector<Point> polyline) {
  if (!has_node(a) || !has_node(b)) {
    throw UnknownNode("edge endpoint refers to a missing node");
  }
  const Point pa = nodes_[a].position;
  const Point pb = nodes_[b].position;
  if (polyline.size() < 2) {
    polyline = {pa, pb};
  } else {
    polyline.front() = pa;
    polyline.back() = pb;
  }
  const EdgeId id = static_cast<EdgeId>(edges_.size());
  const double length = polyline_length(polyline);
  edges_.push_back({id, a, b, std::move(polyline), length});
  return id;
}

const RoadNode& RoadGraph::node(NodeId id) const {
  if (!has_node(id)) throw UnknownNode("no node with id " + std::to_string(id));
  return nodes_[id];
}

const RoadEdge& RoadGraph::edge(EdgeId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= edges_.size()) {
    throw std::out_of_range("no edge with id " + std::to_string(id));
  }
  return edges_[id];
}

std::vector<int> RoadGraph::degrees() const {
  std::vector<int> deg(nodes_.size(), 0);
  for (const RoadEdge& e : edges_) {
    ++deg[e.a];
    ++deg[e.b];
  }
  return deg;
}

double RoadGraph::total_length() const {
  double total = 0.0;
  for (const RoadEdge& e : edges_) total += e.length;
  return total;
}

void RoadGraph::validate() const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id != static_cast<NodeId>(i)) throw std::logic_error("node ids are not dense");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const RoadEdge& e = edges_[i];
    if (e.id != static_cast<EdgeId>(i)) throw std::logic_error("edge ids are not dense");
    if (!has_node(e.a) || !has_node(e.b)) throw std::logic_error("edge endpoint missing");
    if (e.polyline.size() < 2) throw std::logic_error("edge polyline has fewer than 2 points");
    if (!(e.polyline.front() == nodes_[e.a].position) ||
        !(e.polyline.back() == nodes_[e.b].position)) {
      throw std::logic_error("edge polyline not pinned to its nodes");
    }
    const double expected = polyline_length(e.polyline);
    if (std::abs(expected - e.length) > 1e-6 * std::max(1.0, expected)) {
      throw std::logic_error("edge length out of sync with polyline");
    }
  }
}

}  // namespace roadchange
