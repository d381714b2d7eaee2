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

// Fusion of a change graph with a prior vector road network.
//
// Each changed sub-segment is attached to its nearest road edge and every
// attachment raises that edge's travel-cost multiplier by
//   alpha * s / d^2
// where s is the sub-segment length and d its midpoint's distance to the
// edge, clamped below at d_min. An infinite alpha removes the edge.

#ifndef ROADCHANGE_OSM_FUSION_HPP_
#define ROADCHANGE_OSM_FUSION_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "roadchange/graph_compare.hpp"
#include "roadchange/road_graph.hpp"
#include "roadchange/routing.hpp"

namespace roadchange {

struct OsmNetwork {
  RoadGraph graph;
  // Features that were not LineString / MultiLineString, or had unusable
  // geometry.
  std::int64_t skipped_features = 0;
};

// Builds a road graph from a GeoJSON FeatureCollection in the working planar
// frame. Vertices closer than snap_tolerance (transitively) merge into one
// location. Line endpoints and vertices shared by several lines become nodes;
// lines are split at every node they pass through. Nodes and edges are
// numbered in feature order.
//
// Throws MalformedDocument when the document is not a FeatureCollection and
// EmptyNetwork when no feature yields an edge.
OsmNetwork load_osm_roads(const nlohmann::json& doc, double snap_tolerance = 1.0);
OsmNetwork load_osm_roads(const std::filesystem::path& path, double snap_tolerance = 1.0);

struct DamageAssignment {
  std::int64_t diff_segment = 0;  // sub-segment id
  EdgeId osm_edge = 0;
  double s_e_diff = 0.0;  // sub-segment length
  double d = 0.0;         // midpoint-to-edge distance, clamped to >= d_min
  // Overrides the global impact factor for this assignment when set.
  std::optional<double> alpha;

  friend bool operator==(const DamageAssignment&, const DamageAssignment&) = default;
};

struct AssignmentResult {
  std::vector<DamageAssignment> assigned;  // in sub-segment order
  std::vector<std::int64_t> unassigned;    // sub-segment ids
};

// Attaches every sub-segment to the edge whose polyline is nearest to its
// midpoint; exact ties go to the lower edge id. Segments farther than
// max_assign_dist from every edge are reported unassigned. Throws
// std::invalid_argument unless max_assign_dist > 0 and d_min > 0.
AssignmentResult assign_damage(const SubSegmentSet& diff, const RoadGraph& osm,
                               double max_assign_dist, double d_min = 1.0);

struct CostedGraph {
  RoadGraph base;
  double alpha = 1.0;
  // Indexed by edge id.
  std::vector<double> edge_costs;
  std::vector<bool> removed;
  // Raw alpha * s / d^2 terms per edge, before any flooring.
  std::vector<std::vector<double>> contributions;
};

// Cost multiplier of each edge: C_e = 1 + sum(max(0, c - 1)) over its raw
// contributions c. A single contribution therefore gives max(1, c), and
// contributions that are each <= 1 leave the edge untouched. An edge with an
// infinite-alpha assignment is removed. Throws std::invalid_argument unless
// alpha >= 1 (per-assignment overrides included), or when an assignment
// refers to a missing edge.
CostedGraph apply_damage_costs(const RoadGraph& osm, std::span<const DamageAssignment> assignments,
                               double alpha);

// Retained edges weighted by length * C_e; removed edges are dropped. Node
// ids are unchanged.
WeightedGraph routing_view(const CostedGraph& costed);

}  // namespace roadchange

#endif  // ROADCHANGE_OSM_FUSION_HPP_
