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


// GeoJSON and JSON report encodings.
//
// Graphs are written as a FeatureCollection holding one Point feature per
// node (property node_id) followed by one LineString feature per edge
// (properties edge_id, node_a, node_b, length). Documents in that form read
// back into an identical graph; any other FeatureCollection of lines is read
// as a road network through load_osm_roads.

#ifndef ROADCHANGE_GRAPH_IO_HPP_
#define ROADCHANGE_GRAPH_IO_HPP_

#include <filesystem>

#include <nlohmann/json.hpp>

#include "roadchange/connectivity.hpp"
#include "roadchange/graph_compare.hpp"
#include "roadchange/osm_fusion.hpp"
#include "roadchange/road_graph.hpp"
#include "roadchange/routing.hpp"

namespace roadchange {

nlohmann::ordered_json graph_to_geojson(const RoadGraph& graph);

// Plain road network: one LineString per edge with properties osm_id and
// highway, no node features. Reads back through load_osm_roads.
nlohmann::ordered_json graph_to_osm_geojson(const RoadGraph& graph);

// Edge features additionally carry cost (null when removed) and removed.
nlohmann::ordered_json costed_graph_to_geojson(const CostedGraph& costed);

// One LineString per sub-segment with segment_id, parent_edge, index and
// length; slice_length is stored at the top level.
nlohmann::ordered_json segments_to_geojson(const SubSegmentSet& segments);

// Throws MalformedDocument on schema violations and EmptyNetwork for a
// foreign document without usable lines.
RoadGraph graph_from_geojson(const nlohmann::json& doc, double snap_tolerance = 1.0);
RoadGraph read_graph_file(const std::filesystem::path& path, double snap_tolerance = 1.0);

// Costed documents become their routing view (length * cost, removed edges
// dropped); every other graph is weighted by length.
WeightedGraph weighted_graph_from_geojson(const nlohmann::json& doc, double snap_tolerance = 1.0);
WeightedGraph read_weighted_graph_file(const std::filesystem::path& path,
                                       double snap_tolerance = 1.0);

// Infinite values are written as the string "inf".
nlohmann::ordered_json number_or_inf(double value);
// Accepts a number or the strings "inf" / "infinity". Throws ParseError.
double parse_number_or_inf(const nlohmann::json& value);

nlohmann::ordered_json metrics_to_json(const MatchMetrics& metrics);
nlohmann::ordered_json connectivity_to_json(const ConnectivityReport& report);

}  // namespace roadchange

#endif  // ROADCHANGE_GRAPH_IO_HPP_
