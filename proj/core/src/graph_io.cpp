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


#include "roadchange/graph_io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "roadchange/errors.hpp"
#include "roadchange/json_io.hpp"

namespace roadchange {
namespace {

using ojson = nlohmann::ordered_json;

ojson position(Point p) { return ojson::array({p.x, p.y}); }

ojson line_coordinates(std::span<const Point> pts) {
  ojson coords = ojson::array();
  for (Point p : pts) coords.push_back(position(p));
  return coords;
}

ojson feature(ojson geometry, ojson properties) {
  ojson f;
  f["type"] = "Feature";
  f["geometry"] = std::move(geometry);
  f["properties"] = std::move(properties);
  return f;
}

ojson collection(ojson features) {
  ojson doc;
  doc["type"] = "FeatureCollection";
  doc["schema_version"] = kSchemaVersion;
  doc["features"] = std::move(features);
  return doc;
}

ojson node_features(const RoadGraph& graph) {
  ojson features = ojson::array();
  for (const RoadNode& n : graph.nodes()) {
    ojson props;
    props["node_id"] = n.id;
    features.push_back(feature({{"type", "Point"}, {"coordinates", position(n.position)}},
                               std::move(props)));
  }
  return features;
}

ojson edge_geometry(const RoadEdge& e) {
  return {{"type", "LineString"}, {"coordinates", line_coordinates(e.polyline)}};
}

const nlohmann::json& properties_of(const nlohmann::json& feature) {
  static const nlohmann::json kEmpty = nlohmann::json::object();
  const auto it = feature.find("properties");
  return it != feature.end() && it->is_object() ? *it : kEmpty;
}

bool is_native_graph(const nlohmann::json& doc) {
  for (const auto& f : doc.at("features")) {
    if (f.is_object() && properties_of(f).contains("node_id")) return true;
  }
  return false;
}

std::int64_t int_property(const nlohmann::json& props, const char* key) {
  const auto it = props.find(key);
  if (it == props.end() || !it->is_number_integer()) {
    throw MalformedDocument(std::string("feature property '") + key + "' must be an integer");
  }
  return it->get<std::int64_t>();
}

Point read_position(const nlohmann::json& pos) {
  if (!pos.is_array() || pos.size() < 2 || !pos[0].is_number() || !pos[1].is_number()) {
    throw MalformedDocument("GeoJSON position must be an array of at least two numbers");
  }
  return {pos[0].get<double>(), pos[1].get<double>()};
}

struct NativeEdge {
  std::int64_t id;
  NodeId a;
  NodeId b;
  std::vector<Point> polyline;
  const nlohmann::json* props;
};

// Parses a document written by graph_to_geojson / costed_graph_to_geojson.
// Edge features are returned in id order alongside the graph.
std::pair<RoadGraph, std::vector<NativeEdge>> read_native(const nlohmann::json& doc) {
  std::vector<std::pair<std::int64_t, Point>> nodes;
  std::vector<NativeEdge> edges;
  for (const auto& f : doc.at("features")) {
    if (!f.is_object() || !f.contains("geometry") || !f["geometry"].is_object()) {
      throw MalformedDocument("graph feature without geometry");
    }
    const auto& geometry = f["geometry"];
    const std::string type = geometry.value("type", "");
    const nlohmann::json& props = properties_of(f);
    if (type == "Point") {
      nodes.emplace_back(int_property(props, "node_id"), read_position(geometry.at("coordinates")));
    } else if (type == "LineString") {
      NativeEdge e{int_property(props, "edge_id"), int_property(props, "node_a"),
                   int_property(props, "node_b"), {}, &props};
      const auto& coords = geometry.at("coordinates");
      if (!coords.is_array()) throw MalformedDocument("LineString coordinates must be an array");
      for (const auto& pos : coords) e.polyline.push_back(read_position(pos));
      edges.push_back(std::move(e));
    } else {
      throw MalformedDocument("unexpected geometry type '" + type + "' in graph document");
    }
  }
  std::sort(nodes.begin(), nodes.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::sort(edges.begin(), edges.end(),
            [](const NativeEdge& x, const NativeEdge& y) { return x.id < y.id; });
  RoadGraph graph;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].first != static_cast<std::int64_t>(i)) {
      throw MalformedDocument("node ids are not dense");
    }
    graph.add_node(nodes[i].second);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const NativeEdge& e = edges[i];
    if (e.id != static_cast<std::int64_t>(i)) throw MalformedDocument("edge ids are not dense");
    if (!graph.has_node(e.a) || !graph.has_node(e.b)) {
      throw MalformedDocument("edge refers to a missing node");
    }
    graph.add_edge(e.a, e.b, e.polyline);
  }
  return {std::move(graph), std::move(edges)};
}

void check_collection(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("type", "") != "FeatureCollection" ||
      !doc.contains("features") || !doc["features"].is_array()) {
    throw MalformedDocument("document is not a GeoJSON FeatureCollection");
  }
}

}  // namespace

nlohmann::ordered_json graph_to_geojson(const RoadGraph& graph) {
  ojson features = node_features(graph);
  for (const RoadEdge& e : graph.edges()) {
    ojson props;
    props["edge_id"] = e.id;
    props["node_a"] = e.a;
    props["node_b"] = e.b;
    props["length"] = e.length;
    features.push_back(feature(edge_geometry(e), std::move(props)));
  }
  return collection(std::move(features));
}

nlohmann::ordered_json graph_to_osm_geojson(const RoadGraph& graph) {
  ojson features = ojson::array();
  for (const RoadEdge& e : graph.edges()) {
    ojson props;
    props["osm_id"] = e.id;
    props["highway"] = "road";
    features.push_back(feature(edge_geometry(e), std::move(props)));
  }
  return collection(std::move(features));
}

nlohmann::ordered_json costed_graph_to_geojson(const CostedGraph& costed) {
  ojson features = node_features(costed.base);
  for (const RoadEdge& e : costed.base.edges()) {
    ojson props;
    props["edge_id"] = e.id;
    props["node_a"] = e.a;
    props["node_b"] = e.b;
    props["length"] = e.length;
    const bool removed = costed.removed[e.id];
    props["cost"] = removed ? ojson(nullptr) : ojson(costed.edge_costs[e.id]);
    props["removed"] = removed;
    features.push_back(feature(edge_geometry(e), std::move(props)));
  }
  ojson doc = collection(std::move(features));
  doc["alpha"] = number_or_inf(costed.alpha);
  return doc;
}

nlohmann::ordered_json segments_to_geojson(const SubSegmentSet& segments) {
  ojson features = ojson::array();
  for (const SubSegment& s : segments.segments) {
    ojson props;
    props["segment_id"] = s.id;
    props["parent_edge"] = s.parent_edge;
    props["index"] = s.index;
    props["length"] = s.length();
    const Point pts[] = {s.v1, s.v2};
    features.push_back(
        feature({{"type", "LineString"}, {"coordinates", line_coordinates(pts)}}, std::move(props)));
  }
  ojson doc = collection(std::move(features));
  doc["slice_length"] = segments.slice_length;
  return doc;
}

RoadGraph graph_from_geojson(const nlohmann::json& doc, double snap_tolerance) {
  check_collection(doc);
  if (is_native_graph(doc)) return read_native(doc).first;
  return load_osm_roads(doc, snap_tolerance).graph;
}

RoadGraph read_graph_file(const std::filesystem::path& path, double snap_tolerance) {
  return graph_from_geojson(read_json_file(path), snap_tolerance);
}

WeightedGraph weighted_graph_from_geojson(const nlohmann::json& doc, double snap_tolerance) {
  check_collection(doc);
  if (!is_native_graph(doc)) {
    return WeightedGraph::from_lengths(load_osm_roads(doc, snap_tolerance).graph);
  }
  auto [graph, edges] = read_native(doc);
  const bool costed = std::any_of(edges.begin(), edges.end(),
                                  [](const NativeEdge& e) { return e.props->contains("removed"); });
  if (!costed) return WeightedGraph::from_lengths(std::move(graph));
  CostedGraph view;
  view.alpha = doc.contains("alpha") ? parse_number_or_inf(doc["alpha"]) : 1.0;
  view.edge_costs.assign(edges.size(), 1.0);
  view.removed.assign(edges.size(), false);
  view.contributions.assign(edges.size(), {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const nlohmann::json& props = *edges[i].props;
    const auto removed = props.find("removed");
    if (removed == props.end() || !removed->is_boolean()) {
      throw MalformedDocument("costed edge without a boolean 'removed' property");
    }
    view.removed[i] = removed->get<bool>();
    if (view.removed[i]) {
      view.edge_costs[i] = std::numeric_limits<double>::infinity();
      continue;
    }
    const auto cost = props.find("cost");
    if (cost == props.end() || !cost->is_number() || !(cost->get<double>() >= 1.0)) {
      throw MalformedDocument("retained costed edge needs a numeric cost >= 1");
    }
    view.edge_costs[i] = cost->get<double>();
  }
  view.base = std::move(graph);
  return routing_view(view);
}

WeightedGraph read_weighted_graph_file(const std::filesystem::path& path, double snap_tolerance) {
  return weighted_graph_from_geojson(read_json_file(path), snap_tolerance);
}

nlohmann::ordered_json number_or_inf(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

double parse_number_or_inf(const nlohmann::json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    if (s == "inf" || s == "infinity" || s == "Infinity") {
      return std::numeric_limits<double>::infinity();
    }
  }
  throw ParseError("expected a number or \"inf\", got " + value.dump());
}

nlohmann::ordered_json metrics_to_json(const MatchMetrics& metrics) {
  ojson doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tp"] = metrics.tp;
  doc["fp"] = metrics.fp;
  doc["fn"] = metrics.fn;
  doc["precision"] = metrics.precision;
  doc["recall"] = metrics.recall;
  doc["f_score"] = metrics.f_score;
  return doc;
}

nlohmann::ordered_json connectivity_to_json(const ConnectivityReport& report) {
  ojson doc;
  doc["schema_version"] = kSchemaVersion;
  doc["correct"] = report.correct;
  doc["no_connections"] = report.no_connections;
  doc["too_short"] = report.too_short;
  doc["too_long"] = report.too_long;
  doc["pair_count"] = report.pair_count;
  doc["excluded_pairs"] = report.excluded_pairs;
  doc["mapping_failures"] = report.mapping_failures;
  return doc;
}

}  // namespace roadchange
