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


#include "roadchange/osm_fusion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "roadchange/errors.hpp"
#include "roadchange/json_io.hpp"

namespace roadchange {
namespace {

using CellKey = std::uint64_t;

CellKey pack_cell(std::int64_t cx, std::int64_t cy) {
  return (static_cast<std::uint64_t>(cx) << 32) ^ (static_cast<std::uint64_t>(cy) & 0xffffffffu);
}

std::int64_t cell_coord(double v, double cell) {
  return static_cast<std::int64_t>(std::floor(v / cell));
}

Point parse_position(const nlohmann::json& pos) {
  if (!pos.is_array() || pos.size() < 2 || !pos[0].is_number() || !pos[1].is_number()) {
    throw MalformedDocument("GeoJSON position must be an array of at least two numbers");
  }
  const Point p{pos[0].get<double>(), pos[1].get<double>()};
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw MalformedDocument("GeoJSON position is not finite");
  }
  return p;
}

std::vector<Point> parse_line(const nlohmann::json& coords) {
  if (!coords.is_array()) throw MalformedDocument("LineString coordinates must be an array");
  std::vector<Point> line;
  line.reserve(coords.size());
  for (const auto& pos : coords) line.push_back(parse_position(pos));
  return line;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // The smaller index becomes the root, so each root is its set's first
  // member.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Cluster id (the index of the cluster's first vertex) for every vertex.
std::vector<std::size_t> snap_vertices(const std::vector<Point>& pts, double tolerance) {
  UnionFind sets(pts.size());
  if (tolerance > 0.0) {
    std::unordered_map<CellKey, std::vector<std::size_t>> grid;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::int64_t cx = cell_coord(pts[i].x, tolerance);
      const std::int64_t cy = cell_coord(pts[i].y, tolerance);
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
          auto it = grid.find(pack_cell(cx + dx, cy + dy));
          if (it == grid.end()) continue;
          for (std::size_t j : it->second) {
            if (distance(pts[i], pts[j]) <= tolerance) sets.unite(i, j);
          }
        }
      }
      grid[pack_cell(cx, cy)].push_back(i);
    }
  } else {
    std::unordered_map<double, std::unordered_map<double, std::size_t>> exact;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto [it, inserted] = exact[pts[i].x].emplace(pts[i].y, i);
      if (!inserted) sets.unite(i, it->second);
    }
  }
  std::vector<std::size_t> cluster(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) cluster[i] = sets.find(i);
  return cluster;
}

// Edge ids whose polyline pieces have a bounding box touching a cell.
class EdgeIndex {
 public:
  EdgeIndex(const RoadGraph& graph, double cell) : cell_(cell) {
    for (const RoadEdge& e : graph.edges()) {
      for (std::size_t k = 0; k + 1 < e.polyline.size(); ++k) {
        const Point a = e.polyline[k];
        const Point b = e.polyline[k + 1];
        const std::int64_t x0 = cell_coord(std::min(a.x, b.x), cell_);
        const std::int64_t x1 = cell_coord(std::max(a.x, b.x), cell_);
        const std::int64_t y0 = cell_coord(std::min(a.y, b.y), cell_);
        const std::int64_t y1 = cell_coord(std::max(a.y, b.y), cell_);
        for (std::int64_t cy = y0; cy <= y1; ++cy) {
          for (std::int64_t cx = x0; cx <= x1; ++cx) {
            auto& ids = cells_[pack_cell(cx, cy)];
            if (ids.empty() || ids.back() != e.id) ids.push_back(e.id);
          }
        }
      }
    }
  }

  // Sorted ids of every edge that might lie within `radius` of p.
  void candidates(Point p, double radius, std::vector<EdgeId>& out) const {
    out.clear();
    const std::int64_t x0 = cell_coord(p.x - radius, cell_);
    const std::int64_t x1 = cell_coord(p.x + radius, cell_);
    const std::int64_t y0 = cell_coord(p.y - radius, cell_);
    const std::int64_t y1 = cell_coord(p.y + radius, cell_);
    for (std::int64_t cy = y0; cy <= y1; ++cy) {
      for (std::int64_t cx = x0; cx <= x1; ++cx) {
        auto it = cells_.find(pack_cell(cx, cy));
        if (it != cells_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }

 private:
  double cell_;
  std::unordered_map<CellKey, std::vector<EdgeId>> cells_;
};

void check_alpha(double alpha) {
  if (!(alpha >= 1.0)) throw std::invalid_argument("impact factor alpha must be >= 1");
}

}  // namespace

OsmNetwork load_osm_roads(const nlohmann::json& doc, double snap_tolerance) {
  if (!(snap_tolerance >= 0.0)) throw std::invalid_argument("snap tolerance must be >= 0");
  if (!doc.is_object() || doc.value("type", "") != "FeatureCollection") {
    throw MalformedDocument("road document is not a GeoJSON FeatureCollection");
  }
  const auto features = doc.find("features");
  if (features == doc.end() || !features->is_array()) {
    throw MalformedDocument("FeatureCollection has no features array");
  }

  OsmNetwork out;
  std::vector<std::vector<Point>> lines;
  for (const auto& feature : *features) {
    if (!feature.is_object()) throw MalformedDocument("feature is not an object");
    const auto geometry = feature.find("geometry");
    if (geometry == feature.end() || !geometry->is_object()) {
      ++out.skipped_features;
      continue;
    }
    const std::string type = geometry->value("type", "");
    const auto coords = geometry->find("coordinates");
    if (type == "LineString" && coords != geometry->end()) {
      lines.push_back(parse_line(*coords));
    } else if (type == "MultiLineString" && coords != geometry->end() && coords->is_array()) {
      for (const auto& part : *coords) lines.push_back(parse_line(part));
    } else {
      ++out.skipped_features;
    }
  }

  std::vector<Point> vertices;
  for (const auto& line : lines) vertices.insert(vertices.end(), line.begin(), line.end());
  const std::vector<std::size_t> cluster = snap_vertices(vertices, snap_tolerance);

  // Cluster sequence of each line with consecutive repeats collapsed.
  std::vector<std::vector<std::size_t>> sequences;
  std::size_t offset = 0;
  for (const auto& line : lines) {
    std::vector<std::size_t> seq;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const std::size_t c = cluster[offset + i];
      if (seq.empty() || seq.back() != c) seq.push_back(c);
    }
    offset += line.size();
    if (seq.size() >= 2) sequences.push_back(std::move(seq));
  }

  std::unordered_map<std::size_t, int> uses;
  std::unordered_map<std::size_t, bool> is_node;
  for (const auto& seq : sequences) {
    for (std::size_t c : seq) ++uses[c];
    is_node[seq.front()] = true;
    is_node[seq.back()] = true;
  }
  for (const auto& [c, n] : uses) {
    if (n >= 2) is_node[c] = true;
  }

  std::unordered_map<std::size_t, NodeId> node_of;
  auto node_for = [&](std::size_t c) {
    auto [it, inserted] = node_of.emplace(c, 0);
    if (inserted) it->second = out.graph.add_node(vertices[c]);
    return it->second;
  };
  for (const auto& seq : sequences) {
    NodeId start = node_for(seq.front());
    std::vector<Point> polyline = {vertices[seq.front()]};
    for (std::size_t i = 1; i < seq.size(); ++i) {
      polyline.push_back(vertices[seq[i]]);
      if (is_node[seq[i]]) {
        const NodeId end = node_for(seq[i]);
        out.graph.add_edge(start, end, std::move(polyline));
        start = end;
        polyline = {vertices[seq[i]]};
      }
    }
  }
  if (out.graph.edge_count() == 0) {
    throw EmptyNetwork("road document contains no usable line features");
  }
  return out;
}

OsmNetwork load_osm_roads(const std::filesystem::path& path, double snap_tolerance) {
  const nlohmann::json doc = read_json_file(path);
  return load_osm_roads(doc, snap_tolerance);
}

AssignmentResult assign_damage(const SubSegmentSet& diff, const RoadGraph& osm,
                               double max_assign_dist, double d_min) {
  if (!(max_assign_dist > 0.0) || !std::isfinite(max_assign_dist)) {
    throw std::invalid_argument("max_assign_dist must be positive and finite");
  }
  if (!(d_min > 0.0)) throw std::invalid_argument("d_min must be > 0");
  AssignmentResult result;
  const EdgeIndex index(osm, max_assign_dist);
  std::vector<EdgeId> near;
  for (const SubSegment& seg : diff.segments) {
    const Point m = midpoint(seg.v1, seg.v2);
    index.candidates(m, max_assign_dist, near);
    double best = std::numeric_limits<double>::infinity();
    EdgeId best_edge = -1;
    for (EdgeId id : near) {
      const double d = point_polyline_distance(m, osm.edge(id).polyline);
      if (d < best) {
        best = d;
        best_edge = id;
      }
    }
    if (best_edge < 0 || best > max_assign_dist) {
      result.unassigned.push_back(seg.id);
      continue;
    }
    result.assigned.push_back({seg.id, best_edge, seg.length(), std::max(best, d_min), std::nullopt});
  }
  return result;
}

CostedGraph apply_damage_costs(const RoadGraph& osm, std::span<const DamageAssignment> assignments,
                               double alpha) {
  check_alpha(alpha);
  CostedGraph costed;
  costed.base = osm;
  costed.alpha = alpha;
  costed.edge_costs.assign(osm.edge_count(), 1.0);
  costed.removed.assign(osm.edge_count(), false);
  costed.contributions.assign(osm.edge_count(), {});
  for (const DamageAssignment& a : assignments) {
    if (a.osm_edge < 0 || static_cast<std::size_t>(a.osm_edge) >= osm.edge_count()) {
      throw std::invalid_argument("assignment refers to missing edge " + std::to_string(a.osm_edge));
    }
    const double factor = a.alpha.value_or(alpha);
    check_alpha(factor);
    if (!(a.d > 0.0)) throw std::invalid_argument("assignment distance must be > 0");
    costed.contributions[a.osm_edge].push_back(factor * a.s_e_diff / (a.d * a.d));
    if (std::isinf(factor)) costed.removed[a.osm_edge] = true;
  }
  for (std::size_t e = 0; e < osm.edge_count(); ++e) {
    if (costed.removed[e]) {
      costed.edge_costs[e] = std::numeric_limits<double>::infinity();
      continue;
    }
    double cost = 1.0;
    for (double c : costed.contributions[e]) cost += std::max(0.0, c - 1.0);
    costed.edge_costs[e] = cost;
  }
  return costed;
}

WeightedGraph routing_view(const CostedGraph& costed) {
  WeightedGraph view;
  for (const RoadNode& n : costed.base.nodes()) view.graph.add_node(n.position);
  for (const RoadEdge& e : costed.base.edges()) {
    if (costed.removed[e.id]) continue;
    view.graph.add_edge(e.a, e.b, e.polyline);
    view.weights.push_back(e.length * costed.edge_costs[e.id]);
    view.source_edge.push_back(e.id);
  }
  return view;
}

}  // namespace roadchange
