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

#include "roadchange/graph_extract.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace roadchange {
namespace {

constexpr std::array<std::pair<int, int>, 8> kNeighbours = {
    {{-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}}};

constexpr int kNoNode = -1;

struct PixelNode {
  std::vector<std::pair<int, int>> pixels;  // (col, row), row-major order
  Point position;
};

struct TracedEdge {
  int a = 0;
  int b = 0;
  std::vector<Point> polyline;
};

class Tracer {
 public:
  Tracer(const BinaryMask& mask, const GeoTransform& geo)
      : mask_(mask),
        geo_(geo),
        w_(mask.width()),
        node_of_(mask.size(), kNoNode),
        visited_(mask.size(), 0) {}

  void run() {
    find_nodes();
    trace_from_nodes();
    trace_loops();
  }

  std::vector<PixelNode>& nodes() { return nodes_; }
  std::vector<TracedEdge>& edges() { return edges_; }

 private:
  std::size_t idx(int c, int r) const { return static_cast<std::size_t>(r) * w_ + c; }
  bool on(int c, int r) const { return mask_.contains(c, r) && mask_(c, r) != 0; }
  int degree(int c, int r) const {
    int n = 0;
    for (auto [dc, dr] : kNeighbours) n += on(c + dc, r + dr) ? 1 : 0;
    return n;
  }

  void find_nodes() {
    for (int r = 0; r < mask_.height(); ++r) {
      for (int c = 0; c < w_; ++c) {
        if (!on(c, r) || node_of_[idx(c, r)] != kNoNode) continue;
        const int deg = degree(c, r);
        if (deg == 2) continue;
        const int id = static_cast<int>(nodes_.size());
        nodes_.emplace_back();
        PixelNode& node = nodes_.back();
        node_of_[idx(c, r)] = id;
        node.pixels.emplace_back(c, r);
        if (deg >= 3) {
          // Flood the 8-connected cluster of junction pixels.
          for (std::size_t i = 0; i < node.pixels.size(); ++i) {
            auto [pc, pr] = node.pixels[i];
            for (auto [dc, dr] : kNeighbours) {
              const int nc = pc + dc;
              const int nr = pr + dr;
              if (on(nc, nr) && node_of_[idx(nc, nr)] == kNoNode && degree(nc, nr) >= 3) {
                node_of_[idx(nc, nr)] = id;
                node.pixels.emplace_back(nc, nr);
              }
            }
          }
          std::sort(node.pixels.begin(), node.pixels.end(),
                    [](auto a, auto b) { return std::pair(a.second, a.first) < std::pair(b.second, b.first); });
        }
        double sx = 0.0;
        double sy = 0.0;
        for (auto [pc, pr] : node.pixels) {
          const Point p = geo_.pixel_center(pc, pr);
          sx += p.x;
          sy += p.y;
        }
        const double n = static_cast<double>(node.pixels.size());
        node.position = {sx / n, sy / n};
      }
    }
  }

  void trace_from_nodes() {
    std::set<std::pair<std::size_t, std::size_t>> direct_links;
    for (int id = 0; id < static_cast<int>(nodes_.size()); ++id) {
      const std::vector<std::pair<int, int>> pixels = nodes_[id].pixels;
      for (auto [pc, pr] : pixels) {
        for (auto [dc, dr] : kNeighbours) {
          const int nc = pc + dc;
          const int nr = pr + dr;
          if (!on(nc, nr)) continue;
          const int other = node_of_[idx(nc, nr)];
          if (other == id) continue;
          if (other != kNoNode) {
            const auto key = std::minmax(idx(pc, pr), idx(nc, nr));
            if (direct_links.insert(key).second) {
              edges_.push_back({id, other, {nodes_[id].position, nodes_[other].position}});
            }
            continue;
          }
          if (visited_[idx(nc, nr)]) continue;
          walk(id, pc, pr, nc, nr);
        }
      }
    }
  }

  // Follows a chain of degree-2 pixels starting at (c, r), entered from the
  // node pixel (from_c, from_r), until it reaches a node pixel.
  void walk(int start_node, int from_c, int from_r, int c, int r) {
    TracedEdge edge;
    edge.a = start_node;
    edge.polyline.push_back(nodes_[start_node].position);
    int prev_c = from_c;
    int prev_r = from_r;
    while (true) {
      const int here = node_of_[idx(c, r)];
      if (here != kNoNode) {
        edge.b = here;
        edge.polyline.push_back(nodes_[here].position);
        edges_.push_back(std::move(edge));
        return;
      }
      visited_[idx(c, r)] = 1;
      edge.polyline.push_back(geo_.pixel_center(c, r));
      bool advanced = false;
      for (auto [dc, dr] : kNeighbours) {
        const int nc = c + dc;
        const int nr = r + dr;
        if (!on(nc, nr) || (nc == prev_c && nr == prev_r)) continue;
        if (node_of_[idx(nc, nr)] == kNoNode && visited_[idx(nc, nr)]) continue;
        prev_c = c;
        prev_r = r;
        c = nc;
        r = nr;
        advanced = true;
        break;
      }
      // Only reachable on inputs that violate the skeleton contract.
      if (!advanced) return;
    }
  }

  void trace_loops() {
    for (int r = 0; r < mask_.height(); ++r) {
      for (int c = 0; c < w_; ++c) {
        if (!on(c, r) || visited_[idx(c, r)] || node_of_[idx(c, r)] != kNoNode) continue;
        const int id = static_cast<int>(nodes_.size());
        nodes_.push_back({{{c, r}}, geo_.pixel_center(c, r)});
        visited_[idx(c, r)] = 1;
        TracedEdge edge{id, id, {nodes_[id].position}};
        int prev_c = c;
        int prev_r = r;
        int cur_c = -1;
        int cur_r = -1;
        for (auto [dc, dr] : kNeighbours) {
          if (on(c + dc, r + dr)) {
            cur_c = c + dc;
            cur_r = r + dr;
            break;
          }
        }
        while (cur_c >= 0 && !(cur_c == c && cur_r == r)) {
          visited_[idx(cur_c, cur_r)] = 1;
          edge.polyline.push_back(geo_.pixel_center(cur_c, cur_r));
          int next_c = -1;
          int next_r = -1;
          for (auto [dc, dr] : kNeighbours) {
            const int nc = cur_c + dc;
            const int nr = cur_r + dr;
            if (!on(nc, nr) || (nc == prev_c && nr == prev_r)) continue;
            if (visited_[idx(nc, nr)] && !(nc == c && nr == r)) continue;
            next_c = nc;
            next_r = nr;
            break;
          }
          prev_c = cur_c;
          prev_r = cur_r;
          cur_c = next_c;
          cur_r = next_r;
        }
        edge.polyline.push_back(nodes_[id].position);
        edges_.push_back(std::move(edge));
      }
    }
  }

  const BinaryMask& mask_;
  const GeoTransform& geo_;
  int w_;
  std::vector<int> node_of_;
  std::vector<std::uint8_t> visited_;
  std::vector<PixelNode> nodes_;
  std::vector<TracedEdge> edges_;
};

}  // namespace

RoadGraph extract_graph(const Skeleton& skeleton, const GeoTransform& geo,
                        const ExtractOptions& options) {
  geo.validate();
  Tracer tracer(skeleton.mask(), geo);
  tracer.run();
  auto& nodes = tracer.nodes();
  auto& edges = tracer.edges();

  std::vector<int> degree(nodes.size(), 0);
  for (const TracedEdge& e : edges) {
    ++degree[e.a];
    ++degree[e.b];
  }

  std::vector<bool> keep_edge(edges.size(), true);
  const double min_spur = options.min_spur_px * geo.pixel_size_x;
  if (min_spur > 0.0) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const TracedEdge& e = edges[i];
      if ((degree[e.a] == 1 || degree[e.b] == 1) && polyline_length(e.polyline) < min_spur) {
        keep_edge[i] = false;
      }
    }
  }

  std::vector<int> kept_degree(nodes.size(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!keep_edge[i]) continue;
    ++kept_degree[edges[i].a];
    ++kept_degree[edges[i].b];
  }

  RoadGraph graph;
  std::vector<NodeId> remap(nodes.size(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    // Nodes orphaned by pruning go; nodes that were isolated to begin with stay.
    if (kept_degree[i] == 0 && degree[i] != 0) continue;
    remap[i] = graph.add_node(nodes[i].position);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!keep_edge[i]) continue;
    graph.add_edge(remap[edges[i].a], remap[edges[i].b], std::move(edges[i].polyline));
  }
  return graph;
}

}  // namespace roadchange
