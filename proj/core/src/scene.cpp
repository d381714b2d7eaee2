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


#include "roadchange/scene.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "roadchange/morphology.hpp"
#include "roadchange/rasterize.hpp"

namespace roadchange {
namespace {

RoadGraph grid_graph(const SceneOptions& o) {
  RoadGraph g;
  for (int j = 0; j < o.grid_rows; ++j) {
    for (int i = 0; i < o.grid_cols; ++i) {
      g.add_node({o.margin + i * o.spacing, o.margin + j * o.spacing});
    }
  }
  auto id = [&](int i, int j) { return static_cast<NodeId>(j) * o.grid_cols + i; };
  for (int j = 0; j < o.grid_rows; ++j) {
    for (int i = 0; i + 1 < o.grid_cols; ++i) g.add_edge(id(i, j), id(i + 1, j));
  }
  for (int i = 0; i < o.grid_cols; ++i) {
    for (int j = 0; j + 1 < o.grid_rows; ++j) g.add_edge(id(i, j), id(i, j + 1));
  }
  return g;
}

RoadGraph radial_graph(const SceneOptions& o) {
  constexpr int kArcPoints = 8;
  const double extent = o.margin + o.radial_rings * o.spacing;
  const Point centre{extent, extent};
  auto at = [&](int ring, double angle) {
    const double r = ring * o.spacing;
    return Point{centre.x + r * std::cos(angle), centre.y + r * std::sin(angle)};
  };
  const double step = 2.0 * std::numbers::pi / o.radial_spokes;
  RoadGraph g;
  g.add_node(centre);
  for (int ring = 1; ring <= o.radial_rings; ++ring) {
    for (int k = 0; k < o.radial_spokes; ++k) g.add_node(at(ring, k * step));
  }
  auto id = [&](int ring, int k) {
    return ring == 0 ? NodeId{0} : 1 + static_cast<NodeId>(ring - 1) * o.radial_spokes + k;
  };
  for (int k = 0; k < o.radial_spokes; ++k) {
    for (int ring = 0; ring < o.radial_rings; ++ring) g.add_edge(id(ring, k), id(ring + 1, k));
  }
  for (int ring = 1; ring <= o.radial_rings; ++ring) {
    for (int k = 0; k < o.radial_spokes; ++k) {
      std::vector<Point> arc;
      for (int s = 0; s <= kArcPoints; ++s) arc.push_back(at(ring, (k + s / double{kArcPoints}) * step));
      g.add_edge(id(ring, k), id(ring, (k + 1) % o.radial_spokes), std::move(arc));
    }
  }
  return g;
}

// Piece of a polyline between arc lengths s0 <= s1.
std::vector<Point> sub_polyline(const std::vector<Point>& line, double s0, double s1) {
  std::vector<Point> out;
  double walked = 0.0;
  for (std::size_t k = 0; k + 1 < line.size(); ++k) {
    const double len = distance(line[k], line[k + 1]);
    const double a = walked;
    const double b = walked + len;
    walked = b;
    if (len == 0.0 || b < s0 || a > s1) continue;
    const Point p0 = line[k] + ((std::max(s0, a) - a) / len) * (line[k + 1] - line[k]);
    const Point p1 = line[k] + ((std::min(s1, b) - a) / len) * (line[k + 1] - line[k]);
    if (out.empty() || !(out.back() == p0)) out.push_back(p0);
    if (!(out.back() == p1)) out.push_back(p1);
  }
  return out;
}

RoadGraph remove_damaged_spans(const RoadGraph& pre, const std::vector<EdgeId>& damaged,
                               const SceneOptions& o) {
  RoadGraph post;
  for (const RoadNode& n : pre.nodes()) post.add_node(n.position);
  std::vector<bool> is_damaged(pre.edge_count(), false);
  for (EdgeId e : damaged) is_damaged[e] = true;
  for (const RoadEdge& e : pre.edges()) {
    if (!is_damaged[e.id]) post.add_edge(e.a, e.b, e.polyline);
  }
  for (EdgeId id : damaged) {
    const RoadEdge& e = pre.edge(id);
    const double cut0 = o.damage_start * e.length;
    const double cut1 = o.damage_end * e.length;
    if (cut0 > 0.0) {
      std::vector<Point> stub = sub_polyline(e.polyline, 0.0, cut0);
      const NodeId end = post.add_node(stub.back());
      post.add_edge(e.a, end, std::move(stub));
    }
    if (cut1 < e.length) {
      std::vector<Point> stub = sub_polyline(e.polyline, cut1, e.length);
      const NodeId start = post.add_node(stub.front());
      post.add_edge(start, e.b, std::move(stub));
    }
  }
  return post;
}

// Mean over the clipped (2r+1)^2 window.
std::vector<double> box_blur(const std::vector<double>& v, int w, int h, int r) {
  if (r == 0) return v;
  std::vector<double> sat(static_cast<std::size_t>(w + 1) * (h + 1), 0.0);
  auto at = [&](int c, int row) -> double& { return sat[static_cast<std::size_t>(row) * (w + 1) + c]; };
  for (int row = 0; row < h; ++row) {
    double run = 0.0;
    for (int c = 0; c < w; ++c) {
      run += v[static_cast<std::size_t>(row) * w + c];
      at(c + 1, row + 1) = at(c + 1, row) + run;
    }
  }
  std::vector<double> out(v.size());
  for (int row = 0; row < h; ++row) {
    const int r0 = std::max(0, row - r);
    const int r1 = std::min(h - 1, row + r);
    for (int c = 0; c < w; ++c) {
      const int c0 = std::max(0, c - r);
      const int c1 = std::min(w - 1, c + r);
      const double sum = at(c1 + 1, r1 + 1) - at(c0, r1 + 1) - at(c1 + 1, r0) + at(c0, r0);
      out[static_cast<std::size_t>(row) * w + c] = sum / ((c1 - c0 + 1) * (r1 - r0 + 1));
    }
  }
  return out;
}

ProbabilityMask to_probabilities(const BinaryMask& bits, const SceneOptions& o,
                                 std::mt19937_64& rng) {
  const int w = bits.width();
  const int h = bits.height();
  std::vector<double> p(bits.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = bits.values()[i] ? o.road_probability : o.background_probability;
  }
  p = box_blur(p, w, h, o.blur_radius);
  std::vector<float> values(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    double v = p[i];
    if (o.noise > 0.0 && uniform01(rng) < o.noise) v = uniform01(rng);
    // 8-bit quantisation keeps file round trips exact.
    values[i] = static_cast<float>(std::lround(v * 255.0)) / 255.0f;
  }
  return ProbabilityMask(w, h, std::move(values), bits.geo());
}

void check(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("scene option: ") + what);
}

}  // namespace

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

SyntheticScene generate_scene(const SceneOptions& o) {
  check(o.damage_fraction >= 0.0 && o.damage_fraction <= 1.0, "damage_fraction in [0, 1]");
  check(o.damage_start >= 0.0 && o.damage_start < o.damage_end && o.damage_end <= 1.0,
        "0 <= damage_start < damage_end <= 1");
  check(o.spacing > 0.0 && o.margin >= 0.0 && o.pixel_size > 0.0 && o.buffer >= 0.0,
        "positive geometry");
  check(o.noise >= 0.0 && o.noise <= 1.0, "noise in [0, 1]");
  check(o.blur_radius >= 0 && o.max_shift >= 0, "non-negative radii");
  check(o.road_probability >= 0.0 && o.road_probability <= 1.0 &&
            o.background_probability >= 0.0 && o.background_probability <= 1.0,
        "probabilities in [0, 1]");
  double extent_x = 0.0;
  double extent_y = 0.0;
  SyntheticScene scene;
  if (o.layout == SceneLayout::kGrid) {
    check(o.grid_cols >= 1 && o.grid_rows >= 1 && o.grid_cols * o.grid_rows >= 2, "grid size");
    scene.truth_pre = grid_graph(o);
    extent_x = 2.0 * o.margin + (o.grid_cols - 1) * o.spacing;
    extent_y = 2.0 * o.margin + (o.grid_rows - 1) * o.spacing;
  } else {
    check(o.radial_spokes >= 3 && o.radial_rings >= 1, "radial size");
    scene.truth_pre = radial_graph(o);
    extent_x = extent_y = 2.0 * (o.margin + o.radial_rings * o.spacing);
  }

  std::mt19937_64 rng(o.seed);
  const std::size_t edge_count = scene.truth_pre.edge_count();
  std::vector<EdgeId> order(edge_count);
  std::iota(order.begin(), order.end(), EdgeId{0});
  for (std::size_t i = edge_count; i > 1; --i) {
    std::swap(order[i - 1], order[uniform_index(rng, i)]);
  }
  const auto damaged = static_cast<std::size_t>(std::llround(o.damage_fraction * edge_count));
  scene.damaged_edges.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(damaged));
  std::sort(scene.damaged_edges.begin(), scene.damaged_edges.end());
  scene.truth_post = remove_damaged_spans(scene.truth_pre, scene.damaged_edges, o);

  if (o.max_shift > 0) {
    const auto span = static_cast<std::uint64_t>(2 * o.max_shift + 1);
    scene.shift_dx = static_cast<int>(uniform_index(rng, span)) - o.max_shift;
    scene.shift_dy = static_cast<int>(uniform_index(rng, span)) - o.max_shift;
  }

  const int width = static_cast<int>(std::ceil(extent_x / o.pixel_size - 1e-9));
  const int height = static_cast<int>(std::ceil(extent_y / o.pixel_size - 1e-9));
  const GeoTransform geo{0.0, height * o.pixel_size, o.pixel_size, o.pixel_size};
  const BinaryMask pre_bits = rasterize_graph(scene.truth_pre, geo, width, height, o.buffer);
  const BinaryMask post_bits =
      translate(rasterize_graph(scene.truth_post, geo, width, height, o.buffer), scene.shift_dx,
                scene.shift_dy);
  scene.pre = to_probabilities(pre_bits, o, rng);
  scene.post = to_probabilities(post_bits, o, rng);
  return scene;
}

}  // namespace roadchange
