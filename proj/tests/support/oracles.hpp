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


// Independent reference implementations used as test oracles. They favour
// obviousness over speed and share no code with the library beyond its data
// types.

#ifndef ROADCHANGE_TESTS_SUPPORT_ORACLES_HPP_
#define ROADCHANGE_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "roadchange/graph_compare.hpp"
#include "roadchange/raster.hpp"
#include "roadchange/road_graph.hpp"
#include "roadchange/routing.hpp"

namespace roadchange::testing {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Adds nodes at a and b (in that order) joined by a straight edge.
inline EdgeId add_segment(RoadGraph& g, Point a, Point b) {
  const NodeId na = g.add_node(a);
  const NodeId nb = g.add_node(b);
  return g.add_edge(na, nb);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline BinaryMask random_mask(std::mt19937_64& rng, int width, int height, double density) {
  BinaryMask mask(width, height);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) mask.set(c, r, uniform(rng, 0.0, 1.0) < density);
  }
  return mask;
}

// Random blobs: a few filled rectangles, so registration has structure to
// lock onto rather than white noise.
inline BinaryMask random_blob_mask(std::mt19937_64& rng, int width, int height, int blobs) {
  BinaryMask mask(width, height);
  for (int i = 0; i < blobs; ++i) {
    const int w = uniform_int(rng, 2, std::max(2, width / 4));
    const int h = uniform_int(rng, 2, std::max(2, height / 4));
    const int c0 = uniform_int(rng, 0, width - 1);
    const int r0 = uniform_int(rng, 0, height - 1);
    for (int r = r0; r < std::min(height, r0 + h); ++r) {
      for (int c = c0; c < std::min(width, c0 + w); ++c) mask.set(c, r);
    }
  }
  return mask;
}

// Per-pixel change rule: set where pre is set and post is not.
inline BinaryMask diff_oracle(const BinaryMask& pre, const BinaryMask& post) {
  BinaryMask out(pre.width(), pre.height(), pre.geo());
  for (int r = 0; r < pre.height(); ++r) {
    for (int c = 0; c < pre.width(); ++c) {
      const bool p = pre(c, r) != 0;
      const bool q = post(c, r) != 0;
      out.set(c, r, p && !q);
    }
  }
  return out;
}

inline std::int64_t overlap_oracle(const BinaryMask& pre, const BinaryMask& post, int dx, int dy) {
  std::int64_t n = 0;
  for (int r = 0; r < post.height(); ++r) {
    for (int c = 0; c < post.width(); ++c) {
      if (post(c, r) && pre.at_or(c + dx, r + dy, 0)) ++n;
    }
  }
  return n;
}

struct RegistrationOracle {
  int dx = 0;
  int dy = 0;
  std::int64_t score = -1;
  // Every shift reaching the maximum score.
  std::vector<std::pair<int, int>> maximisers;
};

inline RegistrationOracle registration_oracle(const BinaryMask& pre, const BinaryMask& post,
                                              int radius) {
  RegistrationOracle best;
  for (int dy = -radius; dy <= radius; ++dy) {
    for (int dx = -radius; dx <= radius; ++dx) {
      const std::int64_t s = overlap_oracle(pre, post, dx, dy);
      if (s > best.score) {
        best.score = s;
        best.maximisers.clear();
      }
      if (s == best.score) best.maximisers.emplace_back(dx, dy);
    }
  }
  auto key = [](std::pair<int, int> p) {
    return std::tuple(std::abs(p.first) + std::abs(p.second), p.second, p.first);
  };
  const auto winner = *std::min_element(
      best.maximisers.begin(), best.maximisers.end(),
      [&](auto x, auto y) { return key(x) < key(y); });
  best.dx = winner.first;
  best.dy = winner.second;
  return best;
}

// 8-connected components through union-find over raster indices.
inline std::int64_t components_oracle(const BinaryMask& mask) {
  const int w = mask.width();
  const int h = mask.height();
  std::vector<std::size_t> parent(static_cast<std::size_t>(w) * h);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto idx = [&](int c, int r) { return static_cast<std::size_t>(r) * w + c; };
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (!mask(c, r)) continue;
      const int nbr[4][2] = {{c - 1, r}, {c - 1, r - 1}, {c, r - 1}, {c + 1, r - 1}};
      for (const auto& n : nbr) {
        if (mask.at_or(n[0], n[1], 0)) parent[find(idx(c, r))] = find(idx(n[0], n[1]));
      }
    }
  }
  std::int64_t roots = 0;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (mask(c, r) && find(idx(c, r)) == idx(c, r)) ++roots;
    }
  }
  return roots;
}

inline bool has_2x2_block(const BinaryMask& mask) {
  for (int r = 0; r + 1 < mask.height(); ++r) {
    for (int c = 0; c + 1 < mask.width(); ++c) {
      if (mask(c, r) && mask(c + 1, r) && mask(c, r + 1) && mask(c + 1, r + 1)) return true;
    }
  }
  return false;
}

inline double segment_distance_oracle(Point p, Point a, Point b) {
  const double vx = b.x - a.x;
  const double vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = len2 > 0.0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * vx), p.y - (a.y + t * vy));
}

inline double polyline_distance_oracle(Point p, const std::vector<Point>& line) {
  double best = kInf;
  if (line.size() == 1) return std::hypot(p.x - line[0].x, p.y - line[0].y);
  for (std::size_t i = 1; i < line.size(); ++i) {
    best = std::min(best, segment_distance_oracle(p, line[i - 1], line[i]));
  }
  return best;
}

inline BinaryMask rasterize_oracle(const RoadGraph& graph, const GeoTransform& geo, int width,
                                   int height, double buffer) {
  BinaryMask mask(width, height, geo);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const Point centre{geo.origin_x + (c + 0.5) * geo.pixel_size_x,
                         geo.origin_y - (r + 0.5) * geo.pixel_size_y};
      for (const RoadEdge& e : graph.edges()) {
        if (polyline_distance_oracle(centre, e.polyline) <= buffer) {
          mask.set(c, r);
          break;
        }
      }
    }
  }
  return mask;
}

// Correspondence predicate written out directly.
inline bool corresponds_oracle(const SubSegment& a, const SubSegment& b, double l) {
  auto d = [](Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); };
  const bool same = d(a.v1, b.v1) < l / 2 && d(a.v2, b.v2) < l / 2;
  const bool flipped = d(a.v1, b.v2) < l / 2 && d(a.v2, b.v1) < l / 2;
  return same || flipped;
}

// O(n^2) matching: every corresponding pair, or the greedy one-to-one
// selection by (cost, a id, b id).
inline std::vector<SegmentMatch> match_oracle(const SubSegmentSet& a, const SubSegmentSet& b,
                                              bool one_to_one) {
  struct Cand {
    double cost;
    std::int64_t a;
    std::int64_t b;
  };
  auto d = [](Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); };
  std::vector<Cand> cands;
  for (const SubSegment& x : a.segments) {
    for (const SubSegment& y : b.segments) {
      if (!corresponds_oracle(x, y, a.slice_length)) continue;
      const double cost = std::min(d(x.v1, y.v1) + d(x.v2, y.v2), d(x.v1, y.v2) + d(x.v2, y.v1));
      cands.push_back({cost, x.id, y.id});
    }
  }
  std::vector<SegmentMatch> out;
  if (!one_to_one) {
    for (const Cand& c : cands) out.push_back({c.a, c.b});
  } else {
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
      return std::tie(x.cost, x.a, x.b) < std::tie(y.cost, y.a, y.b);
    });
    std::vector<std::int64_t> used_a;
    std::vector<std::int64_t> used_b;
    for (const Cand& c : cands) {
      if (std::find(used_a.begin(), used_a.end(), c.a) != used_a.end()) continue;
      if (std::find(used_b.begin(), used_b.end(), c.b) != used_b.end()) continue;
      used_a.push_back(c.a);
      used_b.push_back(c.b);
      out.push_back({c.a, c.b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Random sub-segments clustered so that many pairs correspond.
inline SubSegmentSet random_segments(std::mt19937_64& rng, int n, double extent, double l) {
  SubSegmentSet set;
  set.slice_length = l;
  for (int i = 0; i < n; ++i) {
    SubSegment s;
    s.id = i;
    s.v1 = {uniform(rng, 0.0, extent), uniform(rng, 0.0, extent)};
    const double angle = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    const double len = uniform(rng, 0.1 * l, l);
    s.v2 = {s.v1.x + len * std::cos(angle), s.v1.y + len * std::sin(angle)};
    s.parent_edge = i;
    set.segments.push_back(s);
  }
  return set;
}

// The same segments jittered by up to `jitter` per coordinate, some flipped.
inline SubSegmentSet perturb_segments(std::mt19937_64& rng, const SubSegmentSet& in,
                                      double jitter) {
  SubSegmentSet out = in;
  for (SubSegment& s : out.segments) {
    s.v1 = {s.v1.x + uniform(rng, -jitter, jitter), s.v1.y + uniform(rng, -jitter, jitter)};
    s.v2 = {s.v2.x + uniform(rng, -jitter, jitter), s.v2.y + uniform(rng, -jitter, jitter)};
    if (rng() % 2) std::swap(s.v1, s.v2);
  }
  return out;
}

// Single-source shortest distances by edge relaxation over |V| - 1 rounds.
inline std::vector<double> bellman_ford(const WeightedGraph& g, NodeId src) {
  std::vector<double> dist(g.graph.node_count(), kInf);
  dist[src] = 0.0;
  for (std::size_t round = 1; round < g.graph.node_count(); ++round) {
    bool changed = false;
    for (const RoadEdge& e : g.graph.edges()) {
      const double w = g.weights[e.id];
      if (dist[e.a] + w < dist[e.b]) {
        dist[e.b] = dist[e.a] + w;
        changed = true;
      }
      if (dist[e.b] + w < dist[e.a]) {
        dist[e.a] = dist[e.b] + w;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return dist;
}

// Random graph with nodes in a square and random (possibly parallel, possibly
// self-loop) edges carrying arbitrary non-negative weights.
inline WeightedGraph random_weighted_graph(std::mt19937_64& rng, int nodes, int edges,
                                           double zero_weight_share = 0.05) {
  WeightedGraph g;
  for (int i = 0; i < nodes; ++i) {
    g.graph.add_node({uniform(rng, 0.0, 1000.0), uniform(rng, 0.0, 1000.0)});
  }
  for (int i = 0; i < edges; ++i) {
    const NodeId a = uniform_int(rng, 0, nodes - 1);
    const NodeId b = uniform_int(rng, 0, nodes - 1);
    g.graph.add_edge(a, b);
    g.weights.push_back(uniform(rng, 0.0, 1.0) < zero_weight_share
                            ? 0.0
                            : std::round(uniform(rng, 0.0, 100.0)));
    g.source_edge.push_back(i);
  }
  return g;
}

// Index of the edge nearest to p (ties to the lower id) and its distance.
inline std::pair<EdgeId, double> nearest_edge_oracle(const RoadGraph& g, Point p) {
  EdgeId best = -1;
  double best_d = kInf;
  for (const RoadEdge& e : g.edges()) {
    const double d = polyline_distance_oracle(p, e.polyline);
    if (d < best_d) {
      best_d = d;
      best = e.id;
    }
  }
  return {best, best_d};
}

}  // namespace roadchange::testing

#endif  // ROADCHANGE_TESTS_SUPPORT_ORACLES_HPP_
