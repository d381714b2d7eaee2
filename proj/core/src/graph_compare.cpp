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

#include "roadchange/graph_compare.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <utility>

#include "roadchange/errors.hpp"

namespace roadchange {
namespace {

void check_slice_lengths(const SubSegmentSet& a, const SubSegmentSet& b) {
  if (a.slice_length != b.slice_length) {
    throw SliceLengthMismatch("sub-segment sets were sliced with different lengths");
  }
}

// Uniform grid over sub-segment endpoints. Every segment is listed in the
// cells holding its two endpoints.
class EndpointGrid {
 public:
  EndpointGrid(const SubSegmentSet& set, double cell) : cell_(cell) {
    for (std::size_t i = 0; i < set.segments.size(); ++i) {
      const SubSegment& s = set.segments[i];
      const auto k1 = key(s.v1);
      const auto k2 = key(s.v2);
      cells_[k1].push_back(i);
      if (k2 != k1) cells_[k2].push_back(i);
    }
  }

  // Indices of segments with an endpoint in the 3x3 block of cells around p.
  void candidates_near(Point p, std::vector<std::size_t>& out) const {
    out.clear();
    const auto [cx, cy] = cell_of(p);
    for (std::int64_t dy = -1; dy <= 1; ++dy) {
      for (std::int64_t dx = -1; dx <= 1; ++dx) {
        auto it = cells_.find(pack(cx + dx, cy + dy));
        if (it != cells_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }

 private:
  std::pair<std::int64_t, std::int64_t> cell_of(Point p) const {
    return {static_cast<std::int64_t>(std::floor(p.x / cell_)),
            static_cast<std::int64_t>(std::floor(p.y / cell_))};
  }
  static std::uint64_t pack(std::int64_t x, std::int64_t y) {
    return (static_cast<std::uint64_t>(x) << 32) ^ (static_cast<std::uint64_t>(y) & 0xffffffffu);
  }
  std::uint64_t key(Point p) const {
    const auto [x, y] = cell_of(p);
    return pack(x, y);
  }

  double cell_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

struct Candidate {
  double cost;
  std::size_t a;
  std::size_t b;
};

std::vector<Candidate> corresponding_pairs(const SubSegmentSet& a, const SubSegmentSet& b) {
  std::vector<Candidate> pairs;
  if (a.empty() || b.empty()) return pairs;
  const double l = a.slice_length;
  const EndpointGrid grid(b, l);
  std::vector<std::size_t> near;
  for (std::size_t i = 0; i < a.segments.size(); ++i) {
    const SubSegment& sa = a.segments[i];
    // Any partner has an endpoint within l / 2 of sa.v1, hence in an
    // adjacent cell of side l.
    grid.candidates_near(sa.v1, near);
    for (std::size_t j : near) {
      const SubSegment& sb = b.segments[j];
      if (segments_correspond(sa, sb, l)) pairs.push_back({correspondence_cost(sa, sb), i, j});
    }
  }
  return pairs;
}

std::vector<std::pair<std::size_t, std::size_t>> select_pairs(const SubSegmentSet& a,
                                                              const SubSegmentSet& b,
                                                              MatchPolicy policy) {
  check_slice_lengths(a, b);
  std::vector<Candidate> pairs = corresponding_pairs(a, b);
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  if (policy == MatchPolicy::kAllPairs) {
    for (const Candidate& c : pairs) chosen.emplace_back(c.a, c.b);
  } else {
    std::sort(pairs.begin(), pairs.end(), [&](const Candidate& x, const Candidate& y) {
      return std::tuple(x.cost, a.segments[x.a].id, b.segments[x.b].id) <
             std::tuple(y.cost, a.segments[y.a].id, b.segments[y.b].id);
    });
    std::vector<bool> used_a(a.size(), false);
    std::vector<bool> used_b(b.size(), false);
    for (const Candidate& c : pairs) {
      if (used_a[c.a] || used_b[c.b]) continue;
      used_a[c.a] = true;
      used_b[c.b] = true;
      chosen.emplace_back(c.a, c.b);
    }
  }
  return chosen;
}

std::vector<bool> matched_in_a(const SubSegmentSet& a, const SubSegmentSet& b,
                               MatchPolicy policy) {
  std::vector<bool> matched(a.size(), false);
  for (auto [i, j] : select_pairs(a, b, policy)) matched[i] = true;
  return matched;
}

SubSegmentSet filter(const SubSegmentSet& a, const std::vector<bool>& keep) {
  SubSegmentSet out;
  out.slice_length = a.slice_length;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (keep[i]) out.segments.push_back(a.segments[i]);
  }
  return out;
}

void rdp_recurse(std::span<const Point> pts, std::size_t first, std::size_t last, double epsilon,
                 std::vector<bool>& keep) {
  // Explicit stack: long skeleton chains would otherwise recurse deeply.
  std::vector<std::pair<std::size_t, std::size_t>> stack = {{first, last}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    if (hi <= lo + 1) continue;
    double worst = -1.0;
    std::size_t worst_i = lo;
    for (std::size_t i = lo + 1; i < hi; ++i) {
      const double d = point_segment_distance(pts[i], pts[lo], pts[hi]);
      if (d > worst) {
        worst = d;
        worst_i = i;
      }
    }
    if (worst > epsilon) {
      keep[worst_i] = true;
      stack.emplace_back(lo, worst_i);
      stack.emplace_back(worst_i, hi);
    }
  }
}

}  // namespace

std::vector<Point> rdp_simplify_polyline(std::span<const Point> polyline, double epsilon) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("RDP epsilon must be >= 0");
  if (polyline.size() <= 2) return {polyline.begin(), polyline.end()};
  std::vector<bool> keep(polyline.size(), false);
  keep.front() = true;
  keep.back() = true;
  rdp_recurse(polyline, 0, polyline.size() - 1, epsilon, keep);
  std::vector<Point> out;
  for (std::size_t i = 0; i < polyline.size(); ++i) {
    if (keep[i]) out.push_back(polyline[i]);
  }
  return out;
}

RoadGraph rdp_simplify(const RoadGraph& graph, double epsilon) {
  RoadGraph out;
  for (const RoadNode& n : graph.nodes()) out.add_node(n.position);
  for (const RoadEdge& e : graph.edges()) {
    out.add_edge(e.a, e.b, rdp_simplify_polyline(e.polyline, epsilon));
  }
  return out;
}

SubSegmentSet slice_segments(const RoadGraph& graph, double slice_length) {
  if (!(slice_length > 0.0)) throw std::invalid_argument("slice length must be > 0");
  SubSegmentSet out;
  out.slice_length = slice_length;
  for (const RoadEdge& e : graph.edges()) {
    int index = 0;
    for (std::size_t k = 1; k < e.polyline.size(); ++k) {
      const Point p0 = e.polyline[k - 1];
      const Point p1 = e.polyline[k];
      const double piece = distance(p0, p1);
      if (piece == 0.0) continue;
      // A piece whose length is l times an integer, up to rounding, gets no
      // sliver remainder.
      const double ratio = piece / slice_length;
      const double nearest = std::round(ratio);
      const auto count = static_cast<std::int64_t>(std::max(
          1.0, std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, ratio) ? nearest : std::ceil(ratio)));
      for (std::int64_t i = 0; i < count; ++i) {
        const double t0 = static_cast<double>(i) * slice_length / piece;
        const double t1 = i + 1 == count ? 1.0 : static_cast<double>(i + 1) * slice_length / piece;
        SubSegment s;
        s.id = static_cast<std::int64_t>(out.segments.size());
        s.v1 = i == 0 ? p0 : p0 + t0 * (p1 - p0);
        s.v2 = i + 1 == count ? p1 : p0 + t1 * (p1 - p0);
        s.parent_edge = e.id;
        s.index = index++;
        out.segments.push_back(s);
      }
    }
  }
  return out;
}

bool segments_correspond(const SubSegment& a, const SubSegment& b, double slice_length) {
  const double half = 0.5 * slice_length;
  const bool direct = distance(a.v1, b.v1) < half && distance(a.v2, b.v2) < half;
  const bool swapped = distance(a.v1, b.v2) < half && distance(a.v2, b.v1) < half;
  return direct || swapped;
}

double correspondence_cost(const SubSegment& a, const SubSegment& b) {
  return std::min(distance(a.v1, b.v1) + distance(a.v2, b.v2),
                  distance(a.v1, b.v2) + distance(a.v2, b.v1));
}

std::vector<SegmentMatch> match_segments(const SubSegmentSet& a, const SubSegmentSet& b,
                                         MatchPolicy policy) {
  std::vector<SegmentMatch> out;
  for (auto [i, j] : select_pairs(a, b, policy)) {
    out.push_back({a.segments[i].id, b.segments[j].id});
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubSegmentSet graph_intersection(const SubSegmentSet& a, const SubSegmentSet& b,
                                 MatchPolicy policy) {
  return filter(a, matched_in_a(a, b, policy));
}

SubSegmentSet graph_difference(const SubSegmentSet& a, const SubSegmentSet& b,
                               MatchPolicy policy) {
  std::vector<bool> keep = matched_in_a(a, b, policy);
  keep.flip();
  return filter(a, keep);
}

MatchMetrics MatchMetrics::from_counts(std::int64_t tp, std::int64_t fp, std::int64_t fn) {
  MatchMetrics m;
  m.tp = tp;
  m.fp = fp;
  m.fn = fn;
  m.precision = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
  m.recall = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
  m.f_score = m.precision + m.recall > 0.0
                  ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
                  : 0.0;
  return m;
}

MatchMetrics segment_metrics(const SubSegmentSet& predicted, const SubSegmentSet& truth,
                             MatchPolicy policy) {
  const auto pairs = select_pairs(predicted, truth, policy);
  std::vector<bool> pred_hit(predicted.size(), false);
  std::vector<bool> truth_hit(truth.size(), false);
  for (auto [i, j] : pairs) {
    pred_hit[i] = true;
    truth_hit[j] = true;
  }
  const auto tp = std::count(pred_hit.begin(), pred_hit.end(), true);
  const auto fp = static_cast<std::int64_t>(predicted.size()) - tp;
  const auto fn = static_cast<std::int64_t>(truth.size()) -
                  std::count(truth_hit.begin(), truth_hit.end(), true);
  return MatchMetrics::from_counts(tp, fp, fn);
}

}  // namespace roadchange
