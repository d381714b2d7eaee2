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

// Spatial comparison of road graphs through fixed-length sub-segments.
//
// Both graphs are simplified to piecewise-linear edges, every linear piece is
// cut into sub-segments no longer than the slice length l, and sub-segments
// are paired when both of their endpoints lie closer than l / 2 to the
// endpoints of the other (in either orientation).

#ifndef ROADCHANGE_GRAPH_COMPARE_HPP_
#define ROADCHANGE_GRAPH_COMPARE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "roadchange/geometry.hpp"
#include "roadchange/road_graph.hpp"

namespace roadchange {

// Ramer-Douglas-Peucker simplification of a single polyline. Endpoints are
// always kept and every dropped point lies within epsilon of the result.
std::vector<Point> rdp_simplify_polyline(std::span<const Point> polyline, double epsilon);

// Applies rdp_simplify_polyline to every edge; topology is unchanged.
RoadGraph rdp_simplify(const RoadGraph& graph, double epsilon);

struct SubSegment {
  std::int64_t id = 0;  // position in the set it was sliced into
  Point v1;
  Point v2;
  EdgeId parent_edge = 0;
  int index = 0;  // position along the parent edge

  double length() const { return distance(v1, v2); }

  friend bool operator==(const SubSegment&, const SubSegment&) = default;
};

struct SubSegmentSet {
  std::vector<SubSegment> segments;
  double slice_length = 0.0;

  std::size_t size() const { return segments.size(); }
  bool empty() const { return segments.empty(); }

  friend bool operator==(const SubSegmentSet&, const SubSegmentSet&) = default;
};

// Cuts each linear piece of length L into ceil(L / l) sub-segments: full
// pieces of length l followed by one shorter remainder when l does not
// divide L. Zero-length pieces are skipped. Requires l > 0.
SubSegmentSet slice_segments(const RoadGraph& graph, double slice_length);

// Correspondence predicate: max endpoint distance < l / 2 in at least one
// orientation (strict).
bool segments_correspond(const SubSegment& a, const SubSegment& b, double slice_length);

// Summed endpoint distance, minimised over the two orientations.
double correspondence_cost(const SubSegment& a, const SubSegment& b);

enum class MatchPolicy {
  // Each segment takes part in at most one pair; pairs are picked greedily
  // by increasing cost, ties broken by (a id, b id).
  kOneToOne,
  // Every corresponding pair is reported.
  kAllPairs,
};

struct SegmentMatch {
  std::int64_t a = 0;  // id in the first set
  std::int64_t b = 0;  // id in the second set

  friend bool operator==(const SegmentMatch&, const SegmentMatch&) = default;
  friend auto operator<=>(const SegmentMatch&, const SegmentMatch&) = default;
};

// Pairs sorted by (a, b). Throws SliceLengthMismatch when the sets were
// sliced with different lengths.
std::vector<SegmentMatch> match_segments(const SubSegmentSet& a, const SubSegmentSet& b,
                                         MatchPolicy policy = MatchPolicy::kOneToOne);

// Segments of a that do / do not have a partner in b. Together they
// partition a.
SubSegmentSet graph_intersection(const SubSegmentSet& a, const SubSegmentSet& b,
                                 MatchPolicy policy = MatchPolicy::kOneToOne);
SubSegmentSet graph_difference(const SubSegmentSet& a, const SubSegmentSet& b,
                               MatchPolicy policy = MatchPolicy::kOneToOne);

struct MatchMetrics {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;

  // Ratios with the 0/0 cases defined as 0.
  static MatchMetrics from_counts(std::int64_t tp, std::int64_t fp, std::int64_t fn);

  friend bool operator==(const MatchMetrics&, const MatchMetrics&) = default;
};

// tp = matched predicted segments, fp = unmatched predicted, fn = unmatched
// truth.
MatchMetrics segment_metrics(const SubSegmentSet& predicted, const SubSegmentSet& truth,
                             MatchPolicy policy = MatchPolicy::kOneToOne);

}  // namespace roadchange

#endif  // ROADCHANGE_GRAPH_COMPARE_HPP_
