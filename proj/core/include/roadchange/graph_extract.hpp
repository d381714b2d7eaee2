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

#ifndef ROADCHANGE_GRAPH_EXTRACT_HPP_
#define ROADCHANGE_GRAPH_EXTRACT_HPP_

#include "roadchange/raster.hpp"
#include "roadchange/road_graph.hpp"
#include "roadchange/skeleton.hpp"

namespace roadchange {

struct ExtractOptions {
  // Edges shorter than this many pixels (measured in pixel_size_x units)
  // that end in a degree-1 node are dropped. 0 keeps every edge.
  double min_spur_px = 5.0;
};

// Traces a skeleton into a road graph.
//
// Nodes are skeleton pixels whose 8-neighbour count is not 2: ends (1),
// isolated pixels (0) and junctions (>= 3). 8-adjacent junction pixels merge
// into one node at their centroid. Edges are the pixel chains between nodes,
// each traced exactly once. A closed loop without any node gets an anchor
// node at its first pixel in row-major order and a single self-loop edge.
// Node and edge ids follow row-major discovery order, so output is fully
// deterministic.
RoadGraph extract_graph(const Skeleton& skeleton, const GeoTransform& geo,
                        const ExtractOptions& options = {});

// Convenience overload using the skeleton's own georeference.
inline RoadGraph extract_graph(const Skeleton& skeleton, const ExtractOptions& options = {}) {
  return extract_graph(skeleton, skeleton.mask().geo(), options);
}

}  // namespace roadchange

#endif  // ROADCHANGE_GRAPH_EXTRACT_HPP_
