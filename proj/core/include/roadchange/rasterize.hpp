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

#ifndef ROADCHANGE_RASTERIZE_HPP_
#define ROADCHANGE_RASTERIZE_HPP_

#include "roadchange/raster.hpp"
#include "roadchange/road_graph.hpp"

namespace roadchange {

// Burns a buffered road network into a mask: a pixel is set iff the distance
// from its centre to some edge polyline is <= buffer (world units).
BinaryMask rasterize_graph(const RoadGraph& graph, const GeoTransform& geo, int width,
                           int height, double buffer);

}  // namespace roadchange

#endif  // ROADCHANGE_RASTERIZE_HPP_
