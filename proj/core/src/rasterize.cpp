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

#include "roadchange/rasterize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace roadchange {
namespace {

void burn_segment(BinaryMask& mask, Point a, Point b, double buffer) {
  const GeoTransform& geo = mask.geo();
  // Pixel-space bounding box of the buffered segment, padded by one pixel.
  const PixelCoord pa = geo.world_to_pixel(a);
  const PixelCoord pb = geo.world_to_pixel(b);
  const double pad_c = buffer / geo.pixel_size_x + 1.0;
  const double pad_r = buffer / geo.pixel_size_y + 1.0;
  const int c0 = std::max(0, static_cast<int>(std::floor(std::min(pa.col, pb.col) - pad_c)));
  const int c1 =
      std::min(mask.width() - 1, static_cast<int>(std::ceil(std::max(pa.col, pb.col) + pad_c)));
  const int r0 = std::max(0, static_cast<int>(std::floor(std::min(pa.row, pb.row) - pad_r)));
  const int r1 =
      std::min(mask.height() - 1, static_cast<int>(std::ceil(std::max(pa.row, pb.row) + pad_r)));
  for (int r = r0; r <= r1; ++r) {
    for (int c = c0; c <= c1; ++c) {
      if (mask(c, r)) continue;
      if (point_segment_distance(geo.pixel_center(c, r), a, b) <= buffer) mask.set(c, r);
    }
  }
}

}  // namespace

BinaryMask rasterize_graph(const RoadGraph& graph, const GeoTransform& geo, int width,
                           int height, double buffer) {
  if (!(buffer >= 0.0)) throw std::invalid_argument("rasterization buffer must be >= 0");
  BinaryMask mask(width, height, geo);
  if (width == 0 || height == 0) return mask;
  for (const RoadEdge& edge : graph.edges()) {
    const auto& line = edge.polyline;
    if (line.size() == 1) burn_segment(mask, line[0], line[0], buffer);
    for (std::size_t i = 1; i < line.size(); ++i) burn_segment(mask, line[i - 1], line[i], buffer);
  }
  return mask;
}

}  // namespace roadchange
