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

#include "roadchange/geometry.hpp"

#include <algorithm>
#include <limits>

namespace roadchange {

double point_polyline_distance(Point p, std::span<const Point> polyline) {
  if (polyline.empty()) return std::numeric_limits<double>::infinity();
  if (polyline.size() == 1) return distance(p, polyline.front());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    best = std::min(best, point_segment_distance(p, polyline[i - 1], polyline[i]));
  }
  return best;
}

double polyline_length(std::span<const Point> polyline) {
  double total = 0.0;
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    total += distance(polyline[i - 1], polyline[i]);
  }
  return total;
}

}  // namespace roadchange
