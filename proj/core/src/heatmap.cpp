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

#include "roadchange/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace roadchange {

std::int64_t HeatmapGrid::max_sum() const {
  return sums.empty() ? 0 : *std::max_element(sums.begin(), sums.end());
}

std::int64_t HeatmapGrid::total() const {
  return std::accumulate(sums.begin(), sums.end(), std::int64_t{0});
}

HeatmapGrid heatmap(const BinaryMask& diff, int cell_size) {
  if (cell_size < 1) throw std::invalid_argument("heatmap cell size must be >= 1");
  HeatmapGrid grid;
  grid.cell_size = cell_size;
  grid.rows = (diff.height() + cell_size - 1) / cell_size;
  grid.cols = (diff.width() + cell_size - 1) / cell_size;
  grid.sums.assign(static_cast<std::size_t>(grid.rows) * grid.cols, 0);
  for (int r = 0; r < diff.height(); ++r) {
    const std::size_t base = static_cast<std::size_t>(r / cell_size) * grid.cols;
    for (int c = 0; c < diff.width(); ++c) {
      if (diff(c, r)) ++grid.sums[base + c / cell_size];
    }
  }
  return grid;
}

std::string heatmap_to_csv(const HeatmapGrid& grid) {
  std::ostringstream out;
  out << "row,col,sum\n";
  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c) out << r << ',' << c << ',' << grid.at(r, c) << '\n';
  }
  return out.str();
}

GrayImage heatmap_to_image(const HeatmapGrid& grid) {
  GrayImage image(grid.cols, grid.rows);
  const std::int64_t peak = grid.max_sum();
  if (peak == 0) return image;
  for (int r = 0; r < grid.rows; ++r) {
    for (int c = 0; c < grid.cols; ++c) {
      const double scaled = 255.0 * static_cast<double>(grid.at(r, c)) / static_cast<double>(peak);
      image(c, r) = static_cast<std::uint8_t>(std::lround(scaled));
    }
  }
  return image;
}

}  // namespace roadchange
