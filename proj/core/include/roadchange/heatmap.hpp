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

#ifndef ROADCHANGE_HEATMAP_HPP_
#define ROADCHANGE_HEATMAP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "roadchange/raster.hpp"

namespace roadchange {

// Changed-pixel counts over a grid of square cells. Edge cells may be
// partial when the raster size is not a multiple of cell_size.
struct HeatmapGrid {
  int cell_size = 1;
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> sums;  // row-major, rows * cols

  std::int64_t at(int row, int col) const {
    return sums[static_cast<std::size_t>(row) * cols + col];
  }
  std::int64_t max_sum() const;
  std::int64_t total() const;

  friend bool operator==(const HeatmapGrid&, const HeatmapGrid&) = default;
};

HeatmapGrid heatmap(const BinaryMask& diff, int cell_size);

// "row,col,sum" header followed by one line per cell in row-major order.
std::string heatmap_to_csv(const HeatmapGrid& grid);

// One pixel per cell, scaled so the hottest cell is 255. An all-zero grid
// renders black.
GrayImage heatmap_to_image(const HeatmapGrid& grid);

}  // namespace roadchange

#endif  // ROADCHANGE_HEATMAP_HPP_
