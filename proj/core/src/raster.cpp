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

#include "roadchange/raster.hpp"

#include <algorithm>
#include <cmath>

namespace roadchange {

void GeoTransform::validate() const {
  if (!(pixel_size_x > 0.0) || !(pixel_size_y > 0.0) || !std::isfinite(pixel_size_x) ||
      !std::isfinite(pixel_size_y)) {
    throw std::invalid_argument("geotransform pixel sizes must be positive and finite");
  }
  if (!std::isfinite(origin_x) || !std::isfinite(origin_y)) {
    throw std::invalid_argument("geotransform origin must be finite");
  }
}

namespace {
std::vector<std::uint8_t> normalize_bits(std::vector<std::uint8_t> bits) {
  for (auto& b : bits) b = b != 0 ? 1 : 0;
  return bits;
}
}  // namespace

BinaryMask::BinaryMask(int width, int height, std::vector<std::uint8_t> bits, GeoTransform geo)
    : Raster(width, height, normalize_bits(std::move(bits)), geo) {}

std::int64_t BinaryMask::count() const {
  return std::count(values().begin(), values().end(), std::uint8_t{1});
}

ProbabilityMask::ProbabilityMask(int width, int height, std::vector<float> values,
                                 GeoTransform geo)
    : Raster(width, height, std::move(values), geo) {
  for (float v : this->values()) {
    if (!(v >= 0.0f && v <= 1.0f)) {
      throw std::invalid_argument("probability values must lie in [0, 1]");
    }
  }
}

}  // namespace roadchange
