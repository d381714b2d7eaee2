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

// Georeferenced single-band rasters.
//
// Pixel (col, row) covers the world rectangle
//   [origin_x + col * pixel_size_x, origin_x + (col + 1) * pixel_size_x] x
//   [origin_y - (row + 1) * pixel_size_y, origin_y - row * pixel_size_y]
// i.e. the origin is the top-left corner and rows grow southwards. Only
// axis-aligned transforms are supported.

#ifndef ROADCHANGE_RASTER_HPP_
#define ROADCHANGE_RASTER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "roadchange/geometry.hpp"

namespace roadchange {

// Continuous pixel coordinates: integer values land on pixel centres.
struct PixelCoord {
  double col = 0.0;
  double row = 0.0;
};

struct GeoTransform {
  double origin_x = 0.0;
  double origin_y = 0.0;
  double pixel_size_x = 1.0;
  double pixel_size_y = 1.0;

  // Throws std::invalid_argument unless both pixel sizes are positive and
  // finite.
  void validate() const;

  Point pixel_center(int col, int row) const {
    return {origin_x + (col + 0.5) * pixel_size_x,
            origin_y - (row + 0.5) * pixel_size_y};
  }

  Point pixel_to_world(PixelCoord p) const {
    return {origin_x + (p.col + 0.5) * pixel_size_x,
            origin_y - (p.row + 0.5) * pixel_size_y};
  }

  PixelCoord world_to_pixel(Point w) const {
    return {(w.x - origin_x) / pixel_size_x - 0.5,
            (origin_y - w.y) / pixel_size_y - 0.5};
  }

  friend bool operator==(const GeoTransform&, const GeoTransform&) = default;
};

template <typename T>
class Raster {
 public:
  using value_type = T;

  Raster() = default;

  Raster(int width, int height, GeoTransform geo = {}, T fill = T{})
      : width_(checked_dim(width)),
        height_(checked_dim(height)),
        geo_(geo),
        values_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill) {
    geo_.validate();
  }

  Raster(int width, int height, std::vector<T> values, GeoTransform geo)
      : width_(checked_dim(width)),
        height_(checked_dim(height)),
        geo_(geo),
        values_(std::move(values)) {
    geo_.validate();
    if (values_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
      throw std::invalid_argument("raster value count does not match width x height");
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return values_.size(); }
  const GeoTransform& geo() const { return geo_; }

  bool contains(int col, int row) const {
    return col >= 0 && row >= 0 && col < width_ && row < height_;
  }

  T operator()(int col, int row) const { return values_[index(col, row)]; }
  T& operator()(int col, int row) { return values_[index(col, row)]; }

  // Value at (col, row), or `outside` beyond the raster border.
  T at_or(int col, int row, T outside) const {
    return contains(col, row) ? (*this)(col, row) : outside;
  }

  std::span<const T> values() const { return values_; }
  std::span<T> values() { return values_; }

  std::span<const T> row(int r) const {
    return std::span<const T>(values_).subspan(static_cast<std::size_t>(r) * width_, width_);
  }

  bool same_shape(const Raster& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  static int checked_dim(int d) {
    if (d < 0) throw std::invalid_argument("raster dimensions must be non-negative");
    return d;
  }
  std::size_t index(int col, int row) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int width_ = 0;
  int height_ = 0;
  GeoTransform geo_;
  std::vector<T> values_;
};

// Per-pixel {0,1} mask.
class BinaryMask : public Raster<std::uint8_t> {
 public:
  BinaryMask() = default;
  BinaryMask(int width, int height, GeoTransform geo = {})
      : Raster(width, height, geo, 0) {}
  // Any non-zero input byte is stored as 1.
  BinaryMask(int width, int height, std::vector<std::uint8_t> bits, GeoTransform geo);

  bool test(int col, int row) const { return (*this)(col, row) != 0; }
  void set(int col, int row, bool on = true) { (*this)(col, row) = on ? 1 : 0; }

  // Number of set pixels.
  std::int64_t count() const;

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;
};

// Per-pixel road probability in [0, 1].
class ProbabilityMask : public Raster<float> {
 public:
  ProbabilityMask() = default;
  ProbabilityMask(int width, int height, GeoTransform geo = {})
      : Raster(width, height, geo, 0.0f) {}
  // Throws std::invalid_argument if any value lies outside [0, 1].
  ProbabilityMask(int width, int height, std::vector<float> values, GeoTransform geo);

  friend bool operator==(const ProbabilityMask&, const ProbabilityMask&) = default;
};

// Raw 8-bit grayscale image, the on-disk form of every mask.
using GrayImage = Raster<std::uint8_t>;

}  // namespace roadchange

#endif  // ROADCHANGE_RASTER_HPP_
