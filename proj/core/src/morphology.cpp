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

#include "roadchange/morphology.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "roadchange/errors.hpp"

namespace roadchange {
namespace {

// Summed-area table with a zero guard row and column: entry (c, r) holds the
// number of set pixels in [0, c) x [0, r).
class IntegralImage {
 public:
  explicit IntegralImage(const BinaryMask& mask)
      : stride_(mask.width() + 1),
        sums_(static_cast<std::size_t>(mask.width() + 1) * (mask.height() + 1), 0) {
    for (int r = 0; r < mask.height(); ++r) {
      std::int64_t run = 0;
      for (int c = 0; c < mask.width(); ++c) {
        run += mask(c, r);
        at(c + 1, r + 1) = at(c + 1, r) + run;
      }
    }
  }

  // Set pixels in the inclusive window [c0, c1] x [r0, r1], clipped by the
  // caller to the raster.
  std::int64_t window(int c0, int r0, int c1, int r1) const {
    return at(c1 + 1, r1 + 1) - at(c0, r1 + 1) - at(c1 + 1, r0) + at(c0, r0);
  }

 private:
  std::int64_t& at(int c, int r) { return sums_[static_cast<std::size_t>(r) * stride_ + c]; }
  std::int64_t at(int c, int r) const {
    return sums_[static_cast<std::size_t>(r) * stride_ + c];
  }

  int stride_;
  std::vector<std::int64_t> sums_;
};

void check_radius(int radius) {
  if (radius < 0) throw std::invalid_argument("structuring element radius must be >= 0");
}

}  // namespace

BinaryMask threshold(const ProbabilityMask& mask, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw std::invalid_argument("threshold must lie in [0, 1]");
  }
  BinaryMask out(mask.width(), mask.height(), mask.geo());
  auto src = mask.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] > theta ? 1 : 0;
  return out;
}

BinaryMask dilate(const BinaryMask& mask, int radius) {
  check_radius(radius);
  if (radius == 0) return mask;
  const IntegralImage integral(mask);
  BinaryMask out(mask.width(), mask.height(), mask.geo());
  const int w = mask.width();
  const int h = mask.height();
  for (int r = 0; r < h; ++r) {
    const int r0 = std::max(0, r - radius);
    const int r1 = std::min(h - 1, r + radius);
    for (int c = 0; c < w; ++c) {
      const int c0 = std::max(0, c - radius);
      const int c1 = std::min(w - 1, c + radius);
      out(c, r) = integral.window(c0, r0, c1, r1) > 0 ? 1 : 0;
    }
  }
  return out;
}

BinaryMask erode(const BinaryMask& mask, int radius) {
  check_radius(radius);
  if (radius == 0) return mask;
  const IntegralImage integral(mask);
  BinaryMask out(mask.width(), mask.height(), mask.geo());
  const std::int64_t full = static_cast<std::int64_t>(2 * radius + 1) * (2 * radius + 1);
  // Windows that poke outside the raster see zeros there and never fill.
  for (int r = radius; r < mask.height() - radius; ++r) {
    for (int c = radius; c < mask.width() - radius; ++c) {
      out(c, r) =
          integral.window(c - radius, r - radius, c + radius, r + radius) == full ? 1 : 0;
    }
  }
  return out;
}

BinaryMask open(const BinaryMask& mask, int radius) { return dilate(erode(mask, radius), radius); }

BinaryMask complement(const BinaryMask& mask) {
  BinaryMask out(mask.width(), mask.height(), mask.geo());
  auto src = mask.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] ? 0 : 1;
  return out;
}

BinaryMask translate(const BinaryMask& mask, int dx, int dy) {
  BinaryMask out(mask.width(), mask.height(), mask.geo());
  for (int r = 0; r < mask.height(); ++r) {
    const int sr = r - dy;
    if (sr < 0 || sr >= mask.height()) continue;
    for (int c = 0; c < mask.width(); ++c) {
      const int sc = c - dx;
      if (sc >= 0 && sc < mask.width()) out(c, r) = mask(sc, sr);
    }
  }
  return out;
}

BinaryMask diff_masks(const BinaryMask& pre, const BinaryMask& post) {
  if (!pre.same_shape(post)) {
    throw DimensionMismatch("pre and post masks must have the same dimensions");
  }
  BinaryMask out(pre.width(), pre.height(), pre.geo());
  auto a = pre.values();
  auto b = post.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < a.size(); ++i) dst[i] = (a[i] == 1 && b[i] == 0) ? 1 : 0;
  return out;
}

BinaryMask clean_diff(const BinaryMask& diff, int min_width) {
  if (min_width < 1) throw std::invalid_argument("min_width must be >= 1");
  return open(erode(diff, min_width / 2), 1);
}

}  // namespace roadchange
