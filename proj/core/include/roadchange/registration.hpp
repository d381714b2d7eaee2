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

#ifndef ROADCHANGE_REGISTRATION_HPP_
#define ROADCHANGE_REGISTRATION_HPP_

#include <cstdint>

#include "roadchange/raster.hpp"

namespace roadchange {

// Integer shift between two masks. A post pixel p corresponds to the pre
// pixel p + (dx, dy); translate(post, dx, dy) brings post onto pre.
struct PixelOffset {
  int dx = 0;
  int dy = 0;
  std::int64_t score = 0;

  friend bool operator==(const PixelOffset&, const PixelOffset&) = default;
};

// Number of pixels p with post(p) = 1 and pre(p + (dx, dy)) = 1.
std::int64_t overlap_score(const BinaryMask& pre, const BinaryMask& post, int dx, int dy);

// Exhaustive search over every shift in [-search_radius, search_radius]^2
// for the one maximising overlap_score. Ties go to the smallest |dx| + |dy|,
// then to the lexicographically smallest (dy, dx).
//
// Throws DimensionMismatch if the masks differ in size, NoSignal if either
// mask is empty, std::invalid_argument for a negative radius.
PixelOffset register_masks(const BinaryMask& pre, const BinaryMask& post, int search_radius);

}  // namespace roadchange

#endif  // ROADCHANGE_REGISTRATION_HPP_
