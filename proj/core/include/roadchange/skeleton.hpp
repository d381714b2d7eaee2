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

// Topology-preserving thinning of binary road masks.
//
// The skeleton is produced in three passes:
//   1. Zhang-Suen two-subiteration thinning. Candidates are flagged in
//      parallel as usual, but each is re-checked against the current image
//      before removal so that 2-pixel-thick structures cannot vanish.
//   2. Sequential removal of every remaining simple, non-end pixel. This
//      strips the staircase corners Zhang-Suen leaves behind.
//   3. Repair of the rare 2x2 blocks whose four pixels are all non-simple
//      (four diagonal arms meeting): one block pixel is swapped for a
//      neighbouring pixel through a simple addition followed by a simple
//      deletion.
// Every change is a simple-point insertion or deletion, so the number of
// 8-connected components and of 4-connected holes never changes.

#ifndef ROADCHANGE_SKELETON_HPP_
#define ROADCHANGE_SKELETON_HPP_

#include <cstdint>

#include "roadchange/raster.hpp"

namespace roadchange {

// A binary mask at most one pixel wide: no 2x2 block of set pixels.
class Skeleton {
 public:
  Skeleton() = default;
  // Throws std::invalid_argument if `mask` contains a 2x2 block.
  explicit Skeleton(BinaryMask mask);

  const BinaryMask& mask() const { return mask_; }
  int width() const { return mask_.width(); }
  int height() const { return mask_.height(); }
  bool test(int col, int row) const { return mask_.test(col, row); }

  friend bool operator==(const Skeleton&, const Skeleton&) = default;

 private:
  BinaryMask mask_;
};

Skeleton skeletonize(const BinaryMask& mask);

// Number of 2x2 windows with all four pixels set.
std::int64_t count_2x2_blocks(const BinaryMask& mask);

// Number of 8-connected components of set pixels.
std::int64_t count_components_8(const BinaryMask& mask);

// Set 8-neighbours of (col, row).
int neighbour_count(const BinaryMask& mask, int col, int row);

}  // namespace roadchange

#endif  // ROADCHANGE_SKELETON_HPP_
