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

// Thresholding, binary morphology and mask differencing.
//
// All structuring elements are squares of side 2 * radius + 1 (Chebyshev
// balls). Pixels outside the raster read as 0 for every operation, so
// erosion always clears a border strip `radius` pixels wide.

#ifndef ROADCHANGE_MORPHOLOGY_HPP_
#define ROADCHANGE_MORPHOLOGY_HPP_

#include "roadchange/raster.hpp"

namespace roadchange {

// Bit set iff value > theta (strict). theta must lie in [0, 1].
BinaryMask threshold(const ProbabilityMask& mask, double theta);

BinaryMask dilate(const BinaryMask& mask, int radius);
BinaryMask erode(const BinaryMask& mask, int radius);

// Erode then dilate with the same radius.
BinaryMask open(const BinaryMask& mask, int radius);

BinaryMask complement(const BinaryMask& mask);

// Content moves by (dx, dy): out(x, y) = in(x - dx, y - dy). Pixels shifted in
// from outside are 0.
BinaryMask translate(const BinaryMask& mask, int dx, int dy);

// Changed-road mask: 1 where the road existed before (pre = 1) and is absent
// after (post = 0), 0 otherwise. The result carries pre's georeference.
// Throws DimensionMismatch when the rasters differ in size.
BinaryMask diff_masks(const BinaryMask& pre, const BinaryMask& post);

// Removes difference lines thinner than `min_width` pixels (erosion with
// radius min_width / 2) and then specks (opening with radius 1).
BinaryMask clean_diff(const BinaryMask& diff, int min_width);

}  // namespace roadchange

#endif  // ROADCHANGE_MORPHOLOGY_HPP_
