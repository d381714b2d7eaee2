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

#include "roadchange/registration.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "roadchange/errors.hpp"

namespace roadchange {
namespace {

// Rows packed 64 pixels per word, bit (x % 64) of word (x / 64) holding
// pixel x.
class PackedRows {
 public:
  PackedRows(int width, int height)
      : words_per_row_((width + 63) / 64),
        width_(width),
        height_(height),
        bits_(static_cast<std::size_t>(words_per_row_) * height, 0) {}

  static PackedRows pack(const BinaryMask& mask) {
    PackedRows out(mask.width(), mask.height());
    for (int r = 0; r < mask.height(); ++r) {
      std::uint64_t* row = out.row(r);
      for (int c = 0; c < mask.width(); ++c) {
        if (mask(c, r)) row[c / 64] |= std::uint64_t{1} << (c % 64);
      }
    }
    return out;
  }

  // Copy whose pixel x holds this row's pixel x + dx (0 beyond the edges).
  PackedRows shifted_columns(int dx) const {
    const int height = height_;
    PackedRows out(width_, height);
    const int word_shift = std::abs(dx) / 64;
    const int bit_shift = std::abs(dx) % 64;
    for (int r = 0; r < height; ++r) {
      const std::uint64_t* src = row(r);
      std::uint64_t* dst = out.row(r);
      for (int w = 0; w < words_per_row_; ++w) {
        std::uint64_t v = 0;
        if (dx >= 0) {
          // Logical right shift across words.
          const int s = w + word_shift;
          if (s < words_per_row_) {
            v = src[s] >> bit_shift;
            if (bit_shift != 0 && s + 1 < words_per_row_) v |= src[s + 1] << (64 - bit_shift);
          }
        } else {
          const int s = w - word_shift;
          if (s >= 0) {
            v = src[s] << bit_shift;
            if (bit_shift != 0 && s - 1 >= 0) v |= src[s - 1] >> (64 - bit_shift);
          }
        }
        dst[w] = v;
      }
      out.clear_tail(r);
    }
    return out;
  }

  int words_per_row() const { return words_per_row_; }
  const std::uint64_t* row(int r) const {
    return bits_.data() + static_cast<std::size_t>(r) * words_per_row_;
  }
  std::uint64_t* row(int r) { return bits_.data() + static_cast<std::size_t>(r) * words_per_row_; }

 private:
  void clear_tail(int r) {
    const int tail = width_ % 64;
    if (tail != 0 && words_per_row_ > 0) {
      row(r)[words_per_row_ - 1] &= (std::uint64_t{1} << tail) - 1;
    }
  }

  int words_per_row_;
  int width_;
  int height_;
  std::vector<std::uint64_t> bits_;
};

std::int64_t packed_overlap(const PackedRows& post, const PackedRows& pre_shifted, int height,
                            int dy) {
  std::int64_t score = 0;
  const int r_begin = std::max(0, -dy);
  const int r_end = std::min(height, height - dy);
  for (int r = r_begin; r < r_end; ++r) {
    const std::uint64_t* a = post.row(r);
    const std::uint64_t* b = pre_shifted.row(r + dy);
    for (int w = 0; w < post.words_per_row(); ++w) score += std::popcount(a[w] & b[w]);
  }
  return score;
}

void check_inputs(const BinaryMask& pre, const BinaryMask& post) {
  if (!pre.same_shape(post)) {
    throw DimensionMismatch("registration requires masks of equal dimensions");
  }
}

}  // namespace

std::int64_t overlap_score(const BinaryMask& pre, const BinaryMask& post, int dx, int dy) {
  check_inputs(pre, post);
  const PackedRows shifted = PackedRows::pack(pre).shifted_columns(dx);
  return packed_overlap(PackedRows::pack(post), shifted, pre.height(), dy);
}

PixelOffset register_masks(const BinaryMask& pre, const BinaryMask& post, int search_radius) {
  check_inputs(pre, post);
  if (search_radius < 0) throw std::invalid_argument("search radius must be >= 0");
  if (post.count() == 0) throw NoSignal("post mask has no set pixels");
  if (pre.count() == 0) throw NoSignal("pre mask has no set pixels");

  const PackedRows packed_pre = PackedRows::pack(pre);
  const PackedRows packed_post = PackedRows::pack(post);

  PixelOffset best;
  bool have_best = false;
  auto rank = [](const PixelOffset& o) {
    // Larger score first, then smaller L1 norm, then (dy, dx).
    return std::make_tuple(-o.score, std::abs(o.dx) + std::abs(o.dy), o.dy, o.dx);
  };
  for (int dx = -search_radius; dx <= search_radius; ++dx) {
    const PackedRows shifted = packed_pre.shifted_columns(dx);
    for (int dy = -search_radius; dy <= search_radius; ++dy) {
      PixelOffset candidate{dx, dy, packed_overlap(packed_post, shifted, pre.height(), dy)};
      if (!have_best || rank(candidate) < rank(best)) {
        best = candidate;
        have_best = true;
      }
    }
  }
  return best;
}

}  // namespace roadchange
