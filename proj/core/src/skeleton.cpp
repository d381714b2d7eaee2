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

#include "roadchange/skeleton.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "roadchange/morphology.hpp"

namespace roadchange {
namespace {

// Image with a one-pixel zero guard band so neighbourhood reads never need
// bounds checks.
class PaddedImage {
 public:
  explicit PaddedImage(const BinaryMask& mask)
      : width_(mask.width()),
        height_(mask.height()),
        stride_(mask.width() + 2),
        px_(static_cast<std::size_t>(mask.width() + 2) * (mask.height() + 2), 0) {
    for (int r = 0; r < height_; ++r) {
      for (int c = 0; c < width_; ++c) px_[idx(c, r)] = mask(c, r);
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  bool get(int c, int r) const { return px_[idx(c, r)] != 0; }
  void set(int c, int r, bool on) { px_[idx(c, r)] = on ? 1 : 0; }

  // Ring of the 8 neighbours, counter-clockwise from east:
  // E, NE, N, NW, W, SW, S, SE.
  std::array<int, 8> ring(int c, int r) const {
    return {get(c + 1, r),     get(c + 1, r - 1), get(c, r - 1), get(c - 1, r - 1),
            get(c - 1, r),     get(c - 1, r + 1), get(c, r + 1), get(c + 1, r + 1)};
  }

  BinaryMask to_mask(const GeoTransform& geo) const {
    BinaryMask out(width_, height_, geo);
    for (int r = 0; r < height_; ++r) {
      for (int c = 0; c < width_; ++c) out(c, r) = get(c, r) ? 1 : 0;
    }
    return out;
  }

 private:
  std::size_t idx(int c, int r) const {
    return static_cast<std::size_t>(r + 1) * stride_ + static_cast<std::size_t>(c + 1);
  }

  int width_;
  int height_;
  int stride_;
  std::vector<std::uint8_t> px_;
};

int ring_sum(const std::array<int, 8>& n) {
  int s = 0;
  for (int v : n) s += v;
  return s;
}

// Yokoi connectivity number for 8-connected foreground. A pixel is simple
// (removable or insertable without changing topology) iff this equals 1.
int connectivity_number(const std::array<int, 8>& n) {
  int count = 0;
  for (int k = 0; k < 8; k += 2) {
    const int a = 1 - n[k];
    const int b = 1 - n[(k + 1) % 8];
    const int c = 1 - n[(k + 2) % 8];
    count += a - a * b * c;
  }
  return count;
}

bool removable(const PaddedImage& img, int c, int r) {
  const auto n = img.ring(c, r);
  return ring_sum(n) >= 2 && connectivity_number(n) == 1;
}

bool zhang_suen_candidate(const PaddedImage& img, int c, int r, int pass) {
  // Zhang-Suen labelling: P2 = N, P3 = NE, P4 = E, ..., P9 = NW.
  const int p2 = img.get(c, r - 1), p3 = img.get(c + 1, r - 1), p4 = img.get(c + 1, r);
  const int p5 = img.get(c + 1, r + 1), p6 = img.get(c, r + 1), p7 = img.get(c - 1, r + 1);
  const int p8 = img.get(c - 1, r), p9 = img.get(c - 1, r - 1);
  const std::array<int, 9> seq = {p2, p3, p4, p5, p6, p7, p8, p9, p2};
  const int b = p2 + p3 + p4 + p5 + p6 + p7 + p8 + p9;
  if (b < 2 || b > 6) return false;
  int a = 0;
  for (int i = 0; i < 8; ++i) a += (seq[i] == 0 && seq[i + 1] == 1) ? 1 : 0;
  if (a != 1) return false;
  if (pass == 0) return p2 * p4 * p6 == 0 && p4 * p6 * p8 == 0;
  return p2 * p4 * p8 == 0 && p2 * p6 * p8 == 0;
}

void zhang_suen(PaddedImage& img) {
  std::vector<std::pair<int, int>> flagged;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int pass = 0; pass < 2; ++pass) {
      flagged.clear();
      for (int r = 0; r < img.height(); ++r) {
        for (int c = 0; c < img.width(); ++c) {
          if (img.get(c, r) && zhang_suen_candidate(img, c, r, pass)) flagged.emplace_back(c, r);
        }
      }
      for (auto [c, r] : flagged) {
        if (removable(img, c, r)) {
          img.set(c, r, false);
          changed = true;
        }
      }
    }
  }
}

void strip_simple_pixels(PaddedImage& img) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r = 0; r < img.height(); ++r) {
      for (int c = 0; c < img.width(); ++c) {
        if (img.get(c, r) && removable(img, c, r)) {
          img.set(c, r, false);
          changed = true;
        }
      }
    }
  }
}

bool block_at(const PaddedImage& img, int c, int r) {
  return img.get(c, r) && img.get(c + 1, r) && img.get(c, r + 1) && img.get(c + 1, r + 1);
}

bool in_any_block(const PaddedImage& img, int c, int r) {
  return block_at(img, c - 1, r - 1) || block_at(img, c, r - 1) || block_at(img, c - 1, r) ||
         block_at(img, c, r);
}

// Tries to dissolve the block with top-left corner (c, r) by inserting one
// pixel next to it and deleting one of its members.
bool repair_block(PaddedImage& img, const BinaryMask& allowed, int c, int r) {
  static constexpr std::array<std::pair<int, int>, 8> kNeighbours = {
      {{-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}}};
  const std::array<std::pair<int, int>, 4> members = {
      {{c, r}, {c + 1, r}, {c, r + 1}, {c + 1, r + 1}}};
  for (auto [pc, pr] : members) {
    for (auto [dc, dr] : kNeighbours) {
      const int qc = pc + dc;
      const int qr = pr + dr;
      if (qc >= c && qc <= c + 1 && qr >= r && qr <= r + 1) continue;
      if (!allowed.contains(qc, qr) || !allowed.test(qc, qr) || img.get(qc, qr)) continue;
      if (connectivity_number(img.ring(qc, qr)) != 1) continue;
      img.set(qc, qr, true);
      if (removable(img, pc, pr)) {
        img.set(pc, pr, false);
        if (!in_any_block(img, qc, qr)) return true;
        img.set(pc, pr, true);
      }
      img.set(qc, qr, false);
    }
  }
  return false;
}

}  // namespace

Skeleton::Skeleton(BinaryMask mask) : mask_(std::move(mask)) {
  if (count_2x2_blocks(mask_) != 0) {
    throw std::invalid_argument("skeleton contains a 2x2 block of set pixels");
  }
}

Skeleton skeletonize(const BinaryMask& mask) {
  PaddedImage img(mask);
  zhang_suen(img);
  strip_simple_pixels(img);

  const BinaryMask allowed = dilate(mask, 1);
  for (int round = 0; round < 16; ++round) {
    bool found = false;
    bool repaired = false;
    for (int r = 0; r + 1 < img.height(); ++r) {
      for (int c = 0; c + 1 < img.width(); ++c) {
        if (!block_at(img, c, r)) continue;
        found = true;
        repaired = repair_block(img, allowed, c, r) || repaired;
      }
    }
    if (!found || !repaired) break;
    strip_simple_pixels(img);
  }
  return Skeleton(img.to_mask(mask.geo()));
}

std::int64_t count_2x2_blocks(const BinaryMask& mask) {
  std::int64_t blocks = 0;
  for (int r = 0; r + 1 < mask.height(); ++r) {
    for (int c = 0; c + 1 < mask.width(); ++c) {
      if (mask(c, r) && mask(c + 1, r) && mask(c, r + 1) && mask(c + 1, r + 1)) ++blocks;
    }
  }
  return blocks;
}

std::int64_t count_components_8(const BinaryMask& mask) {
  std::vector<std::uint8_t> seen(mask.size(), 0);
  std::vector<std::pair<int, int>> stack;
  std::int64_t components = 0;
  const int w = mask.width();
  for (int r = 0; r < mask.height(); ++r) {
    for (int c = 0; c < w; ++c) {
      if (!mask(c, r) || seen[static_cast<std::size_t>(r) * w + c]) continue;
      ++components;
      seen[static_cast<std::size_t>(r) * w + c] = 1;
      stack.emplace_back(c, r);
      while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int nx = x + dx;
            const int ny = y + dy;
            if (!mask.contains(nx, ny) || !mask(nx, ny)) continue;
            auto& s = seen[static_cast<std::size_t>(ny) * w + nx];
            if (!s) {
              s = 1;
              stack.emplace_back(nx, ny);
            }
          }
        }
      }
    }
  }
  return components;
}

int neighbour_count(const BinaryMask& mask, int col, int row) {
  int n = 0;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      if ((dx != 0 || dy != 0) && mask.at_or(col + dx, row + dy, 0)) ++n;
    }
  }
  return n;
}

}  // namespace roadchange
