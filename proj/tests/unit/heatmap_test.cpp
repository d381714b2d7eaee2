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

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace roadchange {
namespace {

TEST(HeatmapTest, CountsPerCellWithPartialEdges) {
  BinaryMask m(5, 3);
  m.set(0, 0);
  m.set(1, 1);
  m.set(4, 0);
  m.set(4, 2);
  const HeatmapGrid g = heatmap(m, 2);
  EXPECT_EQ(g.rows, 2);
  EXPECT_EQ(g.cols, 3);
  EXPECT_EQ(g.at(0, 0), 2);
  EXPECT_EQ(g.at(0, 2), 1);
  EXPECT_EQ(g.at(1, 2), 1);
  EXPECT_EQ(g.at(1, 0), 0);
  EXPECT_EQ(g.max_sum(), 2);
}

TEST(HeatmapTest, TotalEqualsPixelCount) {
  std::mt19937_64 rng(8);
  for (int cell : {1, 3, 7, 100}) {
    const BinaryMask m = testing::random_mask(rng, 45, 38, 0.3);
    const HeatmapGrid g = heatmap(m, cell);
    EXPECT_EQ(g.total(), m.count());
    EXPECT_EQ(g.sums.size(), static_cast<std::size_t>(g.rows) * g.cols);
  }
  EXPECT_THROW(heatmap(BinaryMask(3, 3), 0), std::invalid_argument);
}

TEST(HeatmapTest, CsvLayout) {
  BinaryMask m(2, 2);
  m.set(1, 0);
  EXPECT_EQ(heatmap_to_csv(heatmap(m, 1)), "row,col,sum\n0,0,0\n0,1,1\n1,0,0\n1,1,0\n");
}

TEST(HeatmapTest, ImageScalesToPeak) {
  BinaryMask m(4, 2);
  m.set(0, 0);
  m.set(1, 0);
  m.set(0, 1);
  m.set(1, 1);
  m.set(2, 0);
  const GrayImage img = heatmap_to_image(heatmap(m, 2));
  EXPECT_EQ(img(0, 0), 255);
  EXPECT_EQ(img(1, 0), 64);
  EXPECT_EQ(heatmap_to_image(heatmap(BinaryMask(4, 4), 2))(1, 1), 0);
}

}  // namespace
}  // namespace roadchange
