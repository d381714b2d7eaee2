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


#include "roadchange/scene.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "roadchange/morphology.hpp"
#include "roadchange/rasterize.hpp"

namespace roadchange {
namespace {

SceneOptions small_grid(std::uint64_t seed) {
  SceneOptions o;
  o.grid_cols = 4;
  o.grid_rows = 3;
  o.seed = seed;
  return o;
}

TEST(SceneTest, GridStructure) {
  const SyntheticScene s = generate_scene(small_grid(1));
  s.truth_pre.validate();
  s.truth_post.validate();
  EXPECT_EQ(s.truth_pre.node_count(), 12u);
  EXPECT_EQ(s.truth_pre.edge_count(), 3u * 3 + 4u * 2);
  EXPECT_EQ(s.pre.width(), s.post.width());
  EXPECT_EQ(s.pre.geo(), s.post.geo());
  EXPECT_DOUBLE_EQ(s.pre.width() * 0.5, 3 * 40.0 + 2 * 20.0);
}

TEST(SceneTest, DamagedEdgesAreSubsetAndTruncated) {
  SceneOptions o = small_grid(3);
  o.damage_fraction = 0.3;
  const SyntheticScene s = generate_scene(o);
  EXPECT_EQ(s.damaged_edges.size(), 5u);
  EXPECT_TRUE(std::is_sorted(s.damaged_edges.begin(), s.damaged_edges.end()));
  for (EdgeId e : s.damaged_edges) EXPECT_LT(e, static_cast<EdgeId>(s.truth_pre.edge_count()));
  const std::size_t undamaged = s.truth_pre.edge_count() - s.damaged_edges.size();
  EXPECT_EQ(s.truth_post.edge_count(), undamaged + 2 * s.damaged_edges.size());
  const double removed = 0.6 * 40.0 * static_cast<double>(s.damaged_edges.size());
  EXPECT_NEAR(s.truth_post.total_length(), s.truth_pre.total_length() - removed, 1e-9);
}

TEST(SceneTest, NoDamageNoNoiseGivesEqualMasks) {
  SceneOptions o = small_grid(4);
  o.damage_fraction = 0.0;
  const SyntheticScene s = generate_scene(o);
  EXPECT_EQ(s.pre, s.post);
  EXPECT_TRUE(s.damaged_edges.empty());
}

TEST(SceneTest, FullDamageOnSingleEdgeClearsItsMiddle) {
  SceneOptions o;
  o.grid_cols = 2;
  o.grid_rows = 1;
  o.damage_fraction = 1.0;
  const SyntheticScene s = generate_scene(o);
  ASSERT_EQ(s.damaged_edges, std::vector<EdgeId>{0});
  const BinaryMask post = threshold(s.post, 0.5);
  const BinaryMask pre = threshold(s.pre, 0.5);
  const Point mid = midpoint(s.truth_pre.node(0).position, s.truth_pre.node(1).position);
  const PixelCoord px = s.pre.geo().world_to_pixel(mid);
  const int c = static_cast<int>(std::lround(px.col));
  const int r = static_cast<int>(std::lround(px.row));
  EXPECT_TRUE(pre.test(c, r));
  EXPECT_FALSE(post.test(c, r));
}

TEST(SceneTest, MasksMatchRasterizedTruth) {
  const SyntheticScene s = generate_scene(small_grid(5));
  const BinaryMask expect = rasterize_graph(s.truth_post, s.post.geo(), s.post.width(),
                                            s.post.height(), 2.0);
  EXPECT_EQ(threshold(s.post, 0.5), expect);
}

TEST(SceneTest, SeedDeterminism) {
  SceneOptions o;
  o.noise = 0.01;
  o.max_shift = 4;
  o.seed = 7;
  const SyntheticScene a = generate_scene(o);
  const SyntheticScene b = generate_scene(o);
  EXPECT_EQ(a.pre, b.pre);
  EXPECT_EQ(a.post, b.post);
  EXPECT_EQ(a.truth_post, b.truth_post);
  EXPECT_EQ(a.damaged_edges, b.damaged_edges);
  o.seed = 8;
  EXPECT_NE(generate_scene(o).post, a.post);
}

TEST(SceneTest, ShiftMovesPostContent) {
  SceneOptions o = small_grid(11);
  o.damage_fraction = 0.0;
  o.max_shift = 5;
  const SyntheticScene s = generate_scene(o);
  EXPECT_LE(std::abs(s.shift_dx), 5);
  EXPECT_LE(std::abs(s.shift_dy), 5);
  EXPECT_EQ(threshold(s.post, 0.5), translate(threshold(s.pre, 0.5), s.shift_dx, s.shift_dy));
}

TEST(SceneTest, RadialLayout) {
  SceneOptions o;
  o.layout = SceneLayout::kRadial;
  o.radial_spokes = 6;
  o.radial_rings = 2;
  const SyntheticScene s = generate_scene(o);
  s.truth_pre.validate();
  EXPECT_EQ(s.truth_pre.node_count(), 1u + 6 * 2);
  EXPECT_EQ(s.truth_pre.edge_count(), 6u * 2 + 6u * 2);
}

TEST(SceneTest, InvalidOptionsThrow) {
  SceneOptions o;
  o.damage_fraction = 1.5;
  EXPECT_THROW(generate_scene(o), std::invalid_argument);
  o = SceneOptions{};
  o.grid_cols = 0;
  EXPECT_THROW(generate_scene(o), std::invalid_argument);
}

TEST(SceneRngTest, UniformDraws) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = uniform01(rng);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(uniform_index(rng, 7), 7u);
  }
}

}  // namespace
}  // namespace roadchange
