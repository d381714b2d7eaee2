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


// Seeded synthetic before/after road scenes with known damage.

#ifndef ROADCHANGE_SCENE_HPP_
#define ROADCHANGE_SCENE_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "roadchange/raster.hpp"
#include "roadchange/road_graph.hpp"

namespace roadchange {

enum class SceneLayout { kGrid, kRadial };

struct SceneOptions {
  SceneLayout layout = SceneLayout::kGrid;
  int grid_cols = 8;  // nodes per row
  int grid_rows = 8;  // nodes per column
  int radial_spokes = 8;
  int radial_rings = 3;
  double spacing = 40.0;  // node spacing / ring spacing, m
  double margin = 20.0;   // border around the network, m
  double pixel_size = 0.5;
  double buffer = 2.0;  // road half-width burned into the masks, m

  double damage_fraction = 0.1;
  // Fraction of each damaged edge, measured from node a, that disappears.
  double damage_start = 0.2;
  double damage_end = 0.8;

  double road_probability = 0.9;
  double background_probability = 0.1;
  int blur_radius = 0;  // box blur of the probabilities, px
  // Per-pixel chance of replacing the probability with a uniform draw.
  double noise = 0.0;
  // The post mask is moved by a shift drawn from [-max_shift, max_shift]^2.
  int max_shift = 0;
  std::uint64_t seed = 0;
};

struct SyntheticScene {
  RoadGraph truth_pre;
  // truth_pre with each damaged edge replaced by its surviving stubs.
  // Undamaged edges come first in their original order, then the stubs.
  RoadGraph truth_post;
  std::vector<EdgeId> damaged_edges;  // sorted ids in truth_pre
  ProbabilityMask pre;
  ProbabilityMask post;
  // Shift applied to the post mask content; registration should answer
  // (-shift_dx, -shift_dy).
  int shift_dx = 0;
  int shift_dy = 0;
};

// Throws std::invalid_argument for out-of-range options.
SyntheticScene generate_scene(const SceneOptions& options);

// Platform-independent draws from a 64-bit Mersenne Twister.
double uniform01(std::mt19937_64& rng);
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n);

}  // namespace roadchange

#endif  // ROADCHANGE_SCENE_HPP_
