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


#ifndef ROADCHANGE_PIPELINE_CONFIG_HPP_
#define ROADCHANGE_PIPELINE_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace roadchange {

// Every tunable of the change-detection pipeline. Distances are in world
// units (meters) unless the name says px.
struct PipelineConfig {
  double threshold = 0.5;       // probability cut, [0, 1]
  int dilation_radius = 2;      // px, >= 0
  int min_width = 3;            // px, >= 0
  int search_radius = 10;       // registration search, px, >= 0
  double rdp_epsilon = 2.0;     // >= 0
  double slice_length = 20.0;   // > 0
  double max_assign_dist = 30.0;  // > 0
  double alpha = std::numeric_limits<double>::infinity();  // >= 1 or inf
  double d_min = 1.0;           // > 0
  int heatmap_cell = 100;       // px, >= 1
  double ratio_low = 0.9;       // (0, 1]
  double ratio_high = 1.1;      // >= 1
  std::int64_t pair_count = 1000;  // >= 0
  std::uint64_t seed = 0;
  double min_spur_px = 5.0;     // >= 0
  double snap_tolerance = 1.0;  // >= 0
  double map_tolerance = 30.0;  // > 0
  double min_separation = 0.0;  // >= 0

  // Throws std::invalid_argument naming the first out-of-range field.
  void validate() const;

  friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

// Names of all fields, in declaration order.
std::vector<std::string> config_field_names();

// Flat object with every field plus schema_version. alpha = inf is written
// as the string "inf".
nlohmann::ordered_json config_to_json(const PipelineConfig& config);

// Overwrites the fields present in `doc` (a flat object) and validates the
// result. Throws ParseError on unknown keys or wrongly typed values.
void apply_config_json(PipelineConfig& config, const nlohmann::json& doc);

// Sets one field from command-line text ("inf" is accepted for alpha).
void set_config_field(PipelineConfig& config, const std::string& name, const std::string& text);

// Defaults overlaid with the file's fields. Throws IoError / ParseError.
PipelineConfig load_config(const std::filesystem::path& path);

}  // namespace roadchange

#endif  // ROADCHANGE_PIPELINE_CONFIG_HPP_
