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


#include "roadchange/pipeline_config.hpp"

#include <cmath>
#include <stdexcept>
#include <type_traits>

#include "roadchange/errors.hpp"
#include "roadchange/graph_io.hpp"
#include "roadchange/json_io.hpp"

namespace roadchange {
namespace {

template <typename Config, typename Fn>
void for_each_field(Config& c, Fn&& fn) {
  fn("threshold", c.threshold);
  fn("dilation_radius", c.dilation_radius);
  fn("min_width", c.min_width);
  fn("search_radius", c.search_radius);
  fn("rdp_epsilon", c.rdp_epsilon);
  fn("slice_length", c.slice_length);
  fn("max_assign_dist", c.max_assign_dist);
  fn("alpha", c.alpha);
  fn("d_min", c.d_min);
  fn("heatmap_cell", c.heatmap_cell);
  fn("ratio_low", c.ratio_low);
  fn("ratio_high", c.ratio_high);
  fn("pair_count", c.pair_count);
  fn("seed", c.seed);
  fn("min_spur_px", c.min_spur_px);
  fn("snap_tolerance", c.snap_tolerance);
  fn("map_tolerance", c.map_tolerance);
  fn("min_separation", c.min_separation);
}

template <typename T>
void read_value(const std::string& key, const nlohmann::json& value, T& out) {
  if constexpr (std::is_floating_point_v<T>) {
    const double v = parse_number_or_inf(value);
    if (std::isinf(v) && key != "alpha") throw ParseError("'" + key + "' must be finite");
    out = v;
  } else if constexpr (std::is_unsigned_v<T>) {
    if (!value.is_number_unsigned()) throw ParseError("'" + key + "' must be a non-negative integer");
    out = value.get<T>();
  } else {
    if (!value.is_number_integer()) throw ParseError("'" + key + "' must be an integer");
    const auto v = value.get<std::int64_t>();
    if (v < std::numeric_limits<T>::min() || v > std::numeric_limits<T>::max()) {
      throw ParseError("'" + key + "' is out of range");
    }
    out = static_cast<T>(v);
  }
}

void require(bool ok, const char* field, const char* rule) {
  if (!ok) throw std::invalid_argument(std::string("config field '") + field + "' must be " + rule);
}

}  // namespace

void PipelineConfig::validate() const {
  require(threshold >= 0.0 && threshold <= 1.0, "threshold", "in [0, 1]");
  require(dilation_radius >= 0, "dilation_radius", ">= 0");
  require(min_width >= 0, "min_width", ">= 0");
  require(search_radius >= 0, "search_radius", ">= 0");
  require(rdp_epsilon >= 0.0, "rdp_epsilon", ">= 0");
  require(slice_length > 0.0, "slice_length", "> 0");
  require(max_assign_dist > 0.0, "max_assign_dist", "> 0");
  require(alpha >= 1.0, "alpha", ">= 1 or inf");
  require(d_min > 0.0, "d_min", "> 0");
  require(heatmap_cell >= 1, "heatmap_cell", ">= 1");
  require(ratio_low > 0.0 && ratio_low <= 1.0, "ratio_low", "in (0, 1]");
  require(ratio_high >= 1.0, "ratio_high", ">= 1");
  require(pair_count >= 0, "pair_count", ">= 0");
  require(min_spur_px >= 0.0, "min_spur_px", ">= 0");
  require(snap_tolerance >= 0.0, "snap_tolerance", ">= 0");
  require(map_tolerance > 0.0, "map_tolerance", "> 0");
  require(min_separation >= 0.0, "min_separation", ">= 0");
}

std::vector<std::string> config_field_names() {
  std::vector<std::string> names;
  PipelineConfig c;
  for_each_field(c, [&](const char* key, auto&) { names.emplace_back(key); });
  return names;
}

nlohmann::ordered_json config_to_json(const PipelineConfig& config) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  for_each_field(config, [&](const char* key, const auto& value) {
    if constexpr (std::is_floating_point_v<std::decay_t<decltype(value)>>) {
      doc[key] = number_or_inf(value);
    } else {
      doc[key] = value;
    }
  });
  return doc;
}

void apply_config_json(PipelineConfig& config, const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("config must be a JSON object");
  PipelineConfig next = config;
  for (const auto& [key, value] : doc.items()) {
    if (key == "schema_version") {
      if (value != kSchemaVersion) throw ParseError("unsupported config schema_version");
      continue;
    }
    bool known = false;
    for_each_field(next, [&](const char* name, auto& field) {
      if (key != name) return;
      known = true;
      read_value(key, value, field);
    });
    if (!known) throw ParseError("unknown config field '" + key + "'");
  }
  try {
    next.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  config = next;
}

void set_config_field(PipelineConfig& config, const std::string& name, const std::string& text) {
  nlohmann::json value;
  try {
    value = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    value = text;
  }
  apply_config_json(config, nlohmann::json{{name, value}});
}

PipelineConfig load_config(const std::filesystem::path& path) {
  PipelineConfig config;
  apply_config_json(config, read_json_file(path));
  return config;
}

}  // namespace roadchange
