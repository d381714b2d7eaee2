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


// The full change-detection chain, from road probability masks and a prior
// road network to a costed routing graph:
//
//   threshold -> register -> dilate -> diff -> clean -> skeletonize ->
//   extract -> simplify / slice -> assign -> cost -> emit

#ifndef ROADCHANGE_PIPELINE_HPP_
#define ROADCHANGE_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "roadchange/graph_compare.hpp"
#include "roadchange/heatmap.hpp"
#include "roadchange/osm_fusion.hpp"
#include "roadchange/pipeline_config.hpp"
#include "roadchange/raster.hpp"
#include "roadchange/registration.hpp"
#include "roadchange/road_graph.hpp"
#include "roadchange/scene.hpp"

namespace roadchange {

struct DiffResult {
  PixelOffset offset;  // applied to the post mask
  std::int64_t raw_diff_pixels = 0;
  BinaryMask diff;  // cleaned
};

// threshold -> register -> translate post -> dilate both -> diff -> clean.
// Throws DimensionMismatch and NoSignal.
DiffResult compute_diff(const PipelineConfig& config, const ProbabilityMask& pre,
                        const ProbabilityMask& post);

// skeletonize -> extract -> RDP simplify.
RoadGraph extract_road_graph(const PipelineConfig& config, const BinaryMask& mask);

struct PipelineResult {
  DiffResult diff;
  RoadGraph diff_graph;  // simplified
  SubSegmentSet diff_segments;
  AssignmentResult assignments;
  CostedGraph costed;
  HeatmapGrid heatmap;
};

PipelineResult run_pipeline(const PipelineConfig& config, const ProbabilityMask& pre,
                            const ProbabilityMask& post, const RoadGraph& osm);

struct PipelinePaths {
  std::filesystem::path pre;
  std::filesystem::path post;
  std::filesystem::path osm;
  std::filesystem::path out_dir;
};

// Loads the inputs, runs the pipeline and writes every artifact into
// out_dir. Nothing is written unless all stages succeed. The manifest holds
// the config, input paths and hashes, the registration offset, stage
// statistics and output hashes; it has no timestamps, so identical inputs
// give byte-identical artifacts.
PipelineResult run_pipeline_files(const PipelineConfig& config, const PipelinePaths& paths);

// Output file name -> contents for every artifact of a run.
std::map<std::string, std::string> render_artifacts(const PipelineConfig& config,
                                                    const PipelineResult& result,
                                                    const nlohmann::ordered_json& inputs);

// Writes pre.pgm, post.pgm (with sidecars), osm.geojson, truth_pre.geojson,
// truth_post.geojson and scene.json into dir.
void write_scene(const SyntheticScene& scene, const SceneOptions& options,
                 const std::filesystem::path& dir);

}  // namespace roadchange

#endif  // ROADCHANGE_PIPELINE_HPP_
