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


#include "roadchange/pipeline.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "roadchange/errors.hpp"
#include "roadchange/graph_extract.hpp"
#include "roadchange/graph_io.hpp"
#include "roadchange/json_io.hpp"
#include "roadchange/morphology.hpp"
#include "roadchange/raster_io.hpp"
#include "roadchange/skeleton.hpp"

#ifndef ROADCHANGE_VERSION
#define ROADCHANGE_VERSION "0.0.0"
#endif

namespace roadchange {
namespace {

using ojson = nlohmann::ordered_json;

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

ojson assignments_to_json(const AssignmentResult& result) {
  ojson doc;
  doc["schema_version"] = kSchemaVersion;
  ojson assigned = ojson::array();
  for (const DamageAssignment& a : result.assigned) {
    ojson entry;
    entry["diff_segment"] = a.diff_segment;
    entry["osm_edge"] = a.osm_edge;
    entry["s_e_diff"] = a.s_e_diff;
    entry["d"] = a.d;
    if (a.alpha) entry["alpha"] = number_or_inf(*a.alpha);
    assigned.push_back(std::move(entry));
  }
  doc["assigned"] = std::move(assigned);
  doc["unassigned"] = result.unassigned;
  return doc;
}

ojson file_entry(const std::filesystem::path& path) {
  ojson entry;
  entry["path"] = path.generic_string();
  entry["sha256"] = sha256_hex(read_text_file(path));
  const auto sidecar = geo_sidecar_path(path);
  if (path.extension() != ".geojson" && std::filesystem::exists(sidecar)) {
    entry["geo_sha256"] = sha256_hex(read_text_file(sidecar));
  }
  return entry;
}

}  // namespace

DiffResult compute_diff(const PipelineConfig& config, const ProbabilityMask& pre,
                        const ProbabilityMask& post) {
  config.validate();
  const BinaryMask pre_bits = threshold(pre, config.threshold);
  const BinaryMask post_bits = threshold(post, config.threshold);
  DiffResult result;
  result.offset = register_masks(pre_bits, post_bits, config.search_radius);
  const BinaryMask aligned = translate(post_bits, result.offset.dx, result.offset.dy);
  const BinaryMask raw = diff_masks(dilate(pre_bits, config.dilation_radius),
                                    dilate(aligned, config.dilation_radius));
  result.raw_diff_pixels = raw.count();
  result.diff = clean_diff(raw, config.min_width);
  return result;
}

RoadGraph extract_road_graph(const PipelineConfig& config, const BinaryMask& mask) {
  const Skeleton skeleton = skeletonize(mask);
  const RoadGraph graph = extract_graph(skeleton, ExtractOptions{config.min_spur_px});
  return rdp_simplify(graph, config.rdp_epsilon);
}

PipelineResult run_pipeline(const PipelineConfig& config, const ProbabilityMask& pre,
                            const ProbabilityMask& post, const RoadGraph& osm) {
  PipelineResult result;
  result.diff = compute_diff(config, pre, post);
  result.diff_graph = extract_road_graph(config, result.diff.diff);
  result.diff_segments = slice_segments(result.diff_graph, config.slice_length);
  result.assignments =
      assign_damage(result.diff_segments, osm, config.max_assign_dist, config.d_min);
  result.costed = apply_damage_costs(osm, result.assignments.assigned, config.alpha);
  result.heatmap = heatmap(result.diff.diff, config.heatmap_cell);
  return result;
}

std::map<std::string, std::string> render_artifacts(const PipelineConfig& config,
                                                    const PipelineResult& result,
                                                    const nlohmann::ordered_json& inputs) {
  std::map<std::string, std::string> files;
  const BinaryMask& diff = result.diff.diff;
  files["diff_mask.pgm"] = encode_pgm(to_gray(diff));
  files["diff_mask.geo.json"] = encode_geo_sidecar(diff.geo());
  files["diff_graph.geojson"] = dump(graph_to_geojson(result.diff_graph));
  files["diff_segments.geojson"] = dump(segments_to_geojson(result.diff_segments));
  files["assignments.json"] = dump(assignments_to_json(result.assignments));
  files["costed_graph.geojson"] = dump(costed_graph_to_geojson(result.costed));
  files["heatmap.csv"] = heatmap_to_csv(result.heatmap);
  files["heatmap.pgm"] = encode_pgm(heatmap_to_image(result.heatmap));
  GeoTransform cell_geo = diff.geo();
  cell_geo.pixel_size_x *= config.heatmap_cell;
  cell_geo.pixel_size_y *= config.heatmap_cell;
  files["heatmap.geo.json"] = encode_geo_sidecar(cell_geo);

  const auto removed = std::count(result.costed.removed.begin(), result.costed.removed.end(), true);
  const auto raised = std::count_if(result.costed.edge_costs.begin(),
                                    result.costed.edge_costs.end(), [](double c) { return c > 1.0; });
  ojson stats;
  stats["raw_diff_pixels"] = result.diff.raw_diff_pixels;
  stats["diff_pixels"] = diff.count();
  stats["diff_nodes"] = result.diff_graph.node_count();
  stats["diff_edges"] = result.diff_graph.edge_count();
  stats["diff_segments"] = result.diff_segments.size();
  stats["assigned_segments"] = result.assignments.assigned.size();
  stats["unassigned_segments"] = result.assignments.unassigned.size();
  stats["osm_edges"] = result.costed.base.edge_count();
  stats["costed_edges"] = raised;
  stats["removed_edges"] = removed;

  ojson manifest;
  manifest["schema_version"] = kSchemaVersion;
  manifest["tool"] = "roadchange";
  manifest["version"] = ROADCHANGE_VERSION;
  manifest["config"] = config_to_json(config);
  manifest["inputs"] = inputs;
  manifest["registration"] = {{"dx", result.diff.offset.dx},
                              {"dy", result.diff.offset.dy},
                              {"score", result.diff.offset.score}};
  manifest["stats"] = std::move(stats);
  ojson outputs;
  for (const auto& [name, contents] : files) outputs[name] = sha256_hex(contents);
  manifest["outputs"] = std::move(outputs);
  files["manifest.json"] = dump(manifest);
  return files;
}

PipelineResult run_pipeline_files(const PipelineConfig& config, const PipelinePaths& paths) {
  const ProbabilityMask pre = load_probability_mask(paths.pre);
  const ProbabilityMask post = load_probability_mask(paths.post);
  const RoadGraph osm = read_graph_file(paths.osm, config.snap_tolerance);
  ojson inputs;
  inputs["pre"] = file_entry(paths.pre);
  inputs["post"] = file_entry(paths.post);
  inputs["osm"] = file_entry(paths.osm);

  PipelineResult result = run_pipeline(config, pre, post, osm);
  const auto files = render_artifacts(config, result, inputs);
  std::error_code ec;
  std::filesystem::create_directories(paths.out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + paths.out_dir.string() + ": " + ec.message());
  for (const auto& [name, contents] : files) write_text_file(paths.out_dir / name, contents);
  return result;
}

void write_scene(const SyntheticScene& scene, const SceneOptions& options,
                 const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create scene directory " + dir.string() + ": " + ec.message());
  save_probability_mask(dir / "pre.pgm", scene.pre);
  save_probability_mask(dir / "post.pgm", scene.post);
  write_json_file(dir / "osm.geojson", graph_to_osm_geojson(scene.truth_pre));
  write_json_file(dir / "truth_pre.geojson", graph_to_geojson(scene.truth_pre));
  write_json_file(dir / "truth_post.geojson", graph_to_geojson(scene.truth_post));

  ojson meta;
  meta["schema_version"] = kSchemaVersion;
  meta["layout"] = options.layout == SceneLayout::kGrid ? "grid" : "radial";
  meta["seed"] = options.seed;
  meta["damage_fraction"] = options.damage_fraction;
  meta["noise"] = options.noise;
  meta["blur_radius"] = options.blur_radius;
  meta["max_shift"] = options.max_shift;
  meta["pixel_size"] = options.pixel_size;
  meta["damaged_edges"] = scene.damaged_edges;
  meta["shift"] = {{"dx", scene.shift_dx}, {"dy", scene.shift_dy}};
  meta["expected_offset"] = {{"dx", -scene.shift_dx}, {"dy", -scene.shift_dy}};
  write_json_file(dir / "scene.json", meta);
}

}  // namespace roadchange
