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


// roadchange: post-disaster road change detection from road masks.
//
//   roadchange run --pre pre.pgm --post post.pgm --osm roads.geojson --out out/
//   roadchange gen-scene --out scene/ --seed 7
//   roadchange eval-segments --predicted a.geojson --truth b.geojson
//
// Every subcommand accepts --config FILE and per-field overrides such as
// --alpha inf, --slice-length 20 or --seed 3 (flag > file > default).
//
// Coordinates are read in a local planar frame in meters. Longitude /
// latitude data should be projected first, for example with the
// equirectangular approximation x = R * lon * cos(lat0), y = R * lat around
// the scene latitude lat0.
//
// Exit codes: 0 success, 1 other failure, 2 I/O, 3 parse or schema error,
// 4 registration without signal, 5 empty road network.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "roadchange/connectivity.hpp"
#include "roadchange/errors.hpp"
#include "roadchange/graph_compare.hpp"
#include "roadchange/graph_io.hpp"
#include "roadchange/heatmap.hpp"
#include "roadchange/json_io.hpp"
#include "roadchange/morphology.hpp"
#include "roadchange/osm_fusion.hpp"
#include "roadchange/pipeline.hpp"
#include "roadchange/pipeline_config.hpp"
#include "roadchange/raster_io.hpp"
#include "roadchange/routing.hpp"
#include "roadchange/scene.hpp"

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace roadchange {
namespace {

enum ExitCode {
  kOk = 0,
  kFailure = 1,
  kIo = 2,
  kParse = 3,
  kNoSignal = 4,
  kEmptyNetwork = 5,
};

// Config file and per-field overrides shared by every subcommand.
struct ConfigFlags {
  std::string config_path;
  std::map<std::string, std::string> overrides;

  PipelineConfig resolve() const {
    PipelineConfig config = config_path.empty() ? PipelineConfig{} : load_config(config_path);
    for (const auto& [name, text] : overrides) set_config_field(config, name, text);
    return config;
  }
};

std::string flag_name(std::string field) {
  for (char& c : field) {
    if (c == '_') c = '-';
  }
  return "--" + field;
}

void add_config_flags(CLI::App& app, ConfigFlags& flags) {
  app.add_option("--config", flags.config_path, "Flat JSON pipeline config");
  for (const std::string& field : config_field_names()) {
    app.add_option_function<std::string>(
           flag_name(field),
           [&flags, field](const std::string& text) { flags.overrides[field] = text; },
           "Override config field " + field)
        ->type_name("VALUE");
  }
}

void emit(const ojson& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    write_json_file(out_path, doc);
  }
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

Point parse_point(const std::string& text) {
  double x = 0.0;
  double y = 0.0;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> x >> comma >> y) || comma != ',') {
    throw ParseError("expected a point as X,Y, got '" + text + "'");
  }
  return {x, y};
}

std::vector<std::int64_t> parse_counts(const std::string& text) {
  std::vector<std::int64_t> counts;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      counts.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("bad count '" + item + "' in --counts");
    }
  }
  if (counts.size() != 3 || counts[0] < 0 || counts[1] < 0 || counts[2] < 0) {
    throw ParseError("--counts expects three non-negative integers TP,FP,FN");
  }
  return counts;
}

SubSegmentSet prepare_segments(const RoadGraph& graph, const PipelineConfig& config) {
  return slice_segments(rdp_simplify(graph, config.rdp_epsilon), config.slice_length);
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Post-disaster road change detection and routing evaluation", "roadchange"};
  app.require_subcommand(1);
  app.fallthrough();
  ConfigFlags flags;
  add_config_flags(app, flags);
  std::function<void()> action;

  // run
  PipelinePaths run_paths;
  auto* run = app.add_subcommand("run", "Full chain: masks + road network -> costed graph");
  run->add_option("--pre", run_paths.pre, "Pre-event road probability mask (PGM/PNG)")->required();
  run->add_option("--post", run_paths.post, "Post-event road probability mask")->required();
  run->add_option("--osm", run_paths.osm, "Prior road network (GeoJSON)")->required();
  run->add_option("--out", run_paths.out_dir, "Output directory")->required();
  run->callback([&] {
    action = [&] {
      const PipelineResult result = run_pipeline_files(flags.resolve(), run_paths);
      ojson summary;
      summary["schema_version"] = kSchemaVersion;
      summary["offset"] = {{"dx", result.diff.offset.dx}, {"dy", result.diff.offset.dy}};
      summary["diff_segments"] = result.diff_segments.size();
      summary["removed_edges"] =
          std::count(result.costed.removed.begin(), result.costed.removed.end(), true);
      emit(summary, "");
    };
  });

  // extract
  std::string extract_mask;
  std::string extract_out;
  auto* extract = app.add_subcommand("extract", "Road probability mask -> road graph GeoJSON");
  extract->add_option("--mask", extract_mask, "Road probability mask")->required();
  extract->add_option("--out", extract_out, "Output GeoJSON (stdout if omitted)");
  extract->callback([&] {
    action = [&] {
      const PipelineConfig config = flags.resolve();
      const BinaryMask bits = threshold(load_probability_mask(extract_mask), config.threshold);
      emit(graph_to_geojson(extract_road_graph(config, dilate(bits, config.dilation_radius))),
           extract_out);
    };
  });

  // diff
  std::string diff_pre;
  std::string diff_post;
  fs::path diff_out;
  auto* diff = app.add_subcommand("diff", "Registered, cleaned change mask of two road masks");
  diff->add_option("--pre", diff_pre, "Pre-event road probability mask")->required();
  diff->add_option("--post", diff_post, "Post-event road probability mask")->required();
  diff->add_option("--out", diff_out, "Output directory")->required();
  diff->callback([&] {
    action = [&] {
      const PipelineConfig config = flags.resolve();
      const DiffResult result =
          compute_diff(config, load_probability_mask(diff_pre), load_probability_mask(diff_post));
      ojson report;
      report["schema_version"] = kSchemaVersion;
      report["offset"] = {{"dx", result.offset.dx},
                          {"dy", result.offset.dy},
                          {"score", result.offset.score}};
      report["raw_diff_pixels"] = result.raw_diff_pixels;
      report["diff_pixels"] = result.diff.count();
      ensure_dir(diff_out);
      save_binary_mask(diff_out / "diff_mask.pgm", result.diff);
      write_json_file(diff_out / "diff.json", report);
      emit(report, "");
    };
  });

  // fuse
  std::string fuse_diff;
  std::string fuse_osm;
  fs::path fuse_out;
  auto* fuse = app.add_subcommand("fuse", "Change graph + road network -> costed graph");
  fuse->add_option("--diff-graph", fuse_diff, "Change graph GeoJSON")->required();
  fuse->add_option("--osm", fuse_osm, "Prior road network GeoJSON")->required();
  fuse->add_option("--out", fuse_out, "Output directory")->required();
  fuse->callback([&] {
    action = [&] {
      const PipelineConfig config = flags.resolve();
      const RoadGraph change = read_graph_file(fuse_diff, config.snap_tolerance);
      const RoadGraph osm = read_graph_file(fuse_osm, config.snap_tolerance);
      const SubSegmentSet segments = prepare_segments(change, config);
      const AssignmentResult assigned =
          assign_damage(segments, osm, config.max_assign_dist, config.d_min);
      const CostedGraph costed = apply_damage_costs(osm, assigned.assigned, config.alpha);
      ensure_dir(fuse_out);
      write_json_file(fuse_out / "diff_segments.geojson", segments_to_geojson(segments));
      write_json_file(fuse_out / "costed_graph.geojson", costed_graph_to_geojson(costed));
      ojson summary;
      summary["schema_version"] = kSchemaVersion;
      summary["assigned_segments"] = assigned.assigned.size();
      summary["unassigned_segments"] = assigned.unassigned.size();
      summary["removed_edges"] = std::count(costed.removed.begin(), costed.removed.end(), true);
      emit(summary, "");
    };
  });

  // route
  std::string route_graph;
  std::string route_from;
  std::string route_to;
  std::string route_out;
  auto* route = app.add_subcommand("route", "Shortest path between two points of a graph");
  route->add_option("--graph", route_graph, "Graph GeoJSON (costed graphs use their costs)")
      ->required();
  route->add_option("--from", route_from, "Source point X,Y")->required();
  route->add_option("--to", route_to, "Destination point X,Y")->required();
  route->add_option("--out", route_out, "Output JSON (stdout if omitted)");
  route->callback([&] {
    action = [&] {
      const PipelineConfig config = flags.resolve();
      const WeightedGraph graph = read_weighted_graph_file(route_graph, config.snap_tolerance);
      const NodeId src = nearest_node(graph.graph, parse_point(route_from), config.map_tolerance);
      const NodeId dst = nearest_node(graph.graph, parse_point(route_to), config.map_tolerance);
      if (src < 0 || dst < 0) throw UnknownNode("no graph node within map_tolerance of an endpoint");
      const PathResult path = shortest_path(graph, src, dst);
      ojson doc;
      doc["schema_version"] = kSchemaVersion;
      doc["status"] = path.status == PathStatus::kFound ? "found" : "no_path";
      doc["total_weight"] = path.total_weight;
      doc["node_sequence"] = path.node_sequence;
      emit(doc, route_out);
    };
  });

  // eval-segments
  std::string seg_predicted;
  std::string seg_truth;
  std::string seg_counts;
  std::string seg_policy = "one-to-one";
  std::string seg_out;
  auto* eval_segments =
      app.add_subcommand("eval-segments", "Sub-segment precision / recall / F-score");
  eval_segments->add_option("--predicted", seg_predicted, "Predicted graph GeoJSON");
  eval_segments->add_option("--truth", seg_truth, "Reference graph GeoJSON");
  eval_segments->add_option("--counts", seg_counts, "Score fixed counts TP,FP,FN instead");
  eval_segments->add_option("--policy", seg_policy, "one-to-one or all-pairs")
      ->check(CLI::IsMember({"one-to-one", "all-pairs"}));
  eval_segments->add_option("--out", seg_out, "Output JSON (stdout if omitted)");
  eval_segments->callback([&] {
    action = [&] {
      const PipelineConfig config = flags.resolve();
      MatchMetrics metrics;
      if (!seg_counts.empty()) {
        const auto c = parse_counts(seg_counts);
        metrics = MatchMetrics::from_counts(c[0], c[1], c[2]);
      } else {
        if (seg_predicted.empty() || seg_truth.empty()) {
          throw CLI::ValidationError("eval-segments", "needs --predicted and --truth, or --counts");
        }
        const MatchPolicy policy =
            seg_policy == "all-pairs" ? MatchPolicy::kAllPairs : MatchPolicy::kOneToOne;
        metrics = segment_metrics(
            prepare_segments(read_graph_file(seg_predicted, config.snap_tolerance), config),
            prepare_segments(read_graph_file(seg_truth, config.snap_tolerance), config), policy);
      }
      emit(metrics_to_json(metrics), seg_out);
    };
  });

  // eval-connectivity
  std::string conn_predicted;
  std::string conn_truth;
  std::string conn_out;
  auto* eval_connectivity =
      app.add_subcommand("eval-connectivity", "Shortest-path connectivity comparison");
  eval_connectivity->add_option("--predicted", conn_predicted, "Predicted graph GeoJSON")
      ->required();
  eval_connectivity->add_option("--truth", conn_truth, "Reference graph GeoJSON")->required();
  eval_connectivity->add_option("--out", conn_out, "Output JSON (stdout if omitted)");
  eval_connectivity->callback([&] {
    action = [&] {
      const PipelineConfig config = flags.resolve();
      const WeightedGraph predicted = read_weighted_graph_file(conn_predicted, config.snap_tolerance);
      const WeightedGraph truth = read_weighted_graph_file(conn_truth, config.snap_tolerance);
      const auto ids = sample_pairs(truth.graph, static_cast<std::size_t>(config.pair_count),
                                    config.seed, config.min_separation);
      const auto pairs = pair_positions(truth.graph, ids);
      const ConnectivityReport report = connectivity_metrics(
          predicted, truth, pairs,
          ConnectivityOptions{config.ratio_low, config.ratio_high, config.map_tolerance});
      emit(connectivity_to_json(report), conn_out);
    };
  });

  // heatmap
  std::string heat_diff;
  fs::path heat_out;
  auto* heat = app.add_subcommand("heatmap", "Per-cell changed-pixel sums of a change mask");
  heat->add_option("--diff", heat_diff, "Binary change mask (PGM/PNG)")->required();
  heat->add_option("--out", heat_out, "Output directory")->required();
  heat->callback([&] {
    action = [&] {
      const PipelineConfig config = flags.resolve();
      const BinaryMask mask = load_binary_mask(heat_diff);
      const HeatmapGrid grid = heatmap(mask, config.heatmap_cell);
      GrayImage image = heatmap_to_image(grid);
      GeoTransform geo = mask.geo();
      geo.pixel_size_x *= config.heatmap_cell;
      geo.pixel_size_y *= config.heatmap_cell;
      std::vector<std::uint8_t> pixels(image.values().begin(), image.values().end());
      ensure_dir(heat_out);
      write_text_file(heat_out / "heatmap.csv", heatmap_to_csv(grid));
      write_gray_image(heat_out / "heatmap.pgm",
                       GrayImage(image.width(), image.height(), std::move(pixels), geo));
      ojson summary;
      summary["schema_version"] = kSchemaVersion;
      summary["rows"] = grid.rows;
      summary["cols"] = grid.cols;
      summary["total"] = grid.total();
      summary["max"] = grid.max_sum();
      emit(summary, "");
    };
  });

  // gen-scene
  SceneOptions scene_options;
  std::string layout = "grid";
  fs::path scene_out;
  auto* gen = app.add_subcommand("gen-scene", "Synthetic pre/post scene with known damage");
  gen->add_option("--out", scene_out, "Output directory")->required();
  gen->add_option("--layout", layout, "grid or radial")->check(CLI::IsMember({"grid", "radial"}));
  gen->add_option("--cols", scene_options.grid_cols, "Grid nodes per row");
  gen->add_option("--rows", scene_options.grid_rows, "Grid nodes per column");
  gen->add_option("--spokes", scene_options.radial_spokes, "Radial spokes");
  gen->add_option("--rings", scene_options.radial_rings, "Radial rings");
  gen->add_option("--spacing", scene_options.spacing, "Node spacing, m");
  gen->add_option("--pixel-size", scene_options.pixel_size, "Meters per pixel");
  gen->add_option("--damage", scene_options.damage_fraction, "Fraction of damaged edges");
  gen->add_option("--noise", scene_options.noise, "Per-pixel noise probability");
  gen->add_option("--blur", scene_options.blur_radius, "Probability blur radius, px");
  gen->add_option("--max-shift", scene_options.max_shift, "Maximum post-mask shift, px");
  gen->callback([&] {
    action = [&] {
      const PipelineConfig config = flags.resolve();
      scene_options.layout = layout == "radial" ? SceneLayout::kRadial : SceneLayout::kGrid;
      scene_options.seed = config.seed;
      const SyntheticScene scene = generate_scene(scene_options);
      write_scene(scene, scene_options, scene_out);
      ojson summary;
      summary["schema_version"] = kSchemaVersion;
      summary["damaged_edges"] = scene.damaged_edges;
      summary["expected_offset"] = {{"dx", -scene.shift_dx}, {"dy", -scene.shift_dy}};
      emit(summary, "");
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    action();
    return kOk;
  } catch (const CLI::ValidationError& e) {
    return app.exit(e);
  } catch (const IoError& e) {
    std::cerr << "roadchange: I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "roadchange: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NoSignal& e) {
    std::cerr << "roadchange: registration failed: " << e.what() << "\n";
    return kNoSignal;
  } catch (const EmptyNetwork& e) {
    std::cerr << "roadchange: empty road network: " << e.what() << "\n";
    return kEmptyNetwork;
  } catch (const std::exception& e) {
    std::cerr << "roadchange: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace
}  // namespace roadchange

int main(int argc, char** argv) { return roadchange::run_cli(argc, argv); }
