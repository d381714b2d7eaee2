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


// Drives the roadchange executable end to end.

#include <sys/wait.h>

#include <cstdlib>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "roadchange/json_io.hpp"
#include "temp_dir.hpp"

namespace roadchange {
namespace {

using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

class CliTest : public ::testing::Test {
 protected:
  CliResult run(const std::string& args) const {
    const auto out = dir_ / "stdout.txt";
    const std::string cmd = std::string(ROADCHANGE_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_text_file(out);
    return r;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void make_scene(const std::string& name) const {
    ASSERT_EQ(run("gen-scene --out " + path(name) + " --cols 5 --rows 5 --damage 0.1 --seed 7")
                  .exit_code,
              0);
  }

  testing::TempDir dir_;
};

TEST_F(CliTest, EvalSegmentsReplaysCounts) {
  const CliResult r = run("eval-segments --counts 6453,395,43");
  ASSERT_EQ(r.exit_code, 0);
  const json doc = json::parse(r.out);
  EXPECT_NEAR(doc["precision"].get<double>(), 0.94, 0.005);
  EXPECT_NEAR(doc["recall"].get<double>(), 0.99, 0.005);
  EXPECT_NEAR(doc["f_score"].get<double>(), 0.96, 0.01);
  EXPECT_EQ(doc["tp"], 6453);
  EXPECT_EQ(run("eval-segments --counts 1,2").exit_code, 3);
}

TEST_F(CliTest, RunWritesArtifactsAndMissingInputIsIoError) {
  make_scene("scene");
  const std::string s = path("scene");
  const CliResult ok = run("run --pre " + s + "/pre.pgm --post " + s + "/post.pgm --osm " + s +
                           "/osm.geojson --out " + path("out"));
  ASSERT_EQ(ok.exit_code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir_ / "out" / "costed_graph.geojson"));

  const CliResult missing = run("run --pre " + s + "/pre.pgm --post " + s + "/post.pgm --osm " +
                                s + "/none.geojson --out " + path("out2"));
  EXPECT_EQ(missing.exit_code, 2);
  EXPECT_FALSE(std::filesystem::exists(dir_ / "out2"));
}

TEST_F(CliTest, FlagOverridesConfigFileOverridesDefault) {
  make_scene("scene");
  const std::string s = path("scene");
  write_text_file(dir_ / "c.json", R"({"alpha": 5, "slice_length": 15})");
  const std::string base = "run --pre " + s + "/pre.pgm --post " + s + "/post.pgm --osm " + s +
                           "/osm.geojson --config " + path("c.json");
  ASSERT_EQ(run(base + " --out " + path("a")).exit_code, 0);
  ASSERT_EQ(run(base + " --alpha inf --out " + path("b")).exit_code, 0);
  const json a = read_json_file(dir_ / "a" / "manifest.json");
  const json b = read_json_file(dir_ / "b" / "manifest.json");
  EXPECT_EQ(a["config"]["alpha"], 5.0);
  EXPECT_EQ(a["config"]["slice_length"], 15.0);
  EXPECT_EQ(a["config"]["threshold"], 0.5);
  EXPECT_EQ(b["config"]["alpha"], "inf");
  EXPECT_EQ(b["config"]["slice_length"], 15.0);
}

TEST_F(CliTest, ParseAndNetworkErrors) {
  write_text_file(dir_ / "points.geojson",
                  R"({"type": "FeatureCollection", "features": [{"type": "Feature",
                     "properties": {}, "geometry": {"type": "Point", "coordinates": [0, 0]}}]})");
  write_text_file(dir_ / "feature.geojson", R"({"type": "Feature"})");
  write_text_file(dir_ / "broken.geojson", "{");
  EXPECT_EQ(run("eval-connectivity --predicted " + path("points.geojson") + " --truth " +
                path("points.geojson"))
                .exit_code,
            5);
  EXPECT_EQ(run("eval-segments --predicted " + path("feature.geojson") + " --truth " +
                path("feature.geojson"))
                .exit_code,
            3);
  EXPECT_EQ(run("eval-segments --predicted " + path("broken.geojson") + " --truth " +
                path("broken.geojson"))
                .exit_code,
            3);
  write_text_file(dir_ / "c.json", R"({"unknown_knob": 1})");
  EXPECT_EQ(run("eval-segments --counts 1,1,1 --config " + path("c.json")).exit_code, 3);
}

TEST_F(CliTest, BlankMaskIsNoSignal) {
  make_scene("scene");
  const std::string s = path("scene");
  // Differencing a mask with itself yields a blank change mask.
  ASSERT_EQ(run("diff --pre " + s + "/pre.pgm --post " + s + "/pre.pgm --out " + path("d"))
                .exit_code,
            0);
  ASSERT_EQ(run("heatmap --diff " + path("d") + "/diff_mask.pgm --out " + path("h")).exit_code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir_ / "h" / "heatmap.csv"));
  const CliResult blank = run("diff --pre " + s + "/pre.pgm --post " + path("d") +
                              "/diff_mask.pgm --out " + path("d2"));
  EXPECT_EQ(blank.exit_code, 4);
}

TEST_F(CliTest, EvaluationOnIdenticalGraphs) {
  make_scene("scene");
  const std::string t = path("scene") + "/truth_pre.geojson";
  const json seg = json::parse(run("eval-segments --predicted " + t + " --truth " + t).out);
  EXPECT_EQ(seg["f_score"], 1.0);
  const CliResult conn =
      run("eval-connectivity --pair-count 200 --predicted " + t + " --truth " + t);
  ASSERT_EQ(conn.exit_code, 0);
  EXPECT_EQ(json::parse(conn.out)["correct"], 100.0);
}

TEST_F(CliTest, StageCommandsChain) {
  make_scene("scene");
  const std::string s = path("scene");
  ASSERT_EQ(run("diff --pre " + s + "/pre.pgm --post " + s + "/post.pgm --out " + path("d"))
                .exit_code,
            0);
  ASSERT_EQ(run("extract --mask " + path("d") + "/diff_mask.pgm --out " + path("g.geojson"))
                .exit_code,
            0);
  ASSERT_EQ(run("fuse --diff-graph " + path("g.geojson") + " --osm " + s +
                "/osm.geojson --out " + path("f"))
                .exit_code,
            0);
  const CliResult route = run("route --graph " + path("f") +
                              "/costed_graph.geojson --from 20,180 --to 180,20");
  ASSERT_EQ(route.exit_code, 0);
  const json doc = json::parse(route.out);
  EXPECT_TRUE(doc.contains("status"));
  EXPECT_EQ(run("route --graph " + path("f") + "/costed_graph.geojson --from x --to 1,1")
                .exit_code,
            3);
}

TEST_F(CliTest, UnknownSubcommandFails) {
  EXPECT_NE(run("frobnicate").exit_code, 0);
  EXPECT_NE(run("").exit_code, 0);
}

}  // namespace
}  // namespace roadchange
