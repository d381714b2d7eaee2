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


#include "roadchange/raster_io.hpp"

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "roadchange/errors.hpp"
#include "roadchange/json_io.hpp"
#include "temp_dir.hpp"

namespace roadchange {
namespace {

using testing::TempDir;

GrayImage gradient(int w, int h, GeoTransform geo = {}) {
  std::vector<std::uint8_t> px(static_cast<std::size_t>(w) * h);
  for (std::size_t i = 0; i < px.size(); ++i) px[i] = static_cast<std::uint8_t>(i * 37 % 256);
  return GrayImage(w, h, std::move(px), geo);
}

TEST(PgmTest, EncodeDecodeRoundTrip) {
  const GrayImage img = gradient(7, 5);
  EXPECT_EQ(decode_pgm(encode_pgm(img)), img);
  EXPECT_EQ(encode_pgm(img).substr(0, 11), "P5\n7 5\n255\n");
}

TEST(PgmTest, HeaderCommentsAndSmallMaxval) {
  const std::string bytes = std::string("P5 # comment\n2 1\n# more\n15\n") + '\x0f' + '\x00';
  const GrayImage img = decode_pgm(bytes);
  ASSERT_EQ(img.width(), 2);
  EXPECT_EQ(img(0, 0), 255);
  EXPECT_EQ(img(1, 0), 0);
}

TEST(PgmTest, MalformedInputsAreParseErrors) {
  EXPECT_THROW(decode_pgm("P2\n1 1\n255\n0"), ParseError);
  EXPECT_THROW(decode_pgm("P5\n4 4\n255\nabc"), ParseError);
  EXPECT_THROW(decode_pgm("P5\nx 4\n255\n"), ParseError);
  EXPECT_THROW(decode_pgm("P5\n1 1\n65535\n00"), ParseError);
}

TEST(RasterFileTest, PgmAndPngRoundTripWithSidecar) {
  TempDir dir;
  const GeoTransform geo{500.0, 900.0, 0.5, 0.5};
  const GrayImage img = gradient(33, 17, geo);
  for (const char* name : {"a.pgm", "b.png"}) {
    write_gray_image(dir / name, img);
    EXPECT_TRUE(std::filesystem::exists(geo_sidecar_path(dir / name)));
    EXPECT_EQ(read_gray_image(dir / name), img) << name;
  }
  const auto sidecar = read_json_file(dir / "a.geo.json");
  EXPECT_EQ(sidecar["schema_version"], kSchemaVersion);
  EXPECT_EQ(sidecar["pixel_size_x"], 0.5);
}

TEST(RasterFileTest, MissingSidecarMeansIdentityTransform) {
  TempDir dir;
  write_text_file(dir / "raw.pgm", encode_pgm(gradient(3, 3)));
  EXPECT_EQ(read_gray_image(dir / "raw.pgm").geo(), GeoTransform{});
}

TEST(RasterFileTest, BadSidecarIsParseError) {
  TempDir dir;
  write_text_file(dir / "m.pgm", encode_pgm(gradient(3, 3)));
  write_text_file(dir / "m.geo.json", "{\"origin_x\": 1}");
  EXPECT_THROW(read_gray_image(dir / "m.pgm"), ParseError);
}

TEST(RasterFileTest, MissingFileIsIoError) {
  TempDir dir;
  EXPECT_THROW(read_gray_image(dir / "absent.pgm"), IoError);
  EXPECT_THROW(load_probability_mask(dir.path()), IoError);
}

TEST(RasterFileTest, ProbabilityBytesMapToUnitInterval) {
  TempDir dir;
  const GrayImage img(3, 1, std::vector<std::uint8_t>{0, 51, 255}, GeoTransform{});
  write_gray_image(dir / "p.pgm", img);
  const ProbabilityMask p = load_probability_mask(dir / "p.pgm");
  EXPECT_FLOAT_EQ(p(0, 0), 0.0f);
  EXPECT_FLOAT_EQ(p(1, 0), 0.2f);
  EXPECT_FLOAT_EQ(p(2, 0), 1.0f);
  save_probability_mask(dir / "q.pgm", p);
  EXPECT_EQ(read_gray_image(dir / "q.pgm"), img);
}

TEST(RasterFileTest, BinaryMasksThresholdAtMidByte) {
  TempDir dir;
  write_gray_image(dir / "b.pgm",
                   GrayImage(4, 1, std::vector<std::uint8_t>{0, 127, 128, 255}, GeoTransform{}));
  const BinaryMask m = load_binary_mask(dir / "b.pgm");
  EXPECT_EQ(m.values()[1], 0);
  EXPECT_EQ(m.values()[2], 1);
  save_binary_mask(dir / "c.pgm", m);
  EXPECT_EQ(read_gray_image(dir / "c.pgm")(3, 0), 255);
}

}  // namespace
}  // namespace roadchange
