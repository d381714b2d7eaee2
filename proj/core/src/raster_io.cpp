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

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <vector>

#include <nlohmann/json.hpp>

#include "roadchange/errors.hpp"
#include "roadchange/json_io.hpp"

namespace roadchange {
namespace {

constexpr unsigned char kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

bool is_png(const std::string& bytes) {
  return bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSignature, 8) == 0;
}

GrayImage decode_png(const std::string& bytes) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw ParseError(std::string("cannot decode PNG: ") + image.message);
  }
  image.format = PNG_FORMAT_GRAY;
  std::vector<std::uint8_t> pixels(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, pixels.data(), 0, nullptr)) {
    png_image_free(&image);
    throw ParseError(std::string("cannot decode PNG: ") + image.message);
  }
  return GrayImage(static_cast<int>(image.width), static_cast<int>(image.height),
                   std::move(pixels), GeoTransform{});
}

std::string encode_png(const GrayImage& gray) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(gray.width());
  image.height = static_cast<png_uint_32>(gray.height());
  image.format = PNG_FORMAT_GRAY;
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&image, nullptr, &size, 0, gray.values().data(), 0, nullptr)) {
    throw IoError(std::string("cannot encode PNG: ") + image.message);
  }
  std::string out(size, '\0');
  if (!png_image_write_to_memory(&image, out.data(), &size, 0, gray.values().data(), 0,
                                 nullptr)) {
    throw IoError(std::string("cannot encode PNG: ") + image.message);
  }
  out.resize(size);
  return out;
}

GeoTransform read_sidecar(const std::filesystem::path& image_path) {
  const auto sidecar = geo_sidecar_path(image_path);
  if (!std::filesystem::exists(sidecar)) return GeoTransform{};
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(sidecar));
    GeoTransform geo{doc.at("origin_x").get<double>(), doc.at("origin_y").get<double>(),
                     doc.at("pixel_size_x").get<double>(), doc.at("pixel_size_y").get<double>()};
    geo.validate();
    return geo;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad geotransform sidecar " + sidecar.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError("bad geotransform sidecar " + sidecar.string() + ": " + e.what());
  }
}

void write_sidecar(const std::filesystem::path& image_path, const GeoTransform& geo) {
  write_text_file(geo_sidecar_path(image_path), encode_geo_sidecar(geo));
}

}  // namespace

std::filesystem::path geo_sidecar_path(const std::filesystem::path& image_path) {
  std::filesystem::path sidecar = image_path;
  sidecar.replace_extension(".geo.json");
  return sidecar;
}

std::string encode_geo_sidecar(const GeoTransform& geo) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["origin_x"] = geo.origin_x;
  doc["origin_y"] = geo.origin_y;
  doc["pixel_size_x"] = geo.pixel_size_x;
  doc["pixel_size_y"] = geo.pixel_size_y;
  return doc.dump(2) + "\n";
}

std::string encode_pgm(const GrayImage& image) {
  std::string out = "P5\n" + std::to_string(image.width()) + " " +
                    std::to_string(image.height()) + "\n255\n";
  out.append(reinterpret_cast<const char*>(image.values().data()), image.size());
  return out;
}

GrayImage decode_pgm(const std::string& bytes) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        ++pos;
      } else {
        break;
      }
    }
  };
  auto read_int = [&]() -> long {
    skip_space();
    const std::size_t start = pos;
    while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) ++pos;
    if (pos == start) throw ParseError("malformed PGM header");
    return std::stol(bytes.substr(start, pos - start));
  };

  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw ParseError("not a binary PGM (P5) image");
  }
  pos = 2;
  const long width = read_int();
  const long height = read_int();
  const long maxval = read_int();
  if (width < 0 || height < 0 || width > (1 << 20) || height > (1 << 20)) {
    throw ParseError("PGM dimensions out of range");
  }
  if (maxval < 1 || maxval > 255) throw ParseError("only 8-bit PGM images are supported");
  if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
    throw ParseError("malformed PGM header");
  }
  ++pos;
  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  if (bytes.size() - pos < count) throw ParseError("truncated PGM pixel data");
  std::vector<std::uint8_t> pixels(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto raw = static_cast<std::uint8_t>(bytes[pos + i]);
    pixels[i] = maxval == 255
                    ? raw
                    : static_cast<std::uint8_t>(std::lround(255.0 * std::min<long>(raw, maxval) /
                                                            static_cast<double>(maxval)));
  }
  return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels),
                   GeoTransform{});
}

GrayImage read_gray_image(const std::filesystem::path& path) {
  const std::string bytes = read_text_file(path);
  GrayImage decoded = is_png(bytes) ? decode_png(bytes) : decode_pgm(bytes);
  std::vector<std::uint8_t> pixels(decoded.values().begin(), decoded.values().end());
  return GrayImage(decoded.width(), decoded.height(), std::move(pixels), read_sidecar(path));
}

void write_gray_image(const std::filesystem::path& path, const GrayImage& image) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  write_text_file(path, ext == ".png" ? encode_png(image) : encode_pgm(image));
  write_sidecar(path, image.geo());
}

GrayImage to_gray(const ProbabilityMask& mask) {
  GrayImage out(mask.width(), mask.height(), mask.geo());
  auto src = mask.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i] = static_cast<std::uint8_t>(std::lround(255.0 * src[i]));
  }
  return out;
}

GrayImage to_gray(const BinaryMask& mask) {
  GrayImage out(mask.width(), mask.height(), mask.geo());
  auto src = mask.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] ? 255 : 0;
  return out;
}

ProbabilityMask load_probability_mask(const std::filesystem::path& path) {
  const GrayImage gray = read_gray_image(path);
  std::vector<float> values(gray.size());
  auto src = gray.values();
  for (std::size_t i = 0; i < src.size(); ++i) values[i] = static_cast<float>(src[i]) / 255.0f;
  return ProbabilityMask(gray.width(), gray.height(), std::move(values), gray.geo());
}

void save_probability_mask(const std::filesystem::path& path, const ProbabilityMask& mask) {
  write_gray_image(path, to_gray(mask));
}

BinaryMask load_binary_mask(const std::filesystem::path& path) {
  const GrayImage gray = read_gray_image(path);
  std::vector<std::uint8_t> bits(gray.size());
  auto src = gray.values();
  for (std::size_t i = 0; i < src.size(); ++i) bits[i] = src[i] > 127 ? 1 : 0;
  return BinaryMask(gray.width(), gray.height(), std::move(bits), gray.geo());
}

void save_binary_mask(const std::filesystem::path& path, const BinaryMask& mask) {
  write_gray_image(path, to_gray(mask));
}

}  // namespace roadchange
