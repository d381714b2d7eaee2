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

// Mask files: 8-bit grayscale PGM (P5) or PNG, each paired with a
// `<stem>.geo.json` sidecar holding the geotransform. A missing sidecar reads
// as the identity transform (origin 0,0, one world unit per pixel).

#ifndef ROADCHANGE_RASTER_IO_HPP_
#define ROADCHANGE_RASTER_IO_HPP_

#include <filesystem>
#include <string>

#include "roadchange/raster.hpp"

namespace roadchange {

std::filesystem::path geo_sidecar_path(const std::filesystem::path& image_path);

// Format is chosen by file signature on read and by extension on write
// (".png" writes PNG, anything else PGM). Throws IoError / ParseError.
GrayImage read_gray_image(const std::filesystem::path& path);
void write_gray_image(const std::filesystem::path& path, const GrayImage& image);

// In-memory encodings; used by the file functions and by tests.
std::string encode_geo_sidecar(const GeoTransform& geo);
std::string encode_pgm(const GrayImage& image);
GrayImage decode_pgm(const std::string& bytes);

// Byte b maps to probability b / 255.
ProbabilityMask load_probability_mask(const std::filesystem::path& path);
void save_probability_mask(const std::filesystem::path& path, const ProbabilityMask& mask);

// Set pixels are written as 255; on read any byte > 127 is set.
BinaryMask load_binary_mask(const std::filesystem::path& path);
void save_binary_mask(const std::filesystem::path& path, const BinaryMask& mask);

GrayImage to_gray(const ProbabilityMask& mask);
GrayImage to_gray(const BinaryMask& mask);

}  // namespace roadchange

#endif  // ROADCHANGE_RASTER_IO_HPP_
