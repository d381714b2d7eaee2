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

#ifndef ROADCHANGE_JSON_IO_HPP_
#define ROADCHANGE_JSON_IO_HPP_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

namespace roadchange {

// Stamped into every JSON document this library writes.
inline constexpr int kSchemaVersion = 1;

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& contents);

// Throws IoError when the file cannot be read, ParseError on invalid JSON.
nlohmann::json read_json_file(const std::filesystem::path& path);

// Two-space indented dump with a trailing newline.
void write_json_file(const std::filesystem::path& path, const nlohmann::ordered_json& doc);

// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace roadchange

#endif  // ROADCHANGE_JSON_IO_HPP_
