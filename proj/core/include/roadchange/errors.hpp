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

#ifndef ROADCHANGE_ERRORS_HPP_
#define ROADCHANGE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace roadchange {

// Failure reading or writing a file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that exists but cannot be interpreted (bad PGM header, bad JSON, ...).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A GeoJSON document that is not a usable FeatureCollection.
class MalformedDocument : public ParseError {
 public:
  using ParseError::ParseError;
};

// Two rasters that must share dimensions do not.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Registration was asked to align a mask that has no set pixels.
class NoSignal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sub-segment sets sliced with different lengths cannot be compared.
class SliceLengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A road document yielded no usable line features.
class EmptyNetwork : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownNode : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Sampling could not satisfy the request within its retry budget.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace roadchange

#endif  // ROADCHANGE_ERRORS_HPP_
