// Copyright 2026 The Etfkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "etfkit/constructions.hpp"
#include "etfkit/verification.hpp"

namespace etfkit {

inline constexpr int kFrameFormatVersion = 1;

// Frame file layout (format_version 1):
//
//   {
//     "format_version": 1,
//     "n": 7,
//     "d": 4,
//     "construction": "paley-upper",
//     "field": {"p": 7, "m": 1, "modulus": [0, 1]},
//     "parameters": {"dropped_index": 0, "character_c": 1, "conference_k": 3},
//     "vectors": [
//       [[re, im], ...],   <- one array of d pairs per vector, n arrays
//       ...
//     ]
//   }
//
// "field" and "parameters" are optional, as is every key inside
// "parameters". Doubles are written with 17 significant digits and negative
// zero is written as 0, so write(read(write(f))) is byte-identical.

std::string frame_to_json(const Frame& frame);
/// Throws MalformedFile on syntax or schema errors.
Frame frame_from_json(std::string_view text);

/// Throws IoError.
void write_frame_file(const Frame& frame, const std::string& path);
/// Throws IoError or MalformedFile.
Frame read_frame_file(const std::string& path);

std::string report_to_json(const VerificationReport& report);

/// Shortest form used throughout the on-disk formats: printf("%.17g").
std::string format_double(double x);

}  // namespace etfkit
