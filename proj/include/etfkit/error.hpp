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

#include <stdexcept>
#include <string>
#include <string_view>

namespace etfkit {

// Numeric values are part of the C ABI (see etfkit.h); append only.
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kNotPrime = 2,
  kDegreeZero = 3,
  kOrderTooLarge = 4,
  kDivisionByZero = 5,
  kFieldMismatch = 6,
  kEvenCharacteristic = 7,
  kNotHermitian = 8,
  kNoConvergence = 9,
  kDimensionMismatch = 10,
  kNegativeEigenvalue = 11,
  kWrongResidueClass = 12,
  kBadBorder = 13,
  kCoreIdentityFailed = 14,
  kSpectrumMismatch = 15,
  kRankDeficient = 16,
  kIndexOutOfRange = 17,
  kNotConference = 18,
  kInvalidDimensions = 19,
  kMalformedFile = 20,
  kIoError = 21,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace etfkit
