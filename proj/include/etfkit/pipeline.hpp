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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etfkit/constructions.hpp"
#include "etfkit/verification.hpp"

namespace etfkit {

/// Parameters for one frame construction. Exactly one way of naming the size
/// must be supplied for the chosen construction:
///   paley-*            q, n (= q), or (p, m)
///   conference-*       k or n (= 2^k - 1)
///   conference-etf     k or n (= 2^k)
///   zauner             q, (p, m), or n (= q + 1)
///   drop-one-canonical as the source construction (zauner by default)
struct GenerateRequest {
  std::string construction;
  std::string source = "zauner";
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> q;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> m;
  std::optional<std::uint32_t> k;
  std::size_t drop_index = 0;
  std::optional<std::uint32_t> character_c;
};

/// Builds the requested frame. Invalid parameters throw with a message
/// suitable for the command line.
Frame generate_frame(const GenerateRequest& request);

/// Builds conference_etf(C_{2^k}), drops vector 0, and checks the result for
/// equiangularity and tightness. The comparison of its Gram matrix with the
/// tournament form (J + nI + i sqrt(n) A)/2d built from the core of C_{2^k}
/// is recorded in the report but never affects the verdict.
VerificationReport conjecture_experiment(std::uint32_t k,
                                         double tol = kDefaultFrameTolerance);

inline constexpr std::size_t kMaxCatalogN = 256;

struct CatalogRow {
  std::size_t n = 0;
  std::size_t d = 0;
  Construction construction = Construction::kPaleyUpper;
  double target_overlap_sq = 0.0;
  bool verified = false;
};

/// Constructs and verifies every frame with n <= max_n from the tournament,
/// conference, and quadratic-residue families; rows sorted by
/// (n, d, construction name).
std::vector<CatalogRow> build_catalog(std::size_t max_n);

/// Header "n,d,construction,target_overlap_sq,verified" plus one line per row.
std::string catalog_csv(const std::vector<CatalogRow>& rows);

}  // namespace etfkit
