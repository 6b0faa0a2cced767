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

#include "etfkit/pipeline.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "etfkit/error.hpp"

using etfkit::Construction;
using etfkit::ErrorCode;
using etfkit::GenerateRequest;

namespace {

struct Failure {
  ErrorCode code;
  std::string message;
};

Failure failure_of(const GenerateRequest& r) {
  try {
    etfkit::generate_frame(r);
  } catch (const etfkit::Error& e) {
    return {e.code(), e.what()};
  }
  ADD_FAILURE() << "expected generate_frame to throw";
  return {ErrorCode::kInvalidArgument, ""};
}

GenerateRequest request(std::string construction) {
  GenerateRequest r;
  r.construction = std::move(construction);
  return r;
}

bool has_row(const std::vector<etfkit::CatalogRow>& rows, std::size_t n, std::size_t d,
             Construction c) {
  return std::any_of(rows.begin(), rows.end(), [&](const auto& r) {
    return r.n == n && r.d == d && r.construction == c;
  });
}

}  // namespace

TEST(generate, paley_by_n_q_and_pm) {
  auto r = request("paley-upper");
  r.n = 7;
  auto f = etfkit::generate_frame(r);
  EXPECT_EQ(f.n, 7u);
  EXPECT_EQ(f.d, 4u);
  EXPECT_EQ(f.provenance.construction, Construction::kPaleyUpper);

  r = request("paley-lower");
  r.q = 27;
  f = etfkit::generate_frame(r);
  EXPECT_EQ(f.d, 13u);
  ASSERT_TRUE(f.provenance.field.has_value());
  EXPECT_EQ(f.provenance.field->m, 3u);

  r = request("paley-upper");
  r.p = 3;
  r.m = 3;
  EXPECT_EQ(etfkit::generate_frame(r).d, 14u);
}

TEST(generate, paley_rejections) {
  auto r = request("paley-upper");
  r.n = 15;
  auto f = failure_of(r);
  EXPECT_EQ(f.code, ErrorCode::kInvalidArgument);
  EXPECT_NE(f.message.find("15 is not a prime power"), std::string::npos);
  EXPECT_NE(f.message.find("use --construction conference"), std::string::npos);

  r.n = 21;
  f = failure_of(r);
  EXPECT_NE(f.message.find("21 is not a prime power"), std::string::npos);
  EXPECT_EQ(f.message.find("conference"), std::string::npos);

  r.n = 5;
  EXPECT_EQ(failure_of(r).code, ErrorCode::kWrongResidueClass);

  r = request("paley-upper");
  EXPECT_EQ(failure_of(r).code, ErrorCode::kInvalidArgument);  // no size
  r.n = 7;
  r.q = 7;
  EXPECT_EQ(failure_of(r).code, ErrorCode::kInvalidArgument);  // two sizes
  r = request("paley-upper");
  r.p = 7;
  EXPECT_EQ(failure_of(r).code, ErrorCode::kInvalidArgument);  // p without m
  r.m = 1;
  r.k = 3;
  EXPECT_EQ(failure_of(r).code, ErrorCode::kInvalidArgument);
}

TEST(generate, conference_routes) {
  auto r = request("conference-upper");
  r.n = 15;
  auto f = etfkit::generate_frame(r);
  EXPECT_EQ(f.n, 15u);
  EXPECT_EQ(f.d, 8u);

  r = request("conference-lower");
  r.k = 4;
  f = etfkit::generate_frame(r);
  EXPECT_EQ(f.n, 15u);
  EXPECT_EQ(f.d, 7u);

  r = request("conference-etf");
  r.n = 16;
  f = etfkit::generate_frame(r);
  EXPECT_EQ(f.d, 8u);
  EXPECT_EQ(f.provenance.conference_k, 4u);

  r = request("conference-upper");
  r.n = 14;
  EXPECT_EQ(failure_of(r).code, ErrorCode::kInvalidArgument);
  r.n = 1;
  EXPECT_EQ(failure_of(r).code, ErrorCode::kInvalidArgument);
  r = request("conference-upper");
  r.k = 13;
  EXPECT_EQ(failure_of(r).code, ErrorCode::kOrderTooLarge);
  r = request("conference-etf");
  r.n = 2;
  EXPECT_EQ(failure_of(r).code, ErrorCode::kInvalidArgument);
}

TEST(generate, zauner_and_drop_one) {
  auto r = request("zauner");
  r.n = 6;
  auto f = etfkit::generate_frame(r);
  EXPECT_EQ(f.n, 6u);
  EXPECT_EQ(f.d, 3u);

  r = request("zauner");
  r.q = 9;
  r.character_c = 4;
  f = etfkit::generate_frame(r);
  EXPECT_EQ(f.n, 10u);
  EXPECT_EQ(f.provenance.character_c, 4u);

  r = request("zauner");
  r.q = 8;
  EXPECT_EQ(failure_of(r).code, ErrorCode::kInvalidArgument);

  r = request("drop-one-canonical");
  r.q = 7;
  f = etfkit::generate_frame(r);
  EXPECT_EQ(f.n, 7u);
  EXPECT_EQ(f.d, 4u);
  EXPECT_EQ(f.provenance.construction, Construction::kDropOneCanonical);
  EXPECT_EQ(f.provenance.dropped_index, 0u);

  r = request("drop-one-canonical");
  r.source = "conference-etf";
  r.k = 3;
  f = etfkit::generate_frame(r);
  EXPECT_EQ(f.n, 7u);
  EXPECT_EQ(f.d, 4u);

  r.drop_index = 8;
  EXPECT_EQ(failure_of(r).code, ErrorCode::kIndexOutOfRange);
  r.source = "paley";
  EXPECT_EQ(failure_of(r).code, ErrorCode::kInvalidArgument);
  EXPECT_EQ(failure_of(request("hadamard")).code, ErrorCode::kInvalidArgument);
}

TEST(experiment, small_k) {
  for (std::uint32_t k : {2u, 3u, 4u}) {
    const auto report = etfkit::conjecture_experiment(k);
    EXPECT_TRUE(report.verdict()) << k;
    ASSERT_TRUE(report.comparison.has_value());
    const std::size_t n = (std::size_t{1} << k) - 1;
    const auto eq = std::find_if(report.checks.begin(), report.checks.end(),
                                 [](const auto& c) { return c.name == "equiangular"; });
    ASSERT_NE(eq, report.checks.end());
    EXPECT_DOUBLE_EQ(eq->target, etfkit::welch_target(n, (n + 1) / 2));
    EXPECT_LE(eq->measured, 1e-9);
  }
  EXPECT_DOUBLE_EQ(etfkit::welch_target(3, 2), 0.25);
  EXPECT_THROW(etfkit::conjecture_experiment(1), etfkit::Error);
  EXPECT_THROW(etfkit::conjecture_experiment(0), etfkit::Error);
}

TEST(catalog, max_n_7) {
  const auto rows = etfkit::build_catalog(7);
  for (auto [n, d, c] : std::vector<std::tuple<int, int, Construction>>{
           {3, 2, Construction::kPaleyUpper},
           {3, 1, Construction::kPaleyLower},
           {3, 2, Construction::kConferenceUpper},
           {3, 1, Construction::kConferenceLower},
           {7, 4, Construction::kPaleyUpper},
           {7, 3, Construction::kPaleyLower},
           {7, 4, Construction::kConferenceUpper},
           {7, 3, Construction::kConferenceLower},
           {4, 2, Construction::kZauner},
           {6, 3, Construction::kZauner},
           {8, 4, Construction::kZauner},
           {4, 2, Construction::kConferenceEtf}}) {
    EXPECT_TRUE(has_row(rows, n, d, c)) << n << "," << d << " " << etfkit::construction_name(c);
  }
  for (const auto& r : rows) EXPECT_TRUE(r.verified) << r.n << "," << r.d;
  EXPECT_EQ(rows.size(), 12u);
}

TEST(catalog, max_n_15_and_27) {
  const auto r15 = etfkit::build_catalog(15);
  EXPECT_TRUE(has_row(r15, 15, 8, Construction::kConferenceUpper));
  EXPECT_TRUE(has_row(r15, 15, 7, Construction::kConferenceLower));
  EXPECT_FALSE(has_row(r15, 15, 8, Construction::kPaleyUpper));

  const auto r27 = etfkit::build_catalog(27);
  EXPECT_TRUE(has_row(r27, 27, 14, Construction::kPaleyUpper));
  EXPECT_TRUE(has_row(r27, 27, 13, Construction::kPaleyLower));
  EXPECT_TRUE(has_row(r27, 28, 14, Construction::kZauner));
  for (const auto& r : r27) EXPECT_TRUE(r.verified) << r.n << "," << r.d;
}

TEST(catalog, sorted_and_bounded) {
  const auto rows = etfkit::build_catalog(64);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& a = rows[i - 1];
    const auto& b = rows[i];
    EXPECT_LT(std::make_tuple(a.n, a.d, etfkit::construction_name(a.construction)),
              std::make_tuple(b.n, b.d, etfkit::construction_name(b.construction)));
  }
  EXPECT_THROW(etfkit::build_catalog(etfkit::kMaxCatalogN + 1), etfkit::Error);
  EXPECT_TRUE(etfkit::build_catalog(2).empty());
}

TEST(catalog, csv_format) {
  const auto csv = etfkit::catalog_csv(etfkit::build_catalog(3));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,d,construction,target_overlap_sq,verified");
  std::getline(in, line);
  EXPECT_EQ(line, "3,1,conference-lower,1,true");
  std::set<std::string> seen;
  while (std::getline(in, line)) seen.insert(line);
  EXPECT_TRUE(seen.count("3,2,paley-upper,0.25,true"));
  EXPECT_TRUE(seen.count("4,2,zauner,0.33333333333333331,true"));
}
