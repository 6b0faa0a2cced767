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

#include "etfkit/etfkit.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          ("etfkit_capi_" + std::to_string(std::random_device{}()) + "_" + name))
      .string();
}

etf_frame* generate(const char* construction, uint64_t n) {
  etf_generate_params p;
  etf_generate_params_init(&p);
  p.construction = construction;
  p.n = n;
  etf_frame* f = nullptr;
  EXPECT_EQ(etf_frame_generate(&p, &f), ETF_OK) << etf_last_error();
  return f;
}

}  // namespace

TEST(c_api, status_names) {
  EXPECT_STREQ(etf_status_name(ETF_OK), "OK");
  EXPECT_STREQ(etf_status_name(ETF_ERR_NOT_PRIME), "NotPrime");
  EXPECT_STREQ(etf_status_name(ETF_ERR_MALFORMED_FILE), "MalformedFile");
  EXPECT_STREQ(etf_status_name(ETF_ERR_INTERNAL), "Internal");
}

TEST(c_api, field_lifecycle_and_queries) {
  etf_field* f = nullptr;
  ASSERT_EQ(etf_field_create(3, 3, &f), ETF_OK);
  EXPECT_EQ(etf_field_order(f), 27u);
  EXPECT_EQ(etf_field_characteristic(f), 3u);
  EXPECT_EQ(etf_field_degree(f), 3u);
  uint32_t t = 99;
  EXPECT_EQ(etf_field_trace(f, 0, &t), ETF_OK);
  EXPECT_EQ(t, 0u);
  int chi = 0;
  EXPECT_EQ(etf_field_quadratic_character(f, 1, &chi), ETF_OK);
  EXPECT_EQ(chi, 1);
  double re = 0, im = 0;
  EXPECT_EQ(etf_field_gauss_sum(f, 1, &re, &im), ETF_OK);
  EXPECT_NEAR(std::hypot(re, im), std::sqrt(27.0), 1e-10);
  EXPECT_EQ(etf_field_sigma(f, 1, 2, &re, &im), ETF_OK);
  EXPECT_NEAR(std::hypot(re, im), std::sqrt(27.0), 1e-10);

  EXPECT_EQ(etf_field_trace(f, 27, &t), ETF_ERR_INDEX_OUT_OF_RANGE);
  EXPECT_EQ(etf_field_sigma(f, 0, 1, &re, &im), ETF_ERR_INVALID_ARGUMENT);
  etf_field_destroy(f);
  etf_field_destroy(nullptr);
}

TEST(c_api, field_errors_and_last_error) {
  etf_field* f = nullptr;
  EXPECT_EQ(etf_field_create(4, 1, &f), ETF_ERR_NOT_PRIME);
  EXPECT_EQ(f, nullptr);
  EXPECT_NE(std::string(etf_last_error()), "");
  EXPECT_EQ(etf_field_create(3, 0, &f), ETF_ERR_DEGREE_ZERO);
  EXPECT_EQ(etf_field_create(2, 13, &f), ETF_ERR_ORDER_TOO_LARGE);
  EXPECT_EQ(etf_field_create(3, 1, nullptr), ETF_ERR_INVALID_ARGUMENT);

  ASSERT_EQ(etf_field_create(2, 2, &f), ETF_OK);
  EXPECT_STREQ(etf_last_error(), "");
  int chi = 0;
  EXPECT_EQ(etf_field_quadratic_character(f, 1, &chi), ETF_ERR_EVEN_CHARACTERISTIC);
  etf_field_destroy(f);
}

TEST(c_api, generate_inspect_and_verify) {
  etf_frame* f = generate("paley-upper", 7);
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(etf_frame_n(f), 7u);
  EXPECT_EQ(etf_frame_d(f), 4u);
  EXPECT_STREQ(etf_frame_construction(f), "paley-upper");

  double norm = 0.0;
  for (size_t l = 0; l < 4; ++l) {
    double re = 0, im = 0;
    ASSERT_EQ(etf_frame_entry(f, 2, l, &re, &im), ETF_OK);
    norm += re * re + im * im;
  }
  EXPECT_NEAR(norm, 1.0, 1e-12);
  double re = 0, im = 0;
  EXPECT_EQ(etf_frame_entry(f, 7, 0, &re, &im), ETF_ERR_INDEX_OUT_OF_RANGE);

  etf_report* r = nullptr;
  ASSERT_EQ(etf_frame_verify(f, 0.0, &r), ETF_OK);
  EXPECT_EQ(etf_report_passed(r), 1);
  ASSERT_EQ(etf_report_check_count(r), 3u);
  const char* name = nullptr;
  double target = 0, measured = 0, tol = 0;
  int pass = 0;
  for (size_t i = 0; i < 3; ++i) {
    ASSERT_EQ(etf_report_check(r, i, &name, &target, &measured, &tol, &pass), ETF_OK);
    EXPECT_EQ(pass, 1) << name;
    EXPECT_EQ(tol, 1e-9);
  }
  EXPECT_EQ(etf_report_check(r, 3, &name, nullptr, nullptr, nullptr, nullptr),
            ETF_ERR_INDEX_OUT_OF_RANGE);
  EXPECT_EQ(etf_report_comparison(r), nullptr);
  etf_report_destroy(r);

  double w = 0.0;
  EXPECT_EQ(etf_welch_target(7, 4, &w), ETF_OK);
  EXPECT_EQ(w, 0.125);
  EXPECT_EQ(etf_welch_target(3, 4, &w), ETF_ERR_INVALID_DIMENSIONS);
  etf_frame_destroy(f);
}

TEST(c_api, generate_errors) {
  etf_frame* f = nullptr;
  etf_generate_params p;
  etf_generate_params_init(&p);
  EXPECT_EQ(etf_frame_generate(&p, &f), ETF_ERR_INVALID_ARGUMENT);  // no construction
  p.construction = "paley-upper";
  p.n = 15;
  EXPECT_EQ(etf_frame_generate(&p, &f), ETF_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(etf_last_error()).find("15 is not a prime power"), std::string::npos);
  p.n = 13;
  EXPECT_EQ(etf_frame_generate(&p, &f), ETF_ERR_WRONG_RESIDUE_CLASS);
  EXPECT_EQ(f, nullptr);
  EXPECT_EQ(etf_frame_generate(nullptr, &f), ETF_ERR_INVALID_ARGUMENT);
}

TEST(c_api, json_write_read_parse) {
  etf_frame* f = generate("conference-upper", 15);
  ASSERT_NE(f, nullptr);
  char* json = nullptr;
  ASSERT_EQ(etf_frame_to_json(f, &json), ETF_OK);

  etf_frame* parsed = nullptr;
  ASSERT_EQ(etf_frame_parse(json, &parsed), ETF_OK);
  char* again = nullptr;
  ASSERT_EQ(etf_frame_to_json(parsed, &again), ETF_OK);
  EXPECT_STREQ(json, again);

  const auto path = temp_path("c15.json");
  ASSERT_EQ(etf_frame_write(f, path.c_str()), ETF_OK);
  etf_frame* read = nullptr;
  ASSERT_EQ(etf_frame_read(path.c_str(), &read), ETF_OK);
  EXPECT_EQ(etf_frame_d(read), 8u);
  std::filesystem::remove(path);

  EXPECT_EQ(etf_frame_parse("{\"format_version\": 1", &parsed), ETF_ERR_MALFORMED_FILE);
  EXPECT_EQ(etf_frame_read("/nonexistent/dir/x.json", &parsed), ETF_ERR_IO);
  EXPECT_EQ(etf_frame_write(f, "/nonexistent/dir/x.json"), ETF_ERR_IO);

  etf_string_free(json);
  etf_string_free(again);
  etf_frame_destroy(read);
  etf_frame_destroy(parsed);
  etf_frame_destroy(f);
}

TEST(c_api, drop_one) {
  etf_generate_params p;
  etf_generate_params_init(&p);
  p.construction = "zauner";
  p.q = 11;
  etf_frame* z = nullptr;
  ASSERT_EQ(etf_frame_generate(&p, &z), ETF_OK);
  etf_frame* d = nullptr;
  ASSERT_EQ(etf_frame_drop_one(z, 0, &d), ETF_OK);
  EXPECT_EQ(etf_frame_n(d), 11u);
  EXPECT_STREQ(etf_frame_construction(d), "drop-one-canonical");
  etf_report* r = nullptr;
  ASSERT_EQ(etf_frame_verify(d, 0.0, &r), ETF_OK);
  EXPECT_EQ(etf_report_passed(r), 1);
  etf_report_destroy(r);
  etf_frame* bad = nullptr;
  EXPECT_EQ(etf_frame_drop_one(z, 12, &bad), ETF_ERR_INDEX_OUT_OF_RANGE);
  etf_frame_destroy(d);
  etf_frame_destroy(z);
}

TEST(c_api, experiment) {
  etf_report* r = nullptr;
  ASSERT_EQ(etf_experiment_run(3, 0.0, &r), ETF_OK);
  EXPECT_EQ(etf_report_passed(r), 1);
  ASSERT_NE(etf_report_comparison(r), nullptr);
  const std::string verdict = etf_report_comparison(r);
  EXPECT_TRUE(verdict == "Equal" || verdict == "ConjugateEqual" || verdict == "Different");
  char* json = nullptr;
  ASSERT_EQ(etf_report_to_json(r, &json), ETF_OK);
  EXPECT_NE(std::string(json).find("\"comparison\""), std::string::npos);
  etf_string_free(json);
  etf_report_destroy(r);

  EXPECT_EQ(etf_experiment_run(1, 0.0, &r), ETF_ERR_INVALID_ARGUMENT);
}

TEST(c_api, catalog) {
  const auto path = temp_path("catalog.csv");
  size_t rows = 0, failed = 1;
  ASSERT_EQ(etf_catalog_write_csv(15, path.c_str(), &rows, &failed), ETF_OK);
  EXPECT_GT(rows, 0u);
  EXPECT_EQ(failed, 0u);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "n,d,construction,target_overlap_sq,verified");
  std::filesystem::remove(path);

  EXPECT_EQ(etf_catalog_write_csv(15, "/nonexistent/dir/c.csv", &rows, &failed), ETF_ERR_IO);
  EXPECT_EQ(etf_catalog_write_csv(100000, path.c_str(), &rows, &failed),
            ETF_ERR_INVALID_ARGUMENT);
  EXPECT_FALSE(std::filesystem::exists(path));
}

TEST(c_api, null_handles_are_safe) {
  EXPECT_EQ(etf_frame_n(nullptr), 0u);
  EXPECT_EQ(etf_frame_construction(nullptr), nullptr);
  EXPECT_EQ(etf_report_passed(nullptr), 0);
  EXPECT_EQ(etf_report_check_count(nullptr), 0u);
  EXPECT_EQ(etf_field_order(nullptr), 0u);
  etf_report* r = nullptr;
  EXPECT_EQ(etf_frame_verify(nullptr, 0.0, &r), ETF_ERR_INVALID_ARGUMENT);
  etf_frame_destroy(nullptr);
  etf_report_destroy(nullptr);
  etf_string_free(nullptr);
}
