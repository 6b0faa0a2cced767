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

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <string>

#include "etfkit/characters.hpp"
#include "etfkit/error.hpp"
#include "etfkit/finite_field.hpp"
#include "etfkit/frame_io.hpp"
#include "etfkit/pipeline.hpp"
#include "etfkit/verification.hpp"

struct etf_field {
  etfkit::FiniteField field;
};

struct etf_frame {
  etfkit::Frame frame;
  std::string construction;
};

struct etf_report {
  etfkit::VerificationReport report;
  std::string comparison;
};

namespace {

thread_local std::string last_error;

etf_status fail(etf_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
etf_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return ETF_OK;
  } catch (const etfkit::Error& e) {
    return fail(static_cast<etf_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ETF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ETF_ERR_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

etf_frame* wrap(etfkit::Frame frame) {
  std::string name(etfkit::construction_name(frame.provenance.construction));
  return new etf_frame{std::move(frame), std::move(name)};
}

#define ETF_REQUIRE(cond, what)                              \
  do {                                                       \
    if (!(cond)) return fail(ETF_ERR_INVALID_ARGUMENT, what); \
  } while (0)

}  // namespace

extern "C" {

const char* etf_status_name(etf_status status) {
  if (status == ETF_OK) return "OK";
  if (status == ETF_ERR_INTERNAL) return "Internal";
  static thread_local std::string name;
  name = std::string(etfkit::error_code_name(static_cast<etfkit::ErrorCode>(status)));
  return name.c_str();
}

const char* etf_last_error(void) { return last_error.c_str(); }

void etf_string_free(char* s) { std::free(s); }

etf_status etf_field_create(uint32_t p, uint32_t m, etf_field** out) {
  ETF_REQUIRE(out != nullptr, "out is null");
  return guarded([&] { *out = new etf_field{etfkit::FiniteField::make(p, m)}; });
}

void etf_field_destroy(etf_field* field) { delete field; }

uint32_t etf_field_order(const etf_field* field) {
  return field ? field->field.order() : 0;
}

uint32_t etf_field_characteristic(const etf_field* field) {
  return field ? field->field.characteristic() : 0;
}

uint32_t etf_field_degree(const etf_field* field) {
  return field ? field->field.degree() : 0;
}

etf_status etf_field_trace(const etf_field* field, uint32_t a, uint32_t* out) {
  ETF_REQUIRE(field != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = field->field.trace(field->field.element(a)); });
}

etf_status etf_field_quadratic_character(const etf_field* field, uint32_t a, int* out) {
  ETF_REQUIRE(field != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = etfkit::quadratic_character(field->field, field->field.element(a));
  });
}

etf_status etf_field_sigma(const etf_field* field, uint32_t c, uint32_t a, double* re,
                           double* im) {
  ETF_REQUIRE(field != nullptr && re != nullptr && im != nullptr, "null argument");
  return guarded([&] {
    const auto& f = field->field;
    const auto s = etfkit::sigma(f, f.element(c), f.element(a));
    *re = s.real();
    *im = s.imag();
  });
}

etf_status etf_field_gauss_sum(const etf_field* field, uint32_t c, double* re,
                               double* im) {
  ETF_REQUIRE(field != nullptr && re != nullptr && im != nullptr, "null argument");
  return guarded([&] {
    const auto g = etfkit::gauss_sum(field->field, field->field.element(c));
    *re = g.real();
    *im = g.imag();
  });
}

void etf_generate_params_init(etf_generate_params* params) {
  if (params != nullptr) *params = etf_generate_params{};
}

etf_status etf_frame_generate(const etf_generate_params* params, etf_frame** out) {
  ETF_REQUIRE(params != nullptr && out != nullptr, "null argument");
  ETF_REQUIRE(params->construction != nullptr, "construction is required");
  return guarded([&] {
    etfkit::GenerateRequest r;
    r.construction = params->construction;
    if (params->source != nullptr) r.source = params->source;
    if (params->n != 0) r.n = params->n;
    if (params->q != 0) r.q = params->q;
    if (params->p != 0) r.p = params->p;
    if (params->m != 0) r.m = params->m;
    if (params->k != 0) r.k = params->k;
    if (params->character_c != 0) r.character_c = params->character_c;
    r.drop_index = static_cast<std::size_t>(params->drop_index);
    *out = wrap(etfkit::generate_frame(r));
  });
}

etf_status etf_frame_read(const char* path, etf_frame** out) {
  ETF_REQUIRE(path != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = wrap(etfkit::read_frame_file(path)); });
}

etf_status etf_frame_parse(const char* json, etf_frame** out) {
  ETF_REQUIRE(json != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = wrap(etfkit::frame_from_json(json)); });
}

etf_status etf_frame_write(const etf_frame* frame, const char* path) {
  ETF_REQUIRE(frame != nullptr && path != nullptr, "null argument");
  return guarded([&] { etfkit::write_frame_file(frame->frame, path); });
}

etf_status etf_frame_to_json(const etf_frame* frame, char** out) {
  ETF_REQUIRE(frame != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = duplicate(etfkit::frame_to_json(frame->frame)); });
}

etf_status etf_frame_drop_one(const etf_frame* frame, size_t index, etf_frame** out) {
  ETF_REQUIRE(frame != nullptr && out != nullptr, "null argument");
  return guarded(
      [&] { *out = wrap(etfkit::drop_one_canonical(frame->frame, index)); });
}

void etf_frame_destroy(etf_frame* frame) { delete frame; }

size_t etf_frame_n(const etf_frame* frame) { return frame ? frame->frame.n : 0; }

size_t etf_frame_d(const etf_frame* frame) { return frame ? frame->frame.d : 0; }

const char* etf_frame_construction(const etf_frame* frame) {
  return frame ? frame->construction.c_str() : nullptr;
}

etf_status etf_frame_entry(const etf_frame* frame, size_t vector, size_t component,
                           double* re, double* im) {
  ETF_REQUIRE(frame != nullptr && re != nullptr && im != nullptr, "null argument");
  if (vector >= frame->frame.n || component >= frame->frame.d) {
    return fail(ETF_ERR_INDEX_OUT_OF_RANGE, "frame entry index out of range");
  }
  const auto z = frame->frame.synthesis(component, vector);
  *re = z.real();
  *im = z.imag();
  return ETF_OK;
}

etf_status etf_welch_target(size_t n, size_t d, double* out) {
  ETF_REQUIRE(out != nullptr, "out is null");
  return guarded([&] { *out = etfkit::welch_target(n, d); });
}

etf_status etf_frame_verify(const etf_frame* frame, double tol, etf_report** out) {
  ETF_REQUIRE(frame != nullptr && out != nullptr, "null argument");
  const double t = tol > 0.0 ? tol : etfkit::kDefaultFrameTolerance;
  return guarded([&] {
    auto report = etfkit::check_equiangular(frame->frame, t);
    report.merge(etfkit::check_tight(frame->frame, t));
    *out = new etf_report{std::move(report), {}};
  });
}

etf_status etf_experiment_run(uint32_t k, double tol, etf_report** out) {
  ETF_REQUIRE(out != nullptr, "out is null");
  const double t = tol > 0.0 ? tol : etfkit::kDefaultFrameTolerance;
  return guarded([&] {
    auto report = etfkit::conjecture_experiment(k, t);
    std::string verdict(etfkit::comparison_name(report.comparison->verdict));
    *out = new etf_report{std::move(report), std::move(verdict)};
  });
}

void etf_report_destroy(etf_report* report) { delete report; }

int etf_report_passed(const etf_report* report) {
  return report != nullptr && report->report.verdict() ? 1 : 0;
}

size_t etf_report_check_count(const etf_report* report) {
  return report ? report->report.checks.size() : 0;
}

etf_status etf_report_check(const etf_report* report, size_t index, const char** name,
                            double* target, double* measured, double* tolerance,
                            int* pass) {
  ETF_REQUIRE(report != nullptr, "report is null");
  if (index >= report->report.checks.size()) {
    return fail(ETF_ERR_INDEX_OUT_OF_RANGE, "check index out of range");
  }
  const auto& c = report->report.checks[index];
  if (name) *name = c.name.c_str();
  if (target) *target = c.target;
  if (measured) *measured = c.measured;
  if (tolerance) *tolerance = c.tolerance;
  if (pass) *pass = c.pass ? 1 : 0;
  return ETF_OK;
}

const char* etf_report_comparison(const etf_report* report) {
  if (report == nullptr || report->comparison.empty()) return nullptr;
  return report->comparison.c_str();
}

etf_status etf_report_to_json(const etf_report* report, char** out) {
  ETF_REQUIRE(report != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = duplicate(etfkit::report_to_json(report->report)); });
}

etf_status etf_catalog_write_csv(size_t max_n, const char* path, size_t* rows,
                                 size_t* failed) {
  ETF_REQUIRE(path != nullptr, "path is null");
  return guarded([&] {
    if (max_n > etfkit::kMaxCatalogN) {
      throw etfkit::Error(etfkit::ErrorCode::kInvalidArgument,
                          "catalog max_n " + std::to_string(max_n) +
                              " exceeds bound " + std::to_string(etfkit::kMaxCatalogN));
    }
    // Fail on an unwritable path before spending time on constructions.
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw etfkit::Error(etfkit::ErrorCode::kIoError,
                                  std::string("cannot open ") + path + " for writing");
    const auto table = etfkit::build_catalog(max_n);
    out << etfkit::catalog_csv(table);
    out.flush();
    if (!out) throw etfkit::Error(etfkit::ErrorCode::kIoError,
                                  std::string("failed writing ") + path);
    if (rows) *rows = table.size();
    if (failed) {
      *failed = static_cast<size_t>(std::count_if(
          table.begin(), table.end(), [](const auto& r) { return !r.verified; }));
    }
  });
}

}  // extern "C"
