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

// etfkit: build, verify, and catalogue equiangular tight frames.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input
// error, 3 a freshly generated frame failed self-verification.

#include <cstdio>
#include <cstdint>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "etfkit/etfkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSelfVerification = 3;

struct FrameDeleter {
  void operator()(etf_frame* f) const { etf_frame_destroy(f); }
};
struct ReportDeleter {
  void operator()(etf_report* r) const { etf_report_destroy(r); }
};
struct StringDeleter {
  void operator()(char* s) const { etf_string_free(s); }
};
using FramePtr = std::unique_ptr<etf_frame, FrameDeleter>;
using ReportPtr = std::unique_ptr<etf_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int report_error(etf_status status) {
  std::fprintf(stderr, "error: %s: %s\n", etf_status_name(status), etf_last_error());
  return kExitUsage;
}

// Parameter problems are usage errors; anything else raised while building a
// frame means the construction itself failed to verify.
bool is_usage_error(etf_status status) {
  switch (status) {
    case ETF_ERR_INVALID_ARGUMENT:
    case ETF_ERR_NOT_PRIME:
    case ETF_ERR_DEGREE_ZERO:
    case ETF_ERR_ORDER_TOO_LARGE:
    case ETF_ERR_FIELD_MISMATCH:
    case ETF_ERR_EVEN_CHARACTERISTIC:
    case ETF_ERR_WRONG_RESIDUE_CLASS:
    case ETF_ERR_INDEX_OUT_OF_RANGE:
    case ETF_ERR_INVALID_DIMENSIONS:
    case ETF_ERR_NOT_CONFERENCE:
    case ETF_ERR_IO:
      return true;
    default:
      return false;
  }
}

void print_report_json(const etf_report* report) {
  char* raw = nullptr;
  if (etf_report_to_json(report, &raw) == ETF_OK) {
    StringPtr json(raw);
    std::printf("%s\n", json.get());
  }
}

struct GenerateArgs {
  std::string construction;
  std::string source = "zauner";
  std::uint64_t n = 0;
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t k = 0;
  std::uint64_t drop_index = 0;
  std::uint32_t character_c = 0;
  std::string out;
  std::string format = "json";
};

int run_generate(const GenerateArgs& args) {
  etf_generate_params params;
  etf_generate_params_init(&params);
  params.construction = args.construction.c_str();
  params.source = args.source.c_str();
  params.n = args.n;
  params.q = args.q;
  params.p = args.p;
  params.m = args.m;
  params.k = args.k;
  params.drop_index = args.drop_index;
  params.character_c = args.character_c;

  etf_frame* raw = nullptr;
  const etf_status status = etf_frame_generate(&params, &raw);
  if (status != ETF_OK) {
    std::fprintf(stderr, "error: %s\n", etf_last_error());
    return is_usage_error(status) ? kExitUsage : kExitSelfVerification;
  }
  FramePtr frame(raw);

  const size_t n = etf_frame_n(frame.get());
  const size_t d = etf_frame_d(frame.get());
  double target = 0.0;
  etf_welch_target(n, d, &target);
  std::printf("(n, d) = (%zu, %zu) via %s\n", n, d, etf_frame_construction(frame.get()));
  std::printf("target |<phi_j, phi_k>|^2 = %.17g\n", target);

  if (const etf_status w = etf_frame_write(frame.get(), args.out.c_str()); w != ETF_OK) {
    return report_error(w);
  }

  etf_report* report_raw = nullptr;
  if (const etf_status v = etf_frame_verify(frame.get(), 0.0, &report_raw); v != ETF_OK) {
    report_error(v);
    return kExitSelfVerification;
  }
  ReportPtr report(report_raw);
  std::string summary;
  for (size_t i = 0; i < etf_report_check_count(report.get()); ++i) {
    const char* name = nullptr;
    double measured = 0.0;
    etf_report_check(report.get(), i, &name, nullptr, &measured, nullptr, nullptr);
    char buf[96];
    std::snprintf(buf, sizeof(buf), " %s=%.3g", name, measured);
    summary += buf;
  }
  const bool passed = etf_report_passed(report.get()) != 0;
  std::printf("verification: %s (max deviation%s)\n", passed ? "PASS" : "FAIL",
              summary.c_str());
  std::printf("wrote %s\n", args.out.c_str());
  return passed ? kExitOk : kExitSelfVerification;
}

int run_verify(const std::string& path, double tol) {
  etf_frame* raw = nullptr;
  if (const etf_status s = etf_frame_read(path.c_str(), &raw); s != ETF_OK) {
    return report_error(s);
  }
  FramePtr frame(raw);
  etf_report* report_raw = nullptr;
  if (const etf_status s = etf_frame_verify(frame.get(), tol, &report_raw); s != ETF_OK) {
    return report_error(s);
  }
  ReportPtr report(report_raw);
  print_report_json(report.get());
  if (etf_report_passed(report.get())) return kExitOk;
  for (size_t i = 0; i < etf_report_check_count(report.get()); ++i) {
    const char* name = nullptr;
    double measured = 0.0;
    int pass = 0;
    etf_report_check(report.get(), i, &name, nullptr, &measured, nullptr, &pass);
    if (!pass) std::fprintf(stderr, "check failed: %s (deviation %.3g)\n", name, measured);
  }
  return kExitCheckFailed;
}

int run_catalog(std::size_t max_n, const std::string& out) {
  size_t rows = 0;
  size_t failed = 0;
  if (const etf_status s = etf_catalog_write_csv(max_n, out.c_str(), &rows, &failed);
      s != ETF_OK) {
    return report_error(s);
  }
  std::printf("wrote %zu rows to %s (%zu failed verification)\n", rows, out.c_str(),
              failed);
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

int run_experiment(std::uint32_t k, double tol) {
  etf_report* raw = nullptr;
  if (const etf_status s = etf_experiment_run(k, tol, &raw); s != ETF_OK) {
    return report_error(s);
  }
  ReportPtr report(raw);
  print_report_json(report.get());
  std::fprintf(stderr, "gram comparison: %s\n", etf_report_comparison(report.get()));
  return etf_report_passed(report.get()) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify equiangular tight frames"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Construct a frame and write it to a file");
  generate
      ->add_option("--construction", gen.construction,
                   "paley-upper, paley-lower, conference-upper, conference-lower, "
                   "zauner, drop-one-canonical, conference-etf")
      ->required();
  generate->add_option("--n", gen.n, "Number of frame vectors");
  generate->add_option("--q", gen.q, "Field order (paley, zauner)");
  generate->add_option("--p", gen.p, "Field characteristic");
  generate->add_option("--m", gen.m, "Field extension degree");
  generate->add_option("--k", gen.k, "Conference recursion depth (size 2^k)");
  generate->add_option("--from", gen.source,
                       "Source for drop-one-canonical: zauner or conference-etf");
  generate->add_option("--drop-index", gen.drop_index, "Vector removed by drop-one-canonical");
  generate->add_option("--c", gen.character_c, "Additive character parameter (encoding)");
  generate->add_option("--out", gen.out, "Output frame file")->required();
  generate->add_option("--format", gen.format, "Output format")
      ->check(CLI::IsMember({"json"}));

  std::string verify_path;
  double verify_tol = 0.0;
  auto* verify = app.add_subcommand("verify", "Check a frame file for equiangularity and tightness");
  verify->add_option("in_path,--in", verify_path, "Frame file")->required();
  verify->add_option("--tol", verify_tol, "Tolerance (default 1e-9)");

  std::size_t max_n = 0;
  std::string catalog_out;
  auto* catalog = app.add_subcommand("catalog", "Build and verify every constructible frame");
  catalog->add_option("--max-n", max_n, "Largest n to include")->required();
  catalog->add_option("--out", catalog_out, "CSV output path")->required();

  std::uint32_t k = 0;
  double experiment_tol = 0.0;
  auto* experiment = app.add_subcommand(
      "experiment", "Drop one vector from the (2^k, 2^(k-1)) conference frame and compare");
  experiment->add_option("--k", k, "Conference recursion depth")->required();
  experiment->add_option("--tol", experiment_tol, "Tolerance (default 1e-9)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (generate->parsed()) return run_generate(gen);
  if (verify->parsed()) return run_verify(verify_path, verify_tol);
  if (catalog->parsed()) return run_catalog(max_n, catalog_out);
  if (experiment->parsed()) return run_experiment(k, experiment_tol);
  return kExitUsage;
}
