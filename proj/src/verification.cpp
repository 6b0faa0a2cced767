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

#include "etfkit/verification.hpp"

#include <algorithm>
#include <cmath>

#include "etfkit/error.hpp"

namespace etfkit {

namespace {

Check make_check(std::string name, double target, double measured, double tol) {
  return Check{std::move(name), target, measured, tol, measured <= tol};
}

bool shape_ok(const Frame& f) {
  return f.synthesis.rows() == f.d && f.synthesis.cols() == f.n && f.d >= 1;
}

}  // namespace

std::string_view comparison_name(GramComparison c) noexcept {
  switch (c) {
    case GramComparison::kEqual: return "Equal";
    case GramComparison::kConjugateEqual: return "ConjugateEqual";
    case GramComparison::kDifferent: return "Different";
  }
  return "Different";
}

bool VerificationReport::verdict() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  if (other.comparison) comparison = other.comparison;
}

double welch_target(std::size_t n, std::size_t d) {
  if (n < 2 || n < d || d == 0) {
    throw Error(ErrorCode::kInvalidDimensions,
                "Welch target needs n >= 2 and 1 <= d <= n, got n=" +
                    std::to_string(n) + " d=" + std::to_string(d));
  }
  return static_cast<double>(n - d) /
         (static_cast<double>(d) * static_cast<double>(n - 1));
}

VerificationReport check_equiangular(const Frame& f, double tol) {
  VerificationReport report;
  report.subject = describe(f.provenance);
  if (!shape_ok(f) || f.n < 2 || f.d > f.n) {
    report.add(make_check("dimensions", 0.0, 1.0, 0.0));
    return report;
  }
  const double target = welch_target(f.n, f.d);

  const ComplexMatrix g = gram(f);
  double norm_dev = 0.0;
  for (std::size_t k = 0; k < f.n; ++k) {
    norm_dev = std::max(norm_dev, std::abs(std::sqrt(g(k, k).real()) - 1.0));
  }
  double overlap_dev = 0.0;
  for (std::size_t j = 0; j < f.n; ++j) {
    for (std::size_t k = j + 1; k < f.n; ++k) {
      overlap_dev = std::max(overlap_dev, std::abs(std::norm(g(j, k)) - target));
    }
  }
  report.add(make_check("unit_norm", 1.0, norm_dev, tol));
  report.add(make_check("equiangular", target, overlap_dev, tol));
  return report;
}

VerificationReport check_tight(const Frame& f, double tol) {
  VerificationReport report;
  report.subject = describe(f.provenance);
  if (!shape_ok(f) || f.d > f.n) {
    report.add(make_check("dimensions", 0.0, 1.0, 0.0));
    return report;
  }
  const double bound = static_cast<double>(f.n) / static_cast<double>(f.d);
  const ComplexMatrix s = frame_operator(f);
  const ComplexMatrix expected = scale(ComplexMatrix::identity(f.d), bound);
  report.add(make_check("tight", bound, max_abs_difference(s, expected), tol));
  return report;
}

VerificationReport check_gram_spectrum(const ComplexMatrix& g, std::size_t n,
                                       std::size_t d, double tol) {
  if (g.rows() != n || g.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "Gram matrix must be n x n");
  }
  if (d == 0 || d > n) {
    throw Error(ErrorCode::kInvalidDimensions, "need 1 <= d <= n");
  }
  const auto eig = hermitian_eig(g);
  const double top = static_cast<double>(n) / static_cast<double>(d);
  double dev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    dev = std::max(dev, std::abs(eig.eigenvalues[i] - (i < d ? top : 0.0)));
  }
  VerificationReport report;
  report.subject = "Gram spectrum (" + std::to_string(n) + "," + std::to_string(d) + ")";
  report.add(make_check("gram_spectrum", top, dev, tol));
  return report;
}

GramComparisonResult gram_equal_up_to_conjugation(const ComplexMatrix& g1,
                                                  const ComplexMatrix& g2,
                                                  double tol) {
  GramComparisonResult out;
  out.direct_deviation = max_abs_difference(g1, g2);
  out.conjugate_deviation = max_abs_difference(g1, conjugate(g2));
  if (out.direct_deviation <= tol) {
    out.verdict = GramComparison::kEqual;
  } else if (out.conjugate_deviation <= tol) {
    out.verdict = GramComparison::kConjugateEqual;
  } else {
    out.verdict = GramComparison::kDifferent;
  }
  return out;
}

}  // namespace etfkit
