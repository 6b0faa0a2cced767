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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "etfkit/complex_matrix.hpp"
#include "etfkit/constructions.hpp"

namespace etfkit {

inline constexpr double kDefaultFrameTolerance = 1e-9;

// A single check: `measured` is the worst deviation from `target`, and the
// check passes when measured <= tolerance.
struct Check {
  std::string name;
  double target = 0.0;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

enum class GramComparison { kEqual, kConjugateEqual, kDifferent };

std::string_view comparison_name(GramComparison c) noexcept;

struct GramComparisonResult {
  GramComparison verdict = GramComparison::kDifferent;
  double direct_deviation = 0.0;
  double conjugate_deviation = 0.0;
};

/// Mathematical failures are recorded here, never thrown.
struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;
  std::optional<GramComparisonResult> comparison;

  /// Conjunction of every check. The comparison is data, not a check.
  bool verdict() const noexcept;
  void add(Check check) { checks.push_back(std::move(check)); }
  void merge(const VerificationReport& other);
};

/// (n - d) / (d (n - 1)); 0 when n == d. Throws InvalidDimensions for n < d
/// or n < 2.
double welch_target(std::size_t n, std::size_t d);

/// Pairwise |<phi_j, phi_k>|^2 against the Welch target, plus column norms.
VerificationReport check_equiangular(const Frame& f,
                                     double tol = kDefaultFrameTolerance);

/// ||T T^* - (n/d) I_d||_max.
VerificationReport check_tight(const Frame& f, double tol = kDefaultFrameTolerance);

/// Sorted eigenvalues against (n/d x d, 0 x (n - d)). Throws NotHermitian.
VerificationReport check_gram_spectrum(const ComplexMatrix& g, std::size_t n,
                                       std::size_t d,
                                       double tol = kSpectrumTolerance);

/// Equal, else ConjugateEqual (against conj(g2)), else Different.
GramComparisonResult gram_equal_up_to_conjugation(const ComplexMatrix& g1,
                                                  const ComplexMatrix& g2,
                                                  double tol = kDefaultFrameTolerance);

}  // namespace etfkit
