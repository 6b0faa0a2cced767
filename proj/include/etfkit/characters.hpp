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

#include <complex>
#include <vector>

#include "etfkit/finite_field.hpp"

namespace etfkit {

/// +1 on nonzero squares, -1 on non-squares, 0 at zero. Odd q only.
int quadratic_character(const FiniteField& field, const FieldElement& a);

/// The (q-1)/2 nonzero squares in ascending encoding order.
std::vector<FieldElement> residues(const FiniteField& field);

/// psi_c(a) = exp(2 pi i Tr(c a) / p).
std::complex<double> additive_character(const FiniteField& field,
                                        const FieldElement& c,
                                        const FieldElement& a);

/// sum over b of psi_c(a b^2). |sigma| = sqrt(q) for a != 0; sigma(0) = q.
std::complex<double> sigma(const FiniteField& field, const FieldElement& c,
                           const FieldElement& a);

/// Quadratic Gauss sum: sum over a of psi_c(a) chi(a).
std::complex<double> gauss_sum(const FiniteField& field, const FieldElement& c);

}  // namespace etfkit
