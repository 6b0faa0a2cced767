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

#include "etfkit/characters.hpp"

#include <numbers>
#include <string>

#include "etfkit/error.hpp"

namespace etfkit {

namespace {

void require_odd(const FiniteField& field) {
  if (field.characteristic() == 2) {
    throw Error(ErrorCode::kEvenCharacteristic,
                "quadratic character is undefined in characteristic 2");
  }
}

void require_nonzero(const FiniteField& field, const FieldElement& c) {
  if (!field.contains(c)) {
    throw Error(ErrorCode::kFieldMismatch, "character parameter not in field");
  }
  if (c.code() == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "additive character parameter must be nonzero");
  }
}

}  // namespace

int quadratic_character(const FiniteField& field, const FieldElement& a) {
  require_odd(field);
  if (!field.contains(a)) {
    throw Error(ErrorCode::kFieldMismatch, "element not in field");
  }
  if (a.code() == 0) return 0;
  // Euler's criterion: a^((q-1)/2) is +1 on squares and -1 otherwise.
  const FieldElement e = field.pow(a, (field.order() - 1) / 2);
  return e == field.one() ? 1 : -1;
}

std::vector<FieldElement> residues(const FiniteField& field) {
  require_odd(field);
  std::vector<FieldElement> out;
  out.reserve((field.order() - 1) / 2);
  for (const auto& a : field.elements()) {
    if (quadratic_character(field, a) == 1) out.push_back(a);
  }
  return out;
}

std::complex<double> additive_character(const FiniteField& field,
                                        const FieldElement& c,
                                        const FieldElement& a) {
  const std::uint32_t t = field.trace(field.mul(c, a));
  if (t == 0) return {1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) /
                       static_cast<double>(field.characteristic());
  return std::polar(1.0, angle);
}

std::complex<double> sigma(const FiniteField& field, const FieldElement& c,
                           const FieldElement& a) {
  require_odd(field);
  require_nonzero(field, c);
  std::complex<double> sum = 0.0;
  for (const auto& b : field.elements()) {
    sum += additive_character(field, c, field.mul(a, field.mul(b, b)));
  }
  return sum;
}

std::complex<double> gauss_sum(const FiniteField& field, const FieldElement& c) {
  require_odd(field);
  require_nonzero(field, c);
  std::complex<double> sum = 0.0;
  for (const auto& a : field.elements()) {
    const int chi = quadratic_character(field, a);
    if (chi != 0) sum += static_cast<double>(chi) * additive_character(field, c, a);
  }
  return sum;
}

}  // namespace etfkit
