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

#include <cstdint>
#include <vector>

namespace etfkit {

inline constexpr std::uint32_t kDefaultMaxFieldOrder = 4096;

/// An element of GF(p^m), stored by its integer encoding sum_i c_i p^i where
/// c_0 + c_1 x + ... + c_{m-1} x^{m-1} is its polynomial representative.
///
/// The field tag identifies (p, m, modulus); arithmetic between elements with
/// different tags is rejected.
class FieldElement {
 public:
  FieldElement() = default;

  std::uint32_t code() const noexcept { return code_; }
  std::uint64_t field_tag() const noexcept { return tag_; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  friend class FiniteField;
  FieldElement(std::uint32_t code, std::uint64_t tag) : code_(code), tag_(tag) {}

  std::uint32_t code_ = 0;
  std::uint64_t tag_ = 0;
};

/// GF(p^m) with the lexicographically smallest monic irreducible modulus.
///
/// Elements are enumerated in ascending encoding order, so element 0 is the
/// additive identity and element 1 the multiplicative identity. Immutable
/// after construction.
class FiniteField {
 public:
  /// Throws NotPrime, DegreeZero, or OrderTooLarge.
  static FiniteField make(std::uint32_t p, std::uint32_t m,
                          std::uint32_t max_order = kDefaultMaxFieldOrder);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  /// m+1 coefficients, constant term first; the last one is 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::uint64_t tag() const noexcept { return tag_; }

  bool contains(const FieldElement& a) const noexcept {
    return a.field_tag() == tag_ && a.code() < q_;
  }

  FieldElement element(std::uint32_t code) const;
  FieldElement zero() const { return element(0); }
  FieldElement one() const { return element(1); }
  std::vector<FieldElement> elements() const;

  /// Embeds an integer through the prime subfield (k mod p).
  FieldElement from_integer(std::int64_t k) const;

  std::vector<std::uint32_t> coefficients(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, std::uint64_t k) const;

  /// Absolute trace a + a^p + ... + a^{p^{m-1}}, returned as its label in
  /// [0, p).
  std::uint32_t trace(const FieldElement& a) const;

 private:
  FiniteField(std::uint32_t p, std::uint32_t m, std::uint32_t q,
              std::vector<std::uint32_t> modulus);

  void require(const FieldElement& a) const;
  std::uint32_t frobenius_trace(const FieldElement& a) const;

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::uint64_t tag_ = 0;
  std::vector<std::uint32_t> trace_table_;
};

/// Deterministic primality by trial division; exact for all 32-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
};

/// Returns {p, m} when n = p^m with m >= 1, otherwise {0, 0}.
PrimePower factor_prime_power(std::uint64_t n) noexcept;

/// Monic irreducibility over GF(p) by trial division against every monic
/// polynomial of degree <= deg/2. Coefficients are constant term first.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace etfkit
