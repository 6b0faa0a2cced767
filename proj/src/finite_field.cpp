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

#include "etfkit/finite_field.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "etfkit/error.hpp"

namespace etfkit {

namespace {

using Poly = std::vector<std::uint32_t>;

// Remainder of num modulo a monic divisor, coefficients mod p.
Poly poly_mod(Poly num, const Poly& monic, std::uint32_t p) {
  const std::size_t dd = monic.size() - 1;
  for (std::size_t top = num.size(); top-- > dd;) {
    const std::uint64_t lead = num[top];
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) {
      const std::size_t at = top - dd + i;
      num[at] = static_cast<std::uint32_t>(
          (num[at] + (p - lead) * monic[i]) % p);
    }
  }
  num.resize(std::min(num.size(), dd));
  return num;
}

bool is_zero_poly(const Poly& a) {
  for (auto c : a) {
    if (c != 0) return false;
  }
  return true;
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffu;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

PrimePower factor_prime_power(std::uint64_t n) noexcept {
  if (n < 2) return {};
  std::uint64_t p = 0;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return {static_cast<std::uint32_t>(n), 1};
  std::uint32_t m = 0;
  while (n % p == 0) {
    n /= p;
    ++m;
  }
  if (n != 1) return {};
  return {static_cast<std::uint32_t>(p), m};
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  if (poly.size() < 2 || poly.back() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "irreducibility test expects a monic polynomial of degree >= 1");
  }
  const std::size_t deg = poly.size() - 1;
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    // Every monic divisor candidate of degree k, by encoding of its low part.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    Poly divisor(k + 1, 0);
    divisor[k] = 1;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      std::uint64_t rest = enc;
      for (std::size_t i = 0; i < k; ++i) {
        divisor[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (is_zero_poly(poly_mod(poly, divisor, p))) return false;
    }
  }
  return true;
}

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t m,
                              std::uint32_t max_order) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  if (m == 0) {
    throw Error(ErrorCode::kDegreeZero, "extension degree must be >= 1");
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > max_order) {
      throw Error(ErrorCode::kOrderTooLarge,
                  "field order " + std::to_string(p) + "^" + std::to_string(m) +
                      " exceeds bound " + std::to_string(max_order));
    }
  }

  // Smallest monic irreducible of degree m by encoding of (c_0, ..., c_{m-1}).
  Poly modulus(m + 1, 0);
  modulus[m] = 1;
  for (std::uint64_t enc = 0; enc < q; ++enc) {
    std::uint64_t rest = enc;
    for (std::uint32_t i = 0; i < m; ++i) {
      modulus[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(modulus, p)) {
      return FiniteField(p, m, static_cast<std::uint32_t>(q), modulus);
    }
  }
  // Irreducible polynomials exist in every degree.
  throw Error(ErrorCode::kInvalidArgument, "no irreducible modulus found");
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t m, std::uint32_t q,
                         std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(q), modulus_(std::move(modulus)) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  h = fnv1a(h, p_);
  h = fnv1a(h, m_);
  for (auto c : modulus_) h = fnv1a(h, c);
  tag_ = h == 0 ? 1 : h;

  trace_table_.resize(q_);
  for (std::uint32_t c = 0; c < q_; ++c) {
    trace_table_[c] = frobenius_trace(FieldElement(c, tag_));
  }
}

void FiniteField::require(const FieldElement& a) const {
  if (!contains(a)) {
    throw Error(ErrorCode::kFieldMismatch,
                "element does not belong to GF(" + std::to_string(q_) + ")");
  }
}

FieldElement FiniteField::element(std::uint32_t code) const {
  if (code >= q_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "element code " + std::to_string(code) + " outside GF(" +
                    std::to_string(q_) + ")");
  }
  return FieldElement(code, tag_);
}

std::vector<FieldElement> FiniteField::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out.push_back(FieldElement(c, tag_));
  return out;
}

FieldElement FiniteField::from_integer(std::int64_t k) const {
  const std::int64_t r = ((k % p_) + p_) % p_;
  return FieldElement(static_cast<std::uint32_t>(r), tag_);
}

std::vector<std::uint32_t> FiniteField::coefficients(const FieldElement& a) const {
  require(a);
  std::vector<std::uint32_t> c(m_);
  std::uint32_t rest = a.code();
  for (std::uint32_t i = 0; i < m_; ++i) {
    c[i] = rest % p_;
    rest /= p_;
  }
  return c;
}

FieldElement FiniteField::add(const FieldElement& a, const FieldElement& b) const {
  require(a);
  require(b);
  if (m_ == 1) {
    return FieldElement(
        static_cast<std::uint32_t>((std::uint64_t{a.code()} + b.code()) % p_), tag_);
  }
  std::uint32_t x = a.code();
  std::uint32_t y = b.code();
  std::uint32_t code = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    code += static_cast<std::uint32_t>((std::uint64_t{x % p_} + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return FieldElement(code, tag_);
}

FieldElement FiniteField::neg(const FieldElement& a) const {
  require(a);
  std::uint32_t x = a.code();
  std::uint32_t code = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    code += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return FieldElement(code, tag_);
}

FieldElement FiniteField::sub(const FieldElement& a, const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement FiniteField::mul(const FieldElement& a, const FieldElement& b) const {
  require(a);
  require(b);
  if (m_ == 1) {
    return FieldElement(static_cast<std::uint32_t>(
                            static_cast<std::uint64_t>(a.code()) * b.code() % p_),
                        tag_);
  }
  // q <= 2^32 bounds m by 32, so the product has at most 63 coefficients.
  std::array<std::uint64_t, 32> ca{};
  std::array<std::uint64_t, 32> cb{};
  std::array<std::uint64_t, 64> prod{};
  for (std::uint32_t i = 0, x = a.code(), y = b.code(); i < m_; ++i) {
    ca[i] = x % p_;
    cb[i] = y % p_;
    x /= p_;
    y /= p_;
  }
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (ca[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  }
  // Reduce by the monic modulus from the top down.
  for (std::uint32_t top = 2 * m_ - 2; top >= m_; --top) {
    const std::uint64_t lead = prod[top];
    if (lead == 0) continue;
    for (std::uint32_t i = 0; i <= m_; ++i) {
      const std::uint32_t at = top - m_ + i;
      prod[at] = (prod[at] + (p_ - lead) * modulus_[i]) % p_;
    }
  }
  std::uint32_t code = 0;
  for (std::uint32_t i = m_; i-- > 0;) code = code * p_ + static_cast<std::uint32_t>(prod[i]);
  return FieldElement(code, tag_);
}

FieldElement FiniteField::pow(const FieldElement& a, std::uint64_t k) const {
  require(a);
  FieldElement result = one();
  FieldElement base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

FieldElement FiniteField::inv(const FieldElement& a) const {
  require(a);
  if (a.code() == 0) {
    throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  }
  return pow(a, q_ - 2);
}

std::uint32_t FiniteField::trace(const FieldElement& a) const {
  require(a);
  return trace_table_[a.code()];
}

std::uint32_t FiniteField::frobenius_trace(const FieldElement& a) const {
  FieldElement sum = zero();
  FieldElement frob = a;
  for (std::uint32_t i = 0; i < m_; ++i) {
    sum = add(sum, frob);
    frob = pow(frob, p_);
  }
  // The trace lands in the prime subfield, whose encodings are [0, p).
  return sum.code();
}

}  // namespace etfkit
