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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "etfkit/complex_matrix.hpp"
#include "etfkit/finite_field.hpp"

namespace etfkit {

inline constexpr std::size_t kDefaultMaxConferenceSize = 4096;

/// Square integer matrix with entries in {-1, 0, +1}.
class SignMatrix {
 public:
  explicit SignMatrix(std::size_t size);
  /// Row-major entries; throws InvalidArgument on anything outside {-1, 0, 1}.
  SignMatrix(std::size_t size, std::vector<int> entries);

  std::size_t size() const noexcept { return size_; }
  int operator()(std::size_t r, std::size_t c) const {
    return data_[r * size_ + c];
  }
  void set(std::size_t r, std::size_t c, int value);

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t size_;
  std::vector<std::int8_t> data_;
};

// Exact integer identities. All arithmetic is in 64-bit integers.
bool has_zero_diagonal(const SignMatrix& m);
bool is_antisymmetric(const SignMatrix& m);
/// A e = 0: every row sums to zero.
bool annihilates_ones(const SignMatrix& m);
/// A^2 = J - n I with n = size.
bool squares_to_j_minus_n_i(const SignMatrix& m);
/// C C^T = (n - 1) I with n = size.
bool is_conference_product(const SignMatrix& m);
/// Zero diagonal, antisymmetric, A e = 0, and A^2 = J - n I.
bool satisfies_core_identities(const SignMatrix& m);

enum class Construction {
  kPaleyUpper,
  kPaleyLower,
  kConferenceUpper,
  kConferenceLower,
  kZauner,
  kDropOneCanonical,
  kConferenceEtf,
};

std::string_view construction_name(Construction c) noexcept;
std::optional<Construction> parse_construction(std::string_view name) noexcept;

struct FieldDescriptor {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::vector<std::uint32_t> modulus;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

FieldDescriptor describe(const FiniteField& field);

struct Provenance {
  Construction construction = Construction::kPaleyUpper;
  std::optional<FieldDescriptor> field;
  std::optional<std::size_t> dropped_index;
  /// Encoding of the additive character parameter c.
  std::optional<std::uint32_t> character_c;
  std::optional<std::uint32_t> conference_k;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

std::string describe(const Provenance& provenance);

/// n vectors in C^d, stored as the columns of a d x n synthesis matrix.
///
/// Frames built by this library have unit-norm columns; frames read from
/// disk are only shape-checked so that verification can report defects.
struct Frame {
  std::size_t n = 0;
  std::size_t d = 0;
  ComplexMatrix synthesis{1, 1};
  Provenance provenance;
};

/// G = T* T.
ComplexMatrix gram(const Frame& frame);
/// S = T T*.
ComplexMatrix frame_operator(const Frame& frame);

/// A_jk = chi(a_j - a_k) in canonical element order. Requires q = 3 mod 4.
SignMatrix paley_adjacency(const FiniteField& field);

/// Skew conference matrix of order 2^k from the doubling recursion.
SignMatrix conference_skew(std::uint32_t k,
                           std::size_t max_size = kDefaultMaxConferenceSize);

/// Lower-right core of a bordered conference matrix whose first row is
/// (0, -1, ..., -1) and first column (0, 1, ..., 1)^T. Throws BadBorder or
/// CoreIdentityFailed.
SignMatrix extract_core(const SignMatrix& c);

/// (J + n I + i sqrt(n) A) / 2d with d = (n + 1) / 2.
ComplexMatrix gram_upper(const SignMatrix& a);
/// (n I - J + i sqrt(n) A) / 2(d - 1) with d = (n + 1) / 2.
ComplexMatrix gram_lower(const SignMatrix& a);

inline constexpr double kSpectrumTolerance = 1e-8;

/// Factors G = T* T using the top-d eigenvectors of G. The spectrum must be
/// {n/d with multiplicity d, 0 with multiplicity n - d}; otherwise throws
/// SpectrumMismatch.
Frame frame_from_gram(const ComplexMatrix& g, std::size_t n, std::size_t d,
                      Provenance provenance,
                      double spectrum_tol = kSpectrumTolerance);

/// Quadratic-residue frame of q + 1 vectors in C^((q+1)/2). The first column
/// is e_1; column j > 0 is (1, sqrt2 psi_c(b_1 a), ..., sqrt2 psi_c(b_r a)) /
/// sqrt(q) for the (j-1)-th field element a.
Frame zauner_frame(const FiniteField& field);
Frame zauner_frame(const FiniteField& field, const FieldElement& c);

struct DropOneResult {
  Frame frame;
  /// Frame operator of the reduced set, before S^{-1/2} was applied.
  ComplexMatrix frame_operator;
};

/// Removes one vector and returns the canonical tight frame S^{-1/2} f_k of
/// the rest, each column renormalized. Throws IndexOutOfRange or
/// RankDeficient.
DropOneResult drop_one_canonical_detailed(const Frame& f, std::size_t index = 0);
Frame drop_one_canonical(const Frame& f, std::size_t index = 0);

/// (n, n/2) frame with Gram I + i C / sqrt(n - 1) from a skew conference
/// matrix of order n. Throws NotConference.
Frame conference_etf(const SignMatrix& c);

// Builders that tag provenance. Each covers one construction name.
Frame paley_frame(const FiniteField& field, bool upper);
Frame conference_core_frame(std::uint32_t k, bool upper);

}  // namespace etfkit
