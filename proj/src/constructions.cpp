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

#include "etfkit/constructions.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "etfkit/characters.hpp"
#include "etfkit/error.hpp"

namespace etfkit {

namespace {

constexpr std::array<std::pair<Construction, std::string_view>, 7> kNames{{
    {Construction::kPaleyUpper, "paley-upper"},
    {Construction::kPaleyLower, "paley-lower"},
    {Construction::kConferenceUpper, "conference-upper"},
    {Construction::kConferenceLower, "conference-lower"},
    {Construction::kZauner, "zauner"},
    {Construction::kDropOneCanonical, "drop-one-canonical"},
    {Construction::kConferenceEtf, "conference-etf"},
}};

// (M M^T)_ij or (M M)_ij, depending on whether the right factor is transposed.
template <bool kTransposeRight>
bool product_matches(const SignMatrix& m, std::int64_t diag, std::int64_t off) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t sum = 0;
      for (std::size_t k = 0; k < n; ++k) {
        sum += m(i, k) * (kTransposeRight ? m(j, k) : m(k, j));
      }
      if (sum != (i == j ? diag : off)) return false;
    }
  }
  return true;
}

void require_odd_core(const SignMatrix& a) {
  const std::size_t n = a.size();
  if (n < 3 || n % 2 == 0) {
    throw Error(ErrorCode::kInvalidDimensions,
                "Gram construction needs odd n >= 3, got " + std::to_string(n));
  }
  if (!satisfies_core_identities(a)) {
    throw Error(ErrorCode::kCoreIdentityFailed,
                "matrix does not satisfy A^T = -A, A e = 0, A^2 = J - nI");
  }
}

ComplexMatrix sign_gram(const SignMatrix& a, double ones_coeff, double identity_coeff,
                        double denom) {
  const std::size_t n = a.size();
  const double root_n = std::sqrt(static_cast<double>(n));
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double re = ones_coeff + (i == j ? identity_coeff : 0.0);
      const double im = root_n * a(i, j);
      g(i, j) = Complex(re / denom, im / denom);
    }
  }
  return g;
}

}  // namespace

SignMatrix::SignMatrix(std::size_t size) : size_(size), data_(size * size, 0) {
  if (size == 0) {
    throw Error(ErrorCode::kInvalidDimensions, "sign matrix size must be positive");
  }
}

SignMatrix::SignMatrix(std::size_t size, std::vector<int> entries) : SignMatrix(size) {
  if (entries.size() != size * size) {
    throw Error(ErrorCode::kDimensionMismatch, "sign matrix entry count mismatch");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < -1 || entries[i] > 1) {
      throw Error(ErrorCode::kInvalidArgument, "sign matrix entries must be -1, 0, or 1");
    }
    data_[i] = static_cast<std::int8_t>(entries[i]);
  }
}

void SignMatrix::set(std::size_t r, std::size_t c, int value) {
  if (value < -1 || value > 1) {
    throw Error(ErrorCode::kInvalidArgument, "sign matrix entries must be -1, 0, or 1");
  }
  data_[r * size_ + c] = static_cast<std::int8_t>(value);
}

bool has_zero_diagonal(const SignMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m(i, i) != 0) return false;
  }
  return true;
}

bool is_antisymmetric(const SignMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i; j < m.size(); ++j) {
      if (m(i, j) != -m(j, i)) return false;
    }
  }
  return true;
}

bool annihilates_ones(const SignMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < m.size(); ++j) sum += m(i, j);
    if (sum != 0) return false;
  }
  return true;
}

bool squares_to_j_minus_n_i(const SignMatrix& m) {
  const auto n = static_cast<std::int64_t>(m.size());
  return product_matches<false>(m, 1 - n, 1);
}

bool is_conference_product(const SignMatrix& m) {
  const auto n = static_cast<std::int64_t>(m.size());
  return product_matches<true>(m, n - 1, 0);
}

bool satisfies_core_identities(const SignMatrix& m) {
  return has_zero_diagonal(m) && is_antisymmetric(m) && annihilates_ones(m) &&
         squares_to_j_minus_n_i(m);
}

std::string_view construction_name(Construction c) noexcept {
  for (const auto& [value, name] : kNames) {
    if (value == c) return name;
  }
  return "unknown";
}

std::optional<Construction> parse_construction(std::string_view name) noexcept {
  for (const auto& [value, text] : kNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

FieldDescriptor describe(const FiniteField& field) {
  return {field.characteristic(), field.degree(), field.modulus()};
}

std::string describe(const Provenance& provenance) {
  std::string out(construction_name(provenance.construction));
  if (provenance.field) {
    out += " GF(" + std::to_string(provenance.field->p);
    if (provenance.field->m > 1) out += "^" + std::to_string(provenance.field->m);
    out += ")";
  }
  if (provenance.conference_k) out += " k=" + std::to_string(*provenance.conference_k);
  if (provenance.character_c) out += " c=" + std::to_string(*provenance.character_c);
  if (provenance.dropped_index) {
    out += " dropped=" + std::to_string(*provenance.dropped_index);
  }
  return out;
}

ComplexMatrix gram(const Frame& frame) {
  return multiply(adjoint(frame.synthesis), frame.synthesis);
}

ComplexMatrix frame_operator(const Frame& frame) {
  return multiply(frame.synthesis, adjoint(frame.synthesis));
}

SignMatrix paley_adjacency(const FiniteField& field) {
  const std::uint32_t q = field.order();
  if (q % 4 != 3) {
    throw Error(ErrorCode::kWrongResidueClass,
                "Paley tournament needs q = 3 mod 4, got q = " + std::to_string(q));
  }
  SignMatrix a(q);
  const auto elems = field.elements();
  for (std::uint32_t j = 0; j < q; ++j) {
    for (std::uint32_t k = 0; k < q; ++k) {
      a.set(j, k, quadratic_character(field, field.sub(elems[j], elems[k])));
    }
  }
  return a;
}

SignMatrix conference_skew(std::uint32_t k, std::size_t max_size) {
  if (k == 0) {
    throw Error(ErrorCode::kInvalidArgument, "conference recursion needs k >= 1");
  }
  if (k >= 63 || (std::size_t{1} << k) > max_size) {
    throw Error(ErrorCode::kOrderTooLarge,
                "2^" + std::to_string(k) + " exceeds size bound " +
                    std::to_string(max_size));
  }
  SignMatrix c(2, {0, -1, 1, 0});
  for (std::uint32_t level = 1; level < k; ++level) {
    const std::size_t m = c.size();
    SignMatrix next(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const int cij = c(i, j);
        const int eye = i == j ? 1 : 0;
        next.set(i, j, cij);
        next.set(i, j + m, cij - eye);
        next.set(i + m, j, cij + eye);
        next.set(i + m, j + m, -cij);
      }
    }
    c = std::move(next);
  }
  return c;
}

SignMatrix extract_core(const SignMatrix& c) {
  const std::size_t size = c.size();
  bool bordered = size >= 2 && c(0, 0) == 0;
  for (std::size_t i = 1; bordered && i < size; ++i) {
    bordered = c(0, i) == -1 && c(i, 0) == 1;
  }
  if (!bordered) {
    throw Error(ErrorCode::kBadBorder,
                "first row must be (0, -1, ..., -1) and first column (0, 1, ..., 1)");
  }
  const std::size_t n = size - 1;
  SignMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.set(i, j, c(i + 1, j + 1));
  }
  if (!satisfies_core_identities(a)) {
    throw Error(ErrorCode::kCoreIdentityFailed,
                "core does not satisfy A^T = -A, A e = 0, A^2 = J - nI");
  }
  return a;
}

ComplexMatrix gram_upper(const SignMatrix& a) {
  require_odd_core(a);
  const double n = static_cast<double>(a.size());
  const double d = (n + 1.0) / 2.0;
  return sign_gram(a, 1.0, n, 2.0 * d);
}

ComplexMatrix gram_lower(const SignMatrix& a) {
  require_odd_core(a);
  const double n = static_cast<double>(a.size());
  const double d = (n + 1.0) / 2.0;
  return sign_gram(a, -1.0, n, 2.0 * (d - 1.0));
}

Frame frame_from_gram(const ComplexMatrix& g, std::size_t n, std::size_t d,
                      Provenance provenance, double spectrum_tol) {
  if (g.rows() != n || g.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "Gram matrix must be n x n");
  }
  if (d == 0 || d > n) {
    throw Error(ErrorCode::kInvalidDimensions,
                "need 1 <= d <= n, got n=" + std::to_string(n) +
                    " d=" + std::to_string(d));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(g(i, i) - 1.0) > 1e-10) {
      throw Error(ErrorCode::kInvalidArgument, "Gram diagonal must be 1");
    }
  }

  const auto eig = hermitian_eig(g);
  const double top = static_cast<double>(n) / static_cast<double>(d);
  for (std::size_t i = 0; i < n; ++i) {
    const double expected = i < d ? top : 0.0;
    if (std::abs(eig.eigenvalues[i] - expected) > spectrum_tol) {
      throw Error(ErrorCode::kSpectrumMismatch,
                  "eigenvalue " + std::to_string(i) + " is " +
                      std::to_string(eig.eigenvalues[i]) + ", expected " +
                      std::to_string(expected));
    }
  }

  // T = sqrt(n/d) V_d^*, so that T^* T = (n/d) V_d V_d^* = G.
  const double w = std::sqrt(top);
  ComplexMatrix t(d, n);
  for (std::size_t l = 0; l < d; ++l) {
    for (std::size_t k = 0; k < n; ++k) t(l, k) = w * std::conj(eig.vectors(k, l));
  }
  return Frame{n, d, std::move(t), std::move(provenance)};
}

Frame zauner_frame(const FiniteField& field) {
  if (field.characteristic() == 2) {
    throw Error(ErrorCode::kEvenCharacteristic, "Zauner frames need odd q");
  }
  return zauner_frame(field, field.one());
}

Frame zauner_frame(const FiniteField& field, const FieldElement& c) {
  if (field.characteristic() == 2) {
    throw Error(ErrorCode::kEvenCharacteristic, "Zauner frames need odd q");
  }
  if (!field.contains(c)) {
    throw Error(ErrorCode::kFieldMismatch, "character parameter not in field");
  }
  if (c.code() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "character parameter must be nonzero");
  }
  const std::size_t q = field.order();
  const std::size_t d = (q + 1) / 2;
  const std::size_t n = q + 1;
  const double root_q = std::sqrt(static_cast<double>(q));
  const double root_2 = std::sqrt(2.0);
  const auto squares = residues(field);
  const auto elems = field.elements();

  ComplexMatrix t(d, n);
  t(0, 0) = 1.0;
  for (std::size_t j = 0; j < q; ++j) {
    t(0, j + 1) = 1.0 / root_q;
    for (std::size_t l = 0; l < squares.size(); ++l) {
      const Complex psi = additive_character(field, c, field.mul(squares[l], elems[j]));
      t(l + 1, j + 1) = root_2 * psi / root_q;
    }
  }

  Provenance prov;
  prov.construction = Construction::kZauner;
  prov.field = describe(field);
  prov.character_c = c.code();
  return Frame{n, d, std::move(t), std::move(prov)};
}

// GCC 11 misreports the optional<FieldDescriptor> copy below (PR 80635).
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wmaybe-uninitialized"
#endif
DropOneResult drop_one_canonical_detailed(const Frame& f, std::size_t index) {
  if (index >= f.n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "index " + std::to_string(index) + " outside frame of " +
                    std::to_string(f.n) + " vectors");
  }
  if (f.n < 2) {
    throw Error(ErrorCode::kRankDeficient, "no vectors left after removal");
  }
  const std::size_t d = f.d;
  const std::size_t n = f.n - 1;
  ComplexMatrix reduced(d, n);
  for (std::size_t k = 0, out = 0; k < f.n; ++k) {
    if (k == index) continue;
    for (std::size_t l = 0; l < d; ++l) reduced(l, out) = f.synthesis(l, k);
    ++out;
  }

  ComplexMatrix s = multiply(reduced, adjoint(reduced));
  const auto eig = hermitian_eig(s);
  const std::size_t rank = numerical_rank(eig.eigenvalues);
  if (rank < d) {
    throw Error(ErrorCode::kRankDeficient,
                "remaining vectors span dimension " + std::to_string(rank) +
                    " < " + std::to_string(d));
  }

  ComplexMatrix canonical = multiply(inv_sqrt_psd(s), reduced);
  for (std::size_t k = 0; k < n; ++k) {
    auto col = canonical.column(k);
    double norm = 0.0;
    for (const auto& z : col) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto& z : col) z /= norm;
    canonical.set_column(k, col);
  }

  Frame out{n, d, std::move(canonical), f.provenance};
  out.provenance.construction = Construction::kDropOneCanonical;
  out.provenance.dropped_index = index;
  return {std::move(out), std::move(s)};
}
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic pop
#endif

Frame drop_one_canonical(const Frame& f, std::size_t index) {
  return drop_one_canonical_detailed(f, index).frame;
}

Frame conference_etf(const SignMatrix& c) {
  const std::size_t n = c.size();
  bool ok = has_zero_diagonal(c) && is_antisymmetric(c);
  for (std::size_t i = 0; ok && i < n; ++i) {
    for (std::size_t j = 0; ok && j < n; ++j) ok = i == j || c(i, j) != 0;
  }
  if (!ok || !is_conference_product(c)) {
    throw Error(ErrorCode::kNotConference,
                "input is not a skew conference matrix (C^T = -C, C C^T = (n-1) I)");
  }
  if (n < 4) {
    throw Error(ErrorCode::kInvalidDimensions,
                "conference ETF needs n >= 4, got " + std::to_string(n));
  }

  const double root = std::sqrt(static_cast<double>(n - 1));
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j) = Complex(i == j ? 1.0 : 0.0, c(i, j) / root);
    }
  }

  Provenance prov;
  prov.construction = Construction::kConferenceEtf;
  if ((n & (n - 1)) == 0) {
    std::uint32_t k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    prov.conference_k = k;
  }
  return frame_from_gram(g, n, n / 2, std::move(prov), 1e-10);
}

Frame paley_frame(const FiniteField& field, bool upper) {
  const SignMatrix a = paley_adjacency(field);
  const std::size_t n = a.size();
  const std::size_t d = upper ? (n + 1) / 2 : (n - 1) / 2;
  Provenance prov;
  prov.construction = upper ? Construction::kPaleyUpper : Construction::kPaleyLower;
  prov.field = describe(field);
  return frame_from_gram(upper ? gram_upper(a) : gram_lower(a), n, d, std::move(prov));
}

Frame conference_core_frame(std::uint32_t k, bool upper) {
  if (k < 2) {
    throw Error(ErrorCode::kInvalidDimensions,
                "conference core frames need k >= 2 (n >= 3)");
  }
  const SignMatrix a = extract_core(conference_skew(k));
  const std::size_t n = a.size();
  const std::size_t d = upper ? (n + 1) / 2 : (n - 1) / 2;
  Provenance prov;
  prov.construction =
      upper ? Construction::kConferenceUpper : Construction::kConferenceLower;
  prov.conference_k = k;
  return frame_from_gram(upper ? gram_upper(a) : gram_lower(a), n, d, std::move(prov));
}

}  // namespace etfkit
