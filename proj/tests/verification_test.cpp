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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "etfkit/error.hpp"

using etfkit::Complex;
using etfkit::ComplexMatrix;
using etfkit::FiniteField;
using etfkit::Frame;
using etfkit::GramComparison;

namespace {

const Complex kI(0.0, 1.0);

Frame basis(std::size_t d) {
  return etfkit::frame_from_gram(ComplexMatrix::identity(d), d, d, {});
}

Frame paley7() { return etfkit::paley_frame(FiniteField::make(7, 1), true); }

const etfkit::Check& find(const etfkit::VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c;
  }
  ADD_FAILURE() << "no check named " << name;
  return r.checks.front();
}

// Exact rational (num, den) in lowest terms.
std::pair<long, long> reduce(long num, long den) {
  const long g = std::gcd(num, den);
  return {num / g, den / g};
}

}  // namespace

TEST(welch_target, examples) {
  EXPECT_DOUBLE_EQ(etfkit::welch_target(7, 4), 0.125);
  EXPECT_DOUBLE_EQ(etfkit::welch_target(8, 4), 1.0 / 7.0);
  EXPECT_DOUBLE_EQ(etfkit::welch_target(3, 1), 1.0);
  EXPECT_EQ(etfkit::welch_target(5, 5), 0.0);
  EXPECT_THROW(etfkit::welch_target(3, 4), etfkit::Error);
  EXPECT_THROW(etfkit::welch_target(1, 1), etfkit::Error);
  EXPECT_THROW(etfkit::welch_target(4, 0), etfkit::Error);
}

TEST(welch_target, rational_identities) {
  for (long d = 1; d <= 64; ++d) {
    // (n - d) / (d (n - 1)) at n = 2d - 1 and n = 2d.
    if (d >= 2) {
      const long n = 2 * d - 1;
      EXPECT_EQ(reduce(n - d, d * (n - 1)), std::make_pair(1L, 2 * d)) << d;
      EXPECT_NEAR(etfkit::welch_target(n, d), 1.0 / (2.0 * d), 1e-16) << d;
    }
    const long n = 2 * d;
    EXPECT_EQ(reduce(n - d, d * (n - 1)), std::make_pair(1L, 2 * d - 1)) << d;
    EXPECT_NEAR(etfkit::welch_target(n, d), 1.0 / (2.0 * d - 1.0), 1e-16) << d;
  }
}

TEST(check_equiangular, orthonormal_basis_passes) {
  const auto r = etfkit::check_equiangular(basis(5));
  EXPECT_TRUE(r.verdict());
  EXPECT_EQ(find(r, "equiangular").target, 0.0);
}

TEST(check_equiangular, paley7) {
  const auto r = etfkit::check_equiangular(paley7());
  EXPECT_TRUE(r.verdict());
  EXPECT_EQ(find(r, "equiangular").target, 0.125);
  EXPECT_LE(find(r, "equiangular").measured, 1e-10);
  EXPECT_LE(find(r, "unit_norm").measured, 1e-10);
}

TEST(check_equiangular, corrupted_column_fails_with_deviation) {
  auto f = paley7();
  for (std::size_t l = 0; l < f.d; ++l) f.synthesis(l, 3) = l == 0 ? 1.0 : 0.0;
  const auto r = etfkit::check_equiangular(f);
  EXPECT_FALSE(r.verdict());
  const auto& eq = find(r, "equiangular");
  EXPECT_FALSE(eq.pass);
  EXPECT_GT(eq.measured, 1e-3);
  EXPECT_TRUE(std::isfinite(eq.measured));
  EXPECT_TRUE(find(r, "unit_norm").pass);  // e_1 still has unit norm
}

TEST(check_equiangular, zeroed_column_fails_unit_norm) {
  auto f = paley7();
  for (std::size_t l = 0; l < f.d; ++l) f.synthesis(l, 0) = 0.0;
  const auto r = etfkit::check_equiangular(f);
  EXPECT_FALSE(find(r, "unit_norm").pass);
  EXPECT_NEAR(find(r, "unit_norm").measured, 1.0, 1e-15);
}

TEST(check_tight, examples) {
  EXPECT_TRUE(etfkit::check_tight(basis(3)).verdict());
  const auto p = etfkit::check_tight(paley7());
  EXPECT_TRUE(p.verdict());
  EXPECT_EQ(find(p, "tight").target, 7.0 / 4.0);
  const auto z = etfkit::check_tight(etfkit::zauner_frame(FiniteField::make(3, 1)));
  EXPECT_TRUE(z.verdict());
  EXPECT_LE(find(z, "tight").measured, 1e-9);

  auto bad = paley7();
  bad.synthesis(0, 0) *= 2.0;
  EXPECT_FALSE(etfkit::check_tight(bad).verdict());
}

TEST(check_gram_spectrum, examples) {
  // 2 * projector onto span(e1, e2) in C^4 is (n/d) P for (4, 2).
  const double proj[] = {2.0, 2.0, 0.0, 0.0};
  EXPECT_TRUE(etfkit::check_gram_spectrum(ComplexMatrix::diagonal(proj), 4, 2).verdict());

  const auto a = etfkit::paley_adjacency(FiniteField::make(7, 1));
  EXPECT_TRUE(etfkit::check_gram_spectrum(etfkit::gram_lower(a), 7, 3).verdict());
  EXPECT_FALSE(etfkit::check_gram_spectrum(etfkit::gram_lower(a), 7, 4).verdict());

  EXPECT_FALSE(etfkit::check_gram_spectrum(ComplexMatrix::identity(4), 4, 2).verdict());
  const ComplexMatrix not_h(2, 2, {1.0, 1.0, 0.0, 1.0});
  EXPECT_THROW(etfkit::check_gram_spectrum(not_h, 2, 1), etfkit::Error);
}

TEST(gram_comparison, verdicts) {
  const auto g = etfkit::gram_upper(etfkit::paley_adjacency(FiniteField::make(7, 1)));
  EXPECT_EQ(etfkit::gram_equal_up_to_conjugation(g, g).verdict, GramComparison::kEqual);
  const auto c = etfkit::gram_equal_up_to_conjugation(g, etfkit::conjugate(g));
  EXPECT_EQ(c.verdict, GramComparison::kConjugateEqual);
  EXPECT_GT(c.direct_deviation, 0.1);
  EXPECT_LE(c.conjugate_deviation, 1e-15);

  const auto other = etfkit::gram_lower(etfkit::paley_adjacency(FiniteField::make(7, 1)));
  const auto d = etfkit::gram_equal_up_to_conjugation(g, other);
  EXPECT_EQ(d.verdict, GramComparison::kDifferent);
  EXPECT_GT(d.direct_deviation, 1e-3);
  EXPECT_GT(d.conjugate_deviation, 1e-3);

  EXPECT_THROW(etfkit::gram_equal_up_to_conjugation(g, ComplexMatrix::identity(3)),
               etfkit::Error);
  EXPECT_EQ(etfkit::comparison_name(GramComparison::kConjugateEqual), "ConjugateEqual");
}

TEST(gram_comparison, drop_one_zauner_gf7) {
  const auto f = FiniteField::make(7, 1);
  const auto dropped = etfkit::drop_one_canonical(etfkit::zauner_frame(f), 0);
  const auto r = etfkit::gram_equal_up_to_conjugation(
      etfkit::gram(dropped), etfkit::gram_upper(etfkit::paley_adjacency(f)));
  EXPECT_NE(r.verdict, GramComparison::kDifferent);
  EXPECT_LE(std::min(r.direct_deviation, r.conjugate_deviation), 1e-9);
}

TEST(report, verdict_is_conjunction) {
  etfkit::VerificationReport r;
  EXPECT_TRUE(r.verdict());
  r.add({"a", 0.0, 0.0, 1e-9, true});
  EXPECT_TRUE(r.verdict());
  etfkit::VerificationReport other;
  other.add({"b", 0.0, 1.0, 1e-9, false});
  r.merge(other);
  EXPECT_EQ(r.checks.size(), 2u);
  EXPECT_FALSE(r.verdict());
}

TEST(verification_properties, max_overlap_equals_sqrt_target) {
  std::vector<Frame> frames;
  for (std::uint32_t q : {3u, 7u, 11u, 19u, 23u}) {
    const auto f = FiniteField::make(q, 1);
    frames.push_back(etfkit::paley_frame(f, true));
    frames.push_back(etfkit::paley_frame(f, false));
    frames.push_back(etfkit::zauner_frame(f));
  }
  for (std::uint32_t k = 2; k <= 5; ++k) {
    frames.push_back(etfkit::conference_etf(etfkit::conference_skew(k)));
    frames.push_back(etfkit::conference_core_frame(k, true));
  }
  for (const auto& f : frames) {
    const auto r = etfkit::check_equiangular(f);
    ASSERT_TRUE(r.verdict()) << f.n << "," << f.d;
    const double t = etfkit::welch_target(f.n, f.d);
    const auto g = etfkit::gram(f);
    double max_overlap = 0.0, min_overlap = 1e9;
    for (std::size_t j = 0; j < f.n; ++j)
      for (std::size_t k = 0; k < f.n; ++k)
        if (j != k) {
          max_overlap = std::max(max_overlap, std::abs(g(j, k)));
          min_overlap = std::min(min_overlap, std::abs(g(j, k)));
        }
    EXPECT_NEAR(max_overlap, std::sqrt(t), 1e-9) << f.n << "," << f.d;
    EXPECT_NEAR(min_overlap, std::sqrt(t), 1e-9) << f.n << "," << f.d;
  }
}

TEST(verification_properties, reports_are_finite) {
  auto f = paley7();
  for (std::size_t l = 0; l < f.d; ++l)
    for (std::size_t k = 0; k < f.n; ++k) f.synthesis(l, k) = Complex(1e3 * l, -1e3 * k);
  auto r = etfkit::check_equiangular(f);
  r.merge(etfkit::check_tight(f));
  for (const auto& c : r.checks) {
    EXPECT_TRUE(std::isfinite(c.measured)) << c.name;
    EXPECT_TRUE(std::isfinite(c.target)) << c.name;
    EXPECT_FALSE(c.pass) << c.name;
  }
}
