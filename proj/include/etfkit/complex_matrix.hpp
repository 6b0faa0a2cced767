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
#include <cstddef>
#include <span>
#include <vector>

namespace etfkit {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Dimensions are positive and entries finite.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return data_; }

  std::vector<Complex> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Complex> values);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);
ComplexMatrix scale(const ComplexMatrix& a, Complex s);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);
/// Largest entry magnitude.
double max_abs(const ComplexMatrix& a);
/// Largest entrywise magnitude of a - b.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);
/// Largest entrywise magnitude of m - m*.
double hermitian_defect(const ComplexMatrix& m);

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kDefaultEigTolerance = 1e-13;

struct EigenDecomposition {
  /// Descending; ties keep their original diagonal order.
  std::vector<double> eigenvalues;
  /// Unitary; column j belongs to eigenvalues[j].
  ComplexMatrix vectors;
};

struct EigOptions {
  /// Rotations stop once every off-diagonal magnitude is <= tol * ||M||_F.
  double tol = kDefaultEigTolerance;
  /// 0 selects the default cap of 100 n^2 sweeps.
  std::size_t max_sweeps = 0;
};

/// Cyclic two-sided complex Jacobi. Throws NotHermitian or NoConvergence.
EigenDecomposition hermitian_eig(const ComplexMatrix& m, EigOptions options = {});

inline constexpr double kDefaultRankTolerance = 1e-9;

/// Pseudo-inverse square root of a positive semidefinite matrix. Eigenvalues at
/// or below rank_tol * lambda_max map to zero. Throws NegativeEigenvalue.
ComplexMatrix inv_sqrt_psd(const ComplexMatrix& s,
                           double rank_tol = kDefaultRankTolerance);

/// Number of eigenvalues above rank_tol * lambda_max.
std::size_t numerical_rank(std::span<const double> descending_eigenvalues,
                           double rank_tol = kDefaultRankTolerance);

}  // namespace etfkit
