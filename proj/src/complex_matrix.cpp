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

#include "etfkit/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "etfkit/error.hpp"

namespace etfkit {

namespace {

std::string dims(const ComplexMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "shape mismatch: " + dims(a) + " vs " + dims(b));
  }
}

void require_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.square()) {
    throw Error(ErrorCode::kNotHermitian, "matrix is not square: " + dims(m));
  }
  const double defect = hermitian_defect(m);
  if (defect > tol * std::max(1.0, max_abs(m))) {
    throw Error(ErrorCode::kNotHermitian,
                "matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix h = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    h(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

// One complex Jacobi rotation annihilating a(p, q). The unitary U acts on
// coordinates p and q only: first a phase that makes a(p, q) real positive,
// then a real plane rotation.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const std::size_t n = a.rows();
  const Complex g = a(p, q);
  const double r = std::abs(g);
  const Complex w = std::conj(g) / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double zeta = (aqq - app) / (2.0 * r);
  const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex u_pp = c;
  const Complex u_pq = s;
  const Complex u_qp = -s * w;
  const Complex u_qq = c * w;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * u_pp + akq * u_qp;
    a(k, q) = akp * u_pq + akq * u_qq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
    a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * u_pp + vkq * u_qp;
    v(k, q) = vkp * u_pq + vkq * u_qq;
  }

  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;
}

double max_off_diagonal(const ComplexMatrix& a) {
  double off = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      off = std::max(off, std::abs(a(i, j)));
    }
  }
  return off;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorCode::kInvalidDimensions, "matrix dimensions must be positive");
  }
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "entry count " + std::to_string(data_.size()) +
                    " does not match " + std::to_string(rows_) + "x" +
                    std::to_string(cols_));
  }
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorCode::kInvalidArgument, "matrix entries must be finite");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

std::vector<Complex> ComplexMatrix::column(std::size_t c) const {
  std::vector<Complex> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void ComplexMatrix::set_column(std::size_t c, std::span<const Complex> values) {
  if (values.size() != rows_ || c >= cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "column does not fit matrix");
  }
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cannot multiply " + dims(a) + " by " + dims(b));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = std::conj(a(i, j));
  }
  return out;
}

ComplexMatrix scale(const ComplexMatrix& a, Complex s) {
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
  }
  return out;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const auto& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) sum += std::norm(a(i, j) - b(i, j));
  }
  return std::sqrt(sum);
}

double max_abs(const ComplexMatrix& a) {
  double out = 0.0;
  for (const auto& z : a.entries()) out = std::max(out, std::abs(z));
  return out;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double out = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out = std::max(out, std::abs(a(i, j) - b(i, j)));
    }
  }
  return out;
}

double hermitian_defect(const ComplexMatrix& m) {
  if (!m.square()) {
    throw Error(ErrorCode::kDimensionMismatch, "hermitian defect needs a square matrix");
  }
  double out = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      out = std::max(out, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return out;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m, EigOptions options) {
  require_hermitian(m, kHermitianTolerance);
  const std::size_t n = m.rows();
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = options.tol * frobenius_norm(a);
  const std::size_t max_sweeps =
      options.max_sweeps != 0 ? options.max_sweeps : 100 * n * n;

  bool converged = false;
  for (std::size_t sweep = 0; sweep <= max_sweeps; ++sweep) {
    if (max_off_diagonal(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) > threshold) rotate(a, v, p, q);
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::kNoConvergence,
                "Jacobi iteration did not converge in " +
                    std::to_string(max_sweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

std::size_t numerical_rank(std::span<const double> descending_eigenvalues,
                           double rank_tol) {
  if (descending_eigenvalues.empty() || descending_eigenvalues.front() <= 0.0) {
    return 0;
  }
  const double cutoff = rank_tol * descending_eigenvalues.front();
  return static_cast<std::size_t>(
      std::count_if(descending_eigenvalues.begin(), descending_eigenvalues.end(),
                    [&](double x) { return x > cutoff; }));
}

ComplexMatrix inv_sqrt_psd(const ComplexMatrix& s, double rank_tol) {
  require_hermitian(s, 1e-10);
  const auto eig = hermitian_eig(hermitian_part(s));
  const double top = std::max(eig.eigenvalues.front(), 0.0);
  if (eig.eigenvalues.back() < -1e-9 * top ||
      (top == 0.0 && eig.eigenvalues.back() < 0.0)) {
    throw Error(ErrorCode::kNegativeEigenvalue,
                "matrix is not positive semidefinite (min eigenvalue " +
                    std::to_string(eig.eigenvalues.back()) + ")");
  }

  const std::size_t n = s.rows();
  const std::size_t rank = numerical_rank(eig.eigenvalues, rank_tol);
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < rank; ++k) {
    const double w = 1.0 / std::sqrt(eig.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = w * eig.vectors(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += vik * std::conj(eig.vectors(j, k));
      }
    }
  }
  return out;
}

}  // namespace etfkit
