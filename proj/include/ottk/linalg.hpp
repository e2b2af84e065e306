// Copyright 2026 The ottk Authors. All Rights Reserved.
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

// Small dense linear algebra: cyclic Jacobi eigensolver, Cholesky, the
// symmetric-definite generalized eigenproblem, and scalar affine fits.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ottk {

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const double> data() const { return data_; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data_).subspan(i * cols_, cols_);
  }
  std::vector<double> col(std::size_t j) const;

  Matrix transposed() const;
  double frobenius() const;
  bool is_symmetric(double rel_tol = 1e-12) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& a, std::span<const double> x);

/// Eigenpairs in descending eigenvalue order; column k of `vectors` belongs
/// to values[k]. Each vector's first nonzero component is positive.
struct EigenDecomposition {
  std::vector<double> values;
  Matrix vectors;
};

EigenDecomposition sym_eig(const Matrix& a);

/// Lower-triangular L with B = L L^T.
Matrix cholesky(const Matrix& b);

/// S v = lambda B v for symmetric S and symmetric positive definite B.
/// Vectors are reported with unit Euclidean norm.
EigenDecomposition gen_eig(const Matrix& s, const Matrix& b);

struct AffineFit {
  double a = 0.0;
  double b = 0.0;
  double residual = 0.0;  // sum of squared residuals
};

/// argmin_{a,b} sum_i (a x_i + b - y_i)^2.
AffineFit lstsq_affine(std::span<const double> x, std::span<const double> y);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

}  // namespace ottk
