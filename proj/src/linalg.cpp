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

#include "ottk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ottk/error.hpp"

namespace ottk {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  require(data_.size() == rows * cols, "matrix data does not match dimensions");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> Matrix::col(std::size_t j) const {
  std::vector<double> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

double Matrix::frobenius() const { return norm2(data_); }

bool Matrix::is_symmetric(double rel_tol) const {
  if (rows_ != cols_) return false;
  const double scale = std::max(frobenius(), 1e-300);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (std::abs((*this)(i, j) - (*this)(j, i)) > rel_tol * scale) return false;
    }
  }
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

std::vector<double> operator*(const Matrix& a, std::span<const double> x) {
  require(a.cols() == x.size(), "matrix-vector product: shape mismatch");
  std::vector<double> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot(a.row(i), x);
  return y;
}

double dot(std::span<const double> a, std::span<const double> b) {
  require(a.size() == b.size(), "dot: size mismatch");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

namespace {

void fix_sign(Matrix& v, std::size_t col) {
  for (std::size_t i = 0; i < v.rows(); ++i) {
    const double x = v(i, col);
    if (std::abs(x) > 1e-12) {
      if (x < 0.0) {
        for (std::size_t r = 0; r < v.rows(); ++r) v(r, col) = -v(r, col);
      }
      return;
    }
  }
}

EigenDecomposition sorted(std::vector<double> values, const Matrix& vectors) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });
  EigenDecomposition out{std::vector<double>(n), Matrix(vectors.rows(), n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = values[order[k]];
    for (std::size_t i = 0; i < vectors.rows(); ++i) out.vectors(i, k) = vectors(i, order[k]);
    fix_sign(out.vectors, k);
  }
  return out;
}

}  // namespace

EigenDecomposition sym_eig(const Matrix& input) {
  require(input.rows() == input.cols(), "sym_eig: matrix is not square");
  require(input.is_symmetric(), "sym_eig: matrix is not symmetric");
  const std::size_t n = input.rows();
  Matrix a = input;
  Matrix v = Matrix::identity(n);
  const double scale = input.frobenius();
  if (n == 0) return {};

  // Cyclic sweeps in fixed (p, q) order.
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (std::sqrt(off) <= 1e-15 * scale || off == 0.0) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
  return sorted(std::move(values), v);
}

Matrix cholesky(const Matrix& b) {
  require(b.rows() == b.cols(), "cholesky: matrix is not square");
  require(b.is_symmetric(), "cholesky: matrix is not symmetric");
  const std::size_t n = b.rows();
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = b(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    require(d > 0.0, "matrix is not positive definite");
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = b(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

EigenDecomposition gen_eig(const Matrix& s, const Matrix& b) {
  require(s.rows() == b.rows() && s.cols() == b.cols(), "gen_eig: shape mismatch");
  require(s.is_symmetric(), "gen_eig: S is not symmetric");
  const std::size_t n = s.rows();
  const Matrix l = cholesky(b);

  // C = L^-1 S L^-T by forward substitution on columns, then on rows.
  Matrix y(n, n);  // y = L^-1 S
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      double v = s(i, j);
      for (std::size_t k = 0; k < i; ++k) v -= l(i, k) * y(k, j);
      y(i, j) = v / l(i, i);
    }
  }
  Matrix c(n, n);  // c = y L^-T, i.e. c^T = L^-1 y^T
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      double v = y(r, i);
      for (std::size_t k = 0; k < i; ++k) v -= l(i, k) * c(r, k);
      c(r, i) = v / l(i, i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) c(i, j) = c(j, i) = 0.5 * (c(i, j) + c(j, i));
  }
  const EigenDecomposition w = sym_eig(c);

  // v = L^-T w, back substitution.
  Matrix v(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t ii = n; ii-- > 0;) {
      double x = w.vectors(ii, k);
      for (std::size_t j = ii + 1; j < n; ++j) x -= l(j, ii) * v(j, k);
      v(ii, k) = x / l(ii, ii);
    }
    const double nv = norm2(v.col(k));
    for (std::size_t i = 0; i < n; ++i) v(i, k) /= nv;
  }
  return sorted(w.values, v);
}

AffineFit lstsq_affine(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size(), "lstsq_affine: size mismatch");
  require(x.size() >= 2, "lstsq_affine: need at least two samples");
  const auto n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    scale = std::max(scale, std::abs(x[i]));
  }
  require(sxx > 1e-24 * n * std::max(scale * scale, 1e-300), "degenerate template");
  AffineFit fit;
  fit.a = sxy / sxx;
  fit.b = my - fit.a * mx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = fit.a * x[i] + fit.b - y[i];
    fit.residual += r * r;
  }
  return fit;
}

}  // namespace ottk
