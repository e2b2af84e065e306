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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ottk/error.hpp"
#include "ottk/linalg.hpp"

namespace ottk {
namespace {

Matrix random_sym(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = g(rng);
  }
  return a;
}

Matrix random_spd(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = g(rng);
  }
  Matrix b = m * m.transposed();
  for (std::size_t i = 0; i < n; ++i) b(i, i) += 0.5;
  return b;
}

double residual(const Matrix& a, const Matrix& b, const EigenDecomposition& e, std::size_t k) {
  const auto v = e.vectors.col(k);
  const auto av = a * v;
  const auto bv = b * v;
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += std::pow(av[i] - e.values[k] * bv[i], 2);
  return std::sqrt(s);
}

TEST(SymEig, IdentityAndDiagonal) {
  const auto e = sym_eig(Matrix::identity(5));
  for (double v : e.values) EXPECT_NEAR(v, 1.0, 1e-15);
  const auto d = sym_eig(Matrix(2, 2, {1.0, 0.0, 0.0, 3.0}));
  EXPECT_NEAR(d.values[0], 3.0, 1e-15);
  EXPECT_NEAR(d.values[1], 1.0, 1e-15);
  EXPECT_NEAR(d.vectors(1, 0), 1.0, 1e-15);
  EXPECT_NEAR(d.vectors(0, 1), 1.0, 1e-15);
  EXPECT_NEAR(d.vectors(0, 0), 0.0, 1e-15);
}

TEST(SymEig, TwoByTwoMatchesCharacteristicRoots) {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = u(rng), b = u(rng), c = u(rng);
    const auto e = sym_eig(Matrix(2, 2, {a, b, b, c}));
    const auto [l1, l2] = oracle::eig2(a, b, c);
    EXPECT_NEAR(e.values[0], l1, 1e-12);
    EXPECT_NEAR(e.values[1], l2, 1e-12);
  }
}

TEST(SymEig, ResidualOrthonormalityReconstruction) {
  std::mt19937_64 rng(72);
  for (std::size_t n : {3u, 10u, 40u, 120u}) {
    const Matrix a = random_sym(n, rng);
    const auto e = sym_eig(a);
    const double na = a.frobenius();
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_LE(residual(a, Matrix::identity(n), e, k), 1e-9 * na);
      if (k + 1 < n) EXPECT_GE(e.values[k], e.values[k + 1]);
    }
    const Matrix vtv = e.vectors.transposed() * e.vectors;
    Matrix lam(n, n);
    for (std::size_t k = 0; k < n; ++k) lam(k, k) = e.values[k];
    const Matrix rec = e.vectors * lam * e.vectors.transposed();
    double orth = 0.0, err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        orth = std::max(orth, std::abs(vtv(i, j) - (i == j ? 1.0 : 0.0)));
        err += std::pow(rec(i, j) - a(i, j), 2);
      }
    }
    EXPECT_LE(orth, 1e-9);
    EXPECT_LE(std::sqrt(err), 1e-8 * na);
  }
}

TEST(SymEig, SignConventionAndErrors) {
  std::mt19937_64 rng(73);
  const auto e = sym_eig(random_sym(6, rng));
  for (std::size_t k = 0; k < 6; ++k) {
    const auto v = e.vectors.col(k);
    const auto it = std::find_if(v.begin(), v.end(), [](double x) { return std::abs(x) > 1e-14; });
    ASSERT_NE(it, v.end());
    EXPECT_GT(*it, 0.0);
  }
  EXPECT_THROW(sym_eig(Matrix(2, 2, {1.0, 2.0, 0.0, 1.0})), Error);
  EXPECT_THROW(sym_eig(Matrix(2, 3)), Error);
}

TEST(GenEig, IdentityMetricReducesToSymEig) {
  std::mt19937_64 rng(74);
  const Matrix s = random_sym(7, rng);
  const auto a = sym_eig(s);
  const auto b = gen_eig(s, Matrix::identity(7));
  for (std::size_t k = 0; k < 7; ++k) {
    EXPECT_NEAR(a.values[k], b.values[k], 1e-10);
    EXPECT_NEAR(std::abs(oracle::cosine(a.vectors.col(k), b.vectors.col(k))), 1.0, 1e-9);
  }
}

TEST(GenEig, EqualPairGivesUnitEigenvalues) {
  std::mt19937_64 rng(75);
  const Matrix b = random_spd(5, rng);
  for (double v : gen_eig(b, b).values) EXPECT_NEAR(v, 1.0, 1e-10);
}

TEST(GenEig, RandomPairsSatisfyResidual) {
  std::mt19937_64 rng(76);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = trial < 10 ? 3 : 12;
    const Matrix s = random_sym(n, rng), b = random_spd(n, rng);
    const auto e = gen_eig(s, b);
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_LE(residual(s, b, e, k), 1e-8 * s.frobenius());
      EXPECT_NEAR(norm2(e.vectors.col(k)), 1.0, 1e-12);
      if (k + 1 < n) EXPECT_GE(e.values[k], e.values[k + 1]);
    }
    // B-orthogonality of distinct modes.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto bv = b * e.vectors.col(j);
        EXPECT_NEAR(dot(e.vectors.col(i), bv), 0.0, 1e-8 * b.frobenius());
      }
    }
  }
}

TEST(GenEig, RejectsIndefiniteMetric) {
  const Matrix s = Matrix::identity(2);
  EXPECT_THROW(gen_eig(s, Matrix(2, 2, {1.0, 2.0, 2.0, 1.0})), Error);
  EXPECT_THROW(cholesky(Matrix(2, 2, {0.0, 0.0, 0.0, 1.0})), Error);
  try {
    gen_eig(s, Matrix(2, 2, {-1.0, 0.0, 0.0, 1.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("not positive definite"), std::string::npos);
  }
}

TEST(Cholesky, Reconstructs) {
  std::mt19937_64 rng(77);
  const Matrix b = random_spd(6, rng);
  const Matrix l = cholesky(b);
  const Matrix r = l * l.transposed();
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      EXPECT_NEAR(r(i, j), b(i, j), 1e-12 * b.frobenius());
      if (j > i) EXPECT_EQ(l(i, j), 0.0);
    }
  }
}

TEST(LstsqAffine, ExactLines) {
  const std::vector<double> x{0.0, 1.0, 2.5, 4.0, 7.0};
  auto f = lstsq_affine(x, x);
  EXPECT_NEAR(f.a, 1.0, 1e-14);
  EXPECT_NEAR(f.b, 0.0, 1e-14);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = 2.0 * x[i] + 3.0;
  f = lstsq_affine(x, y);
  EXPECT_NEAR(f.a, 2.0, 1e-14);
  EXPECT_NEAR(f.b, 3.0, 1e-13);
  EXPECT_NEAR(f.residual, 0.0, 1e-20);
}

TEST(LstsqAffine, NoisyMatchesExtendedPrecision) {
  std::mt19937_64 rng(78);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x(500), y(500);
    for (std::size_t i = 0; i < 500; ++i) {
      x[i] = 10.0 + g(rng);
      y[i] = -0.7 * x[i] + 4.0 + 0.3 * g(rng);
    }
    const auto f = lstsq_affine(x, y);
    const auto [a, b] = oracle::normal_equations(x, y);
    EXPECT_NEAR(f.a, a, 1e-11);
    EXPECT_NEAR(f.b, b, 1e-10);
    double res = 0.0;
    for (std::size_t i = 0; i < 500; ++i) res += std::pow(f.a * x[i] + f.b - y[i], 2);
    EXPECT_NEAR(f.residual, res, 1e-9 * res);
  }
}

TEST(LstsqAffine, DegenerateTemplate) {
  const std::vector<double> x(4, 2.0), y{1.0, 2.0, 3.0, 4.0};
  try {
    lstsq_affine(x, y);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("degenerate template"), std::string::npos);
  }
  EXPECT_THROW(lstsq_affine(std::vector<double>{1.0, 2.0}, std::vector<double>{1.0}), Error);
}

}  // namespace
}  // namespace ottk
