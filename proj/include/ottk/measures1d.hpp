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

// One-dimensional measures sampled on uniform grids.
//
// Sampling convention: a grid with n nodes x_k = lo + k*h has n-1 cells
// [x_k, x_{k+1}). Under the default cell rule, values[k] is the density on
// cell k and the last sample carries no mass. The trapezoid rule instead
// treats the density as piecewise linear between nodes. CDF samples are
// F(x_k) = nu((-inf, x_k)), so F(lo) = 0 and F(hi) = 1 for measures supported
// on the grid.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ottk {

class Grid1D {
 public:
  Grid1D(double lo, double hi, std::size_t n);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  std::size_t size() const { return n_; }
  std::size_t cells() const { return n_ - 1; }
  double spacing() const { return (hi_ - lo_) / static_cast<double>(n_ - 1); }
  double node(std::size_t k) const { return lo_ + static_cast<double>(k) * spacing(); }
  double cell_center(std::size_t k) const { return node(k) + 0.5 * spacing(); }
  /// Index of the cell containing x, clamped to [0, cells()-1].
  std::size_t cell_of(double x) const;

  bool operator==(const Grid1D& other) const = default;

 private:
  double lo_;
  double hi_;
  std::size_t n_;
};

enum class Quadrature { kCell, kTrapezoid };

/// Nonnegative density samples on a grid. Mass is not required to be one;
/// probability-level operations check it (see cdf_from_density).
class Density1D {
 public:
  Density1D(Grid1D grid, std::vector<double> values);

  const Grid1D& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }
  double mass(Quadrature rule = Quadrature::kCell) const;

 private:
  Grid1D grid_;
  std::vector<double> values_;
};

class SignedDensity1D {
 public:
  SignedDensity1D(Grid1D grid, std::vector<double> values);

  const Grid1D& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }
  /// Signed integral under the cell rule.
  double integral() const;
  double l1_norm() const;

 private:
  Grid1D grid_;
  std::vector<double> values_;
};

class Cdf1D {
 public:
  /// Throws "invalid CDF" unless values are nondecreasing within [0, 1] and
  /// end at 1 (tolerance 1e-12).
  Cdf1D(Grid1D grid, std::vector<double> values);

  const Grid1D& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }

 private:
  Grid1D grid_;
  std::vector<double> values_;
};

/// Quantile function sampled at the midpoint levels xi_j = (j + 1/2) / m.
class QuantileRep {
 public:
  QuantileRep(double lo, double hi, std::vector<double> values);

  std::size_t m() const { return values_.size(); }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t j) const { return values_[j]; }
  static double xi(std::size_t j, std::size_t m) {
    return (static_cast<double>(j) + 0.5) / static_cast<double>(m);
  }

 private:
  double lo_;
  double hi_;
  std::vector<double> values_;
};

struct Atom1D {
  double position;
  double weight;
};

/// Weighted atoms sorted by position.
class DiscreteMeasure1D {
 public:
  explicit DiscreteMeasure1D(std::vector<Atom1D> atoms);

  std::span<const Atom1D> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  double total_weight() const;

 private:
  std::vector<Atom1D> atoms_;
};

/// Returns f / mass(f); throws "degenerate measure" when the mass vanishes.
Density1D normalize(const Density1D& f, Quadrature rule = Quadrature::kCell);

/// Cumulative integral of a probability density. Masses within 1e-6 of one are
/// renormalized; larger deviations raise "density not normalized".
Cdf1D cdf_from_density(const Density1D& f, Quadrature rule = Quadrature::kCell);

/// inf{x : F(x) > y} for the piecewise-linear interpolant of F.
double quantile_at(const Cdf1D& cdf, double y);

QuantileRep quantile_from_cdf(const Cdf1D& cdf, std::size_t m);

/// inf{x : mu((-inf, x]) > y}: the smallest atom whose cumulative weight
/// exceeds y.
double quantile_at(const DiscreteMeasure1D& mu, double y);

/// Quantile rep of a probability measure on atoms. The domain defaults to the
/// atom range.
QuantileRep quantile_from_discrete(const DiscreteMeasure1D& mu, std::size_t m);
QuantileRep quantile_from_discrete(const DiscreteMeasure1D& mu, std::size_t m, double lo,
                                   double hi);

/// Adds `mass` spread uniformly over [a, b] to the cells of `grid`. Mass
/// falling outside the grid is assigned to the boundary cells. A degenerate
/// segment deposits everything into the cell containing a.
void deposit_segment(const Grid1D& grid, std::span<double> cell_mass, double a, double b,
                     double mass);

/// Cell masses -> density samples (the trailing node gets zero).
Density1D density_from_cell_mass(const Grid1D& grid, std::span<const double> cell_mass);

/// T_# mu for a nondecreasing map sampled at the nodes of mu's grid. Each
/// cell's mass moves to the image cell [T(x_k), T(x_{k+1})) and is split
/// linearly across the destination grid.
Density1D pushforward_monotone(std::span<const double> map, const Density1D& mu,
                               const Grid1D& out);
Density1D pushforward_monotone(std::span<const double> map, const Density1D& mu);

struct JordanParts {
  Density1D plus;
  double mass_plus;
  Density1D minus;
  double mass_minus;
};

/// Hahn-Jordan split f = f+ - f-. Parts with L1 mass below 1e-12 are zeroed.
JordanParts jordan_split(const SignedDensity1D& f);

/// L1 distance of two densities on the same grid under the cell rule.
double l1_distance(std::span<const double> a, std::span<const double> b, const Grid1D& grid);

inline constexpr double kZeroMassThreshold = 1e-12;
inline constexpr double kRenormalizeTolerance = 1e-6;

}  // namespace ottk
