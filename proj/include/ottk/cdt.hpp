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

// Cumulative distribution transform: a probability density on [lo, hi] maps to
// its quantile function, the optimal transport map from the uniform law on
// [0, 1]. Transform-space L2 distance is the 1D Wasserstein-2 distance.

#pragma once

#include <cstddef>
#include <functional>

#include "ottk/measures1d.hpp"

namespace ottk {

struct CdtRep {
  QuantileRep q;

  std::size_t m() const { return q.m(); }
  double lo() const { return q.lo(); }
  double hi() const { return q.hi(); }
};

/// Strictly increasing map sampled on a grid, linearly interpolated (and
/// linearly extrapolated outside the grid).
class MonotoneMap {
 public:
  MonotoneMap(Grid1D grid, std::vector<double> values);
  static MonotoneMap from_function(const Grid1D& grid, const std::function<double(double)>& g);
  static MonotoneMap identity(const Grid1D& grid);

  const Grid1D& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator()(double x) const;
  double inverse(double y) const;

 private:
  Grid1D grid_;
  std::vector<double> values_;
};

CdtRep cdt_forward(const Density1D& f, std::size_t m, Quadrature rule = Quadrature::kCell);
CdtRep cdt_forward(const DiscreteMeasure1D& mu, std::size_t m);

/// q_# Uniform[0,1]: q is linear between the midpoint levels and linearly
/// extended to xi = 0 and 1, so affine reps invert to exact uniform laws.
Density1D cdt_inverse(const CdtRep& rep, const Grid1D& out);

double d_cdt(const CdtRep& r1, const CdtRep& r2);

/// (1 - t) r1 + t r2.
CdtRep cdt_interpolate(const CdtRep& r1, const CdtRep& r2, double t);
Density1D cdt_geodesic(const CdtRep& r1, const CdtRep& r2, double t, const Grid1D& out);

/// g o q, the transform of g_# nu.
CdtRep cdt_apply_map(const MonotoneMap& g, const CdtRep& rep);

/// s^2 / ||s||_2^2 under the cell rule. Never applied implicitly.
Density1D normalized_energy_density(const SignedDensity1D& s);

/// LOT distance with respect to an absolutely continuous reference,
/// ||F1^dagger o F_r - F2^dagger o F_r||_{L2(mu_r)}, integrated over the
/// reference cells with `subdivisions` midpoint levels per cell.
double d_cdt_with_reference(const Cdf1D& f1, const Cdf1D& f2, const Density1D& reference,
                            std::size_t subdivisions = 4);

/// True when values are nondecreasing up to `slack`.
bool is_nondecreasing(std::span<const double> values, double slack = 0.0);

}  // namespace ottk
