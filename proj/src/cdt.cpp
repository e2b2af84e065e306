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

#include "ottk/cdt.hpp"

#include <algorithm>
#include <cmath>

#include "ottk/error.hpp"
#include "ottk/ot_exact.hpp"

namespace ottk {

bool is_nondecreasing(std::span<const double> values, double slack) {
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] < values[k - 1] - slack) return false;
  }
  return true;
}

MonotoneMap::MonotoneMap(Grid1D grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  require(values_.size() == grid_.size(), "monotone map samples must match the grid");
  for (std::size_t k = 1; k < values_.size(); ++k) {
    require(values_[k] > values_[k - 1], "map is not strictly increasing");
  }
}

MonotoneMap MonotoneMap::from_function(const Grid1D& grid, const std::function<double(double)>& g) {
  std::vector<double> v(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) v[k] = g(grid.node(k));
  return MonotoneMap(grid, std::move(v));
}

MonotoneMap MonotoneMap::identity(const Grid1D& grid) {
  return from_function(grid, [](double x) { return x; });
}

double MonotoneMap::operator()(double x) const {
  const std::size_t k = grid_.cell_of(x);
  const double w = (x - grid_.node(k)) / grid_.spacing();
  return values_[k] + w * (values_[k + 1] - values_[k]);
}

double MonotoneMap::inverse(double y) const {
  const auto it = std::upper_bound(values_.begin(), values_.end(), y);
  std::size_t k = it == values_.begin() ? 0 : static_cast<std::size_t>(it - values_.begin()) - 1;
  k = std::min(k, grid_.cells() - 1);
  const double w = (y - values_[k]) / (values_[k + 1] - values_[k]);
  return grid_.node(k) + w * grid_.spacing();
}

CdtRep cdt_forward(const Density1D& f, std::size_t m, Quadrature rule) {
  return CdtRep{quantile_from_cdf(cdf_from_density(f, rule), m)};
}

CdtRep cdt_forward(const DiscreteMeasure1D& mu, std::size_t m) {
  return CdtRep{quantile_from_discrete(mu, m)};
}

Density1D cdt_inverse(const CdtRep& rep, const Grid1D& out) {
  const auto q = rep.q.values();
  const std::size_t m = q.size();
  const double scale = std::max({1.0, std::abs(rep.lo()), std::abs(rep.hi())});
  require(is_nondecreasing(q, 1e-12 * scale), "CDT rep is not monotone");
  const double cell = 1.0 / static_cast<double>(m);
  std::vector<double> cell_mass(out.cells(), 0.0);
  double q0 = q[0];
  double q1 = q[m - 1];
  if (m >= 2) {
    q0 = q[0] - 0.5 * (q[1] - q[0]);
    q1 = q[m - 1] + 0.5 * (q[m - 1] - q[m - 2]);
  }
  q0 = std::clamp(q0, std::min(rep.lo(), q[0]), q[0]);
  q1 = std::clamp(q1, q[m - 1], std::max(rep.hi(), q[m - 1]));
  deposit_segment(out, cell_mass, q0, q[0], 0.5 * cell);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    deposit_segment(out, cell_mass, q[j], std::max(q[j], q[j + 1]), cell);
  }
  deposit_segment(out, cell_mass, q[m - 1], q1, 0.5 * cell);
  return density_from_cell_mass(out, cell_mass);
}

double d_cdt(const CdtRep& r1, const CdtRep& r2) { return w2_1d(r1.q, r2.q); }

CdtRep cdt_interpolate(const CdtRep& r1, const CdtRep& r2, double t) {
  require(t >= 0.0 && t <= 1.0, "geodesic parameter t must lie in [0, 1]");
  require(r1.m() == r2.m(), "quantile reps have different m");
  std::vector<double> v(r1.m());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = (1.0 - t) * r1.q[j] + t * r2.q[j];
  return CdtRep{QuantileRep(std::min(r1.lo(), r2.lo()), std::max(r1.hi(), r2.hi()), std::move(v))};
}

Density1D cdt_geodesic(const CdtRep& r1, const CdtRep& r2, double t, const Grid1D& out) {
  return cdt_inverse(cdt_interpolate(r1, r2, t), out);
}

CdtRep cdt_apply_map(const MonotoneMap& g, const CdtRep& rep) {
  std::vector<double> v(rep.m());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = g(rep.q[j]);
  return CdtRep{QuantileRep(g(rep.lo()), g(rep.hi()), std::move(v))};
}

Density1D normalized_energy_density(const SignedDensity1D& s) {
  const auto v = s.values();
  std::vector<double> e(v.size());
  double energy = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    e[k] = v[k] * v[k];
    if (k + 1 < v.size()) energy += e[k];
  }
  energy *= s.grid().spacing();
  require(energy > 0.0, "degenerate measure: signal has zero energy");
  for (double& x : e) x /= energy;
  return Density1D(s.grid(), std::move(e));
}

double d_cdt_with_reference(const Cdf1D& f1, const Cdf1D& f2, const Density1D& reference,
                            std::size_t subdivisions) {
  require(subdivisions >= 1, "need at least one subdivision per cell");
  const Cdf1D ref = cdf_from_density(reference);
  const auto F = ref.values();
  double s = 0.0;
  for (std::size_t k = 0; k + 1 < F.size(); ++k) {
    const double w = F[k + 1] - F[k];
    if (w <= 0.0) continue;
    for (std::size_t p = 0; p < subdivisions; ++p) {
      const double level = F[k] + w * (static_cast<double>(p) + 0.5) / static_cast<double>(subdivisions);
      const double d = quantile_at(f1, level) - quantile_at(f2, level);
      s += d * d * w / static_cast<double>(subdivisions);
    }
  }
  return std::sqrt(s);
}

}  // namespace ottk
