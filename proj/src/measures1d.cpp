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

#include "ottk/measures1d.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ottk/error.hpp"

namespace ottk {

Grid1D::Grid1D(double lo, double hi, std::size_t n) : lo_(lo), hi_(hi), n_(n) {
  require(std::isfinite(lo) && std::isfinite(hi) && lo < hi, "invalid grid: need lo < hi");
  require(n >= 2, "invalid grid: need at least two nodes");
}

std::size_t Grid1D::cell_of(double x) const {
  const double u = (x - lo_) / spacing();
  if (!(u > 0.0)) return 0;
  const auto k = static_cast<std::size_t>(u);
  return std::min(k, cells() - 1);
}

Density1D::Density1D(Grid1D grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  require(values_.size() == grid_.size(), "density size does not match grid");
  for (double v : values_) {
    require(std::isfinite(v) && v >= 0.0, "density must be finite and nonnegative");
  }
}

double Density1D::mass(Quadrature rule) const {
  const double h = grid_.spacing();
  double s = 0.0;
  if (rule == Quadrature::kCell) {
    for (std::size_t k = 0; k + 1 < values_.size(); ++k) s += values_[k];
  } else {
    for (std::size_t k = 0; k + 1 < values_.size(); ++k) s += 0.5 * (values_[k] + values_[k + 1]);
  }
  return s * h;
}

SignedDensity1D::SignedDensity1D(Grid1D grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  require(values_.size() == grid_.size(), "signal size does not match grid");
  for (double v : values_) require(std::isfinite(v), "signal values must be finite");
}

double SignedDensity1D::integral() const {
  double s = 0.0;
  for (std::size_t k = 0; k + 1 < values_.size(); ++k) s += values_[k];
  return s * grid_.spacing();
}

double SignedDensity1D::l1_norm() const {
  double s = 0.0;
  for (std::size_t k = 0; k + 1 < values_.size(); ++k) s += std::abs(values_[k]);
  return s * grid_.spacing();
}

Cdf1D::Cdf1D(Grid1D grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
  constexpr double kTol = 1e-12;
  require(values_.size() == grid_.size(), "invalid CDF: size does not match grid");
  require(values_.front() >= -kTol, "invalid CDF: negative values");
  require(std::abs(values_.back() - 1.0) <= kTol, "invalid CDF: last value must be 1");
  for (std::size_t k = 0; k < values_.size(); ++k) {
    require(std::isfinite(values_[k]), "invalid CDF: non-finite value");
    if (k > 0) require(values_[k] >= values_[k - 1] - kTol, "invalid CDF: not monotone");
  }
  // Absorb the tolerated round-off so downstream searches see a monotone array.
  values_.front() = std::max(values_.front(), 0.0);
  for (std::size_t k = 1; k < values_.size(); ++k) {
    values_[k] = std::clamp(values_[k], values_[k - 1], 1.0);
  }
  values_.back() = 1.0;
}

QuantileRep::QuantileRep(double lo, double hi, std::vector<double> values)
    : lo_(lo), hi_(hi), values_(std::move(values)) {
  require(lo <= hi, "quantile rep domain must satisfy lo <= hi");
  require(!values_.empty(), "quantile rep needs m >= 1");
  for (std::size_t j = 0; j < values_.size(); ++j) {
    require(std::isfinite(values_[j]), "quantile rep values must be finite");
  }
}

DiscreteMeasure1D::DiscreteMeasure1D(std::vector<Atom1D> atoms) : atoms_(std::move(atoms)) {
  require(!atoms_.empty(), "discrete measure needs at least one atom");
  for (const auto& a : atoms_) {
    require(std::isfinite(a.position) && std::isfinite(a.weight), "atoms must be finite");
    require(a.weight > 0.0, "atom weights must be positive");
  }
  std::stable_sort(atoms_.begin(), atoms_.end(),
                   [](const Atom1D& a, const Atom1D& b) { return a.position < b.position; });
}

double DiscreteMeasure1D::total_weight() const {
  double s = 0.0;
  for (const auto& a : atoms_) s += a.weight;
  return s;
}

Density1D normalize(const Density1D& f, Quadrature rule) {
  const double mass = f.mass(rule);
  require(mass > kZeroMassThreshold, "degenerate measure: zero total mass");
  std::vector<double> v(f.values().begin(), f.values().end());
  for (double& x : v) x /= mass;
  return Density1D(f.grid(), std::move(v));
}

Cdf1D cdf_from_density(const Density1D& f, Quadrature rule) {
  const double mass = f.mass(rule);
  require(mass > kZeroMassThreshold, "degenerate measure: zero total mass");
  require(std::abs(mass - 1.0) <= kRenormalizeTolerance,
          "density not normalized: call normalize() first");
  const auto vals = f.values();
  const double h = f.grid().spacing();
  std::vector<double> cdf(vals.size(), 0.0);
  double run = 0.0;
  for (std::size_t k = 0; k + 1 < vals.size(); ++k) {
    run += rule == Quadrature::kCell ? vals[k] * h : 0.5 * (vals[k] + vals[k + 1]) * h;
    cdf[k + 1] = run / mass;
  }
  cdf.back() = 1.0;
  return Cdf1D(f.grid(), std::move(cdf));
}

double quantile_at(const Cdf1D& cdf, double y) {
  const auto F = cdf.values();
  const Grid1D& g = cdf.grid();
  const auto it = std::upper_bound(F.begin(), F.end(), y);
  if (it == F.begin()) return g.lo();
  if (it == F.end()) return g.hi();
  const auto k = static_cast<std::size_t>(it - F.begin());
  const double f0 = F[k - 1];
  const double f1 = F[k];
  return g.node(k - 1) + g.spacing() * (y - f0) / (f1 - f0);
}

QuantileRep quantile_from_cdf(const Cdf1D& cdf, std::size_t m) {
  require(m >= 1, "quantile rep needs m >= 1");
  std::vector<double> q(m);
  for (std::size_t j = 0; j < m; ++j) q[j] = quantile_at(cdf, QuantileRep::xi(j, m));
  return QuantileRep(cdf.grid().lo(), cdf.grid().hi(), std::move(q));
}

double quantile_at(const DiscreteMeasure1D& mu, double y) {
  const auto atoms = mu.atoms();
  const double total = mu.total_weight();
  double run = 0.0;
  for (const auto& a : atoms) {
    run += a.weight / total;
    if (run > y) return a.position;
  }
  return atoms.back().position;
}

QuantileRep quantile_from_discrete(const DiscreteMeasure1D& mu, std::size_t m, double lo,
                                   double hi) {
  require(m >= 1, "quantile rep needs m >= 1");
  require(std::abs(mu.total_weight() - 1.0) <= 1e-12, "discrete measure not normalized");
  const auto atoms = mu.atoms();
  std::vector<double> q(m);
  // Single merge pass: levels increase with j, cumulative weights with k.
  std::size_t k = 0;
  double run = atoms[0].weight;
  for (std::size_t j = 0; j < m; ++j) {
    const double y = QuantileRep::xi(j, m);
    while (run <= y && k + 1 < atoms.size()) run += atoms[++k].weight;
    q[j] = atoms[k].position;
  }
  return QuantileRep(lo, hi, std::move(q));
}

QuantileRep quantile_from_discrete(const DiscreteMeasure1D& mu, std::size_t m) {
  return quantile_from_discrete(mu, m, mu.atoms().front().position, mu.atoms().back().position);
}

void deposit_segment(const Grid1D& grid, std::span<double> cell_mass, double a, double b,
                     double mass) {
  const double lo = grid.lo();
  const double hi = grid.hi();
  const double h = grid.spacing();
  const std::size_t cells = grid.cells();
  if (b - a <= 1e-14 * (hi - lo)) {
    cell_mass[grid.cell_of(a)] += mass;
    return;
  }
  const double density = mass / (b - a);
  if (a < lo) cell_mass[0] += density * (std::min(b, lo) - a);
  if (b > hi) cell_mass[cells - 1] += density * (b - std::max(a, hi));
  const double ca = std::max(a, lo);
  const double cb = std::min(b, hi);
  if (cb <= ca) return;
  const std::size_t first = grid.cell_of(ca);
  const std::size_t last = grid.cell_of(cb);
  if (first == last) {
    cell_mass[first] += density * (cb - ca);
    return;
  }
  cell_mass[first] += density * (grid.node(first + 1) - ca);
  for (std::size_t k = first + 1; k < last; ++k) cell_mass[k] += density * h;
  cell_mass[last] += density * (cb - grid.node(last));
}

Density1D density_from_cell_mass(const Grid1D& grid, std::span<const double> cell_mass) {
  const double h = grid.spacing();
  std::vector<double> v(grid.size(), 0.0);
  for (std::size_t k = 0; k < grid.cells(); ++k) v[k] = std::max(cell_mass[k], 0.0) / h;
  return Density1D(grid, std::move(v));
}

Density1D pushforward_monotone(std::span<const double> map, const Density1D& mu,
                               const Grid1D& out) {
  const Grid1D& g = mu.grid();
  require(map.size() == g.size(), "map samples must match the density grid");
  for (std::size_t k = 1; k < map.size(); ++k) {
    require(map[k] >= map[k - 1], "pushforward map must be nondecreasing");
  }
  const double h = g.spacing();
  std::vector<double> cell_mass(out.cells(), 0.0);
  for (std::size_t k = 0; k < g.cells(); ++k) {
    const double m = mu[k] * h;
    if (m > 0.0) deposit_segment(out, cell_mass, map[k], map[k + 1], m);
  }
  return density_from_cell_mass(out, cell_mass);
}

Density1D pushforward_monotone(std::span<const double> map, const Density1D& mu) {
  return pushforward_monotone(map, mu, mu.grid());
}

JordanParts jordan_split(const SignedDensity1D& f) {
  const auto v = f.values();
  std::vector<double> plus(v.size()), minus(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    plus[k] = std::max(v[k], 0.0);
    minus[k] = std::max(-v[k], 0.0);
  }
  Density1D p(f.grid(), std::move(plus));
  Density1D n(f.grid(), std::move(minus));
  double mp = p.mass();
  double mn = n.mass();
  if (mp < kZeroMassThreshold) {
    p = Density1D(f.grid(), std::vector<double>(v.size(), 0.0));
    mp = 0.0;
  }
  if (mn < kZeroMassThreshold) {
    n = Density1D(f.grid(), std::vector<double>(v.size(), 0.0));
    mn = 0.0;
  }
  return {std::move(p), mp, std::move(n), mn};
}

double l1_distance(std::span<const double> a, std::span<const double> b, const Grid1D& grid) {
  require(a.size() == grid.size() && b.size() == grid.size(), "l1_distance: size mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < grid.cells(); ++k) s += std::abs(a[k] - b[k]);
  return s * grid.spacing();
}

}  // namespace ottk
