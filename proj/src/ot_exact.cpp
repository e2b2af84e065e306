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

#include "ottk/ot_exact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "ottk/error.hpp"
#include "ottk/kernels.hpp"
#include "ottk/radon.hpp"

namespace ottk {

DiscreteMeasure::DiscreteMeasure(std::size_t dim, std::vector<double> coords,
                                 std::vector<double> weights)
    : dim_(dim), coords_(std::move(coords)), weights_(std::move(weights)) {
  require(dim_ >= 1, "discrete measure needs dim >= 1");
  require(!weights_.empty(), "discrete measure needs at least one atom");
  require(coords_.size() == dim_ * weights_.size(), "coordinate count does not match atoms");
  for (double c : coords_) require(std::isfinite(c), "atom coordinates must be finite");
  for (double w : weights_) require(std::isfinite(w) && w > 0.0, "atom weights must be positive");
}

DiscreteMeasure DiscreteMeasure::from_atoms(std::span<const Atom2D> atoms) {
  std::vector<double> coords;
  std::vector<double> weights;
  coords.reserve(2 * atoms.size());
  for (const auto& a : atoms) {
    coords.push_back(a.position[0]);
    coords.push_back(a.position[1]);
    weights.push_back(a.weight);
  }
  return DiscreteMeasure(2, std::move(coords), std::move(weights));
}

DiscreteMeasure DiscreteMeasure::from_1d(const DiscreteMeasure1D& mu) {
  std::vector<double> coords;
  std::vector<double> weights;
  for (const auto& a : mu.atoms()) {
    coords.push_back(a.position);
    weights.push_back(a.weight);
  }
  return DiscreteMeasure(1, std::move(coords), std::move(weights));
}

double DiscreteMeasure::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

bool DiscreteMeasure::same_support(const DiscreteMeasure& other) const {
  return dim_ == other.dim_ && coords_ == other.coords_ && weights_ == other.weights_;
}

double TransportPlan::mass(std::size_t i, std::size_t j) const {
  double s = 0.0;
  for (const auto& e : entries) {
    if (e.row == i && e.col == j) s += e.mass;
  }
  return s;
}

std::vector<double> TransportPlan::row_sums() const {
  std::vector<double> s(rows, 0.0);
  for (const auto& e : entries) s[e.row] += e.mass;
  return s;
}

std::vector<double> TransportPlan::col_sums() const {
  std::vector<double> s(cols, 0.0);
  for (const auto& e : entries) s[e.col] += e.mass;
  return s;
}

namespace {

double squared_distance(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) s += (x[k] - y[k]) * (x[k] - y[k]);
  return s;
}

void require_normalized(const DiscreteMeasure& mu) {
  require(std::abs(mu.total_weight() - 1.0) <= 1e-12, "unnormalized measure: weights must sum to 1");
}

}  // namespace

TransportPlan solve_kantorovich(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  require(mu.dim() == nu.dim(), "measures live in different dimensions");
  require_normalized(mu);
  require_normalized(nu);
  const CostFunction cost = [&](std::size_t i, std::size_t j) {
    return squared_distance(mu.point(i), nu.point(j));
  };
  return solve_transport(mu.weights(), nu.weights(), cost);
}

double w2_1d(const QuantileRep& q1, const QuantileRep& q2) {
  require(q1.m() == q2.m(), "quantile reps have different m");
  double s = 0.0;
  for (std::size_t j = 0; j < q1.m(); ++j) s += (q1[j] - q2[j]) * (q1[j] - q2[j]);
  return std::sqrt(s / static_cast<double>(q1.m()));
}

double w2_discrete_1d(const DiscreteMeasure1D& mu, const DiscreteMeasure1D& nu) {
  const auto a = mu.atoms();
  const auto b = nu.atoms();
  const double ta = mu.total_weight();
  const double tb = nu.total_weight();
  require(std::abs(ta - 1.0) <= 1e-12 && std::abs(tb - 1.0) <= 1e-12,
          "unnormalized measure: weights must sum to 1");
  // Walk the merged cumulative levels; both quantiles are constant between them.
  std::size_t i = 0;
  std::size_t j = 0;
  double ca = a[0].weight;
  double cb = b[0].weight;
  double level = 0.0;
  double s = 0.0;
  while (true) {
    const double next = std::min(ca, cb);
    const double d = a[i].position - b[j].position;
    s += std::max(0.0, next - level) * d * d;
    level = next;
    const bool last_a = i + 1 == a.size();
    const bool last_b = j + 1 == b.size();
    if (last_a && last_b) break;
    if (!last_a && (ca <= cb || last_b)) {
      ca += a[++i].weight;
    } else {
      cb += b[++j].weight;
    }
  }
  return std::sqrt(s);
}

std::vector<double> angle_grid(std::size_t n_angles) {
  std::vector<double> theta(n_angles);
  for (std::size_t k = 0; k < n_angles; ++k) {
    theta[k] = std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_angles);
  }
  return theta;
}

double sw2_pointcloud(const DiscreteMeasure& mu, const DiscreteMeasure& nu, std::size_t n_angles) {
  require(mu.dim() == 2 && nu.dim() == 2, "sliced W2 expects 2D measures");
  require(n_angles >= 1, "sliced W2 needs n_angles >= 1");
  require_normalized(mu);
  require_normalized(nu);
  const auto per_angle = kernels::sliced_w2_squared_parallel(mu, nu, angle_grid(n_angles));
  const double mean = std::accumulate(per_angle.begin(), per_angle.end(), 0.0) /
                      static_cast<double>(n_angles);
  return std::sqrt(mean);
}

std::vector<double> LotEmbedding::velocity() const {
  std::vector<double> v(map.size());
  const auto x = reference.coords();
  for (std::size_t k = 0; k < map.size(); ++k) v[k] = map[k] - x[k];
  return v;
}

double LotEmbedding::map_cost() const {
  double s = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    s += reference.weights()[i] * squared_distance(map_value(i), reference.point(i));
  }
  return s;
}

namespace {

// 1D: the monotone coupling is optimal, and the barycentric image of atom i is
// the mean of F_nu^dagger over the quantile interval the atom occupies.
LotEmbedding lot_embed_1d(const DiscreteMeasure& nu, const DiscreteMeasure& reference) {
  const std::size_t n = reference.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return reference.coords()[x] < reference.coords()[y];
  });
  std::vector<Atom1D> target;
  for (std::size_t j = 0; j < nu.size(); ++j) target.push_back({nu.coords()[j], nu.weights()[j]});
  const DiscreteMeasure1D sorted_target(std::move(target));
  const auto b = sorted_target.atoms();

  LotEmbedding e{reference, std::vector<double>(n, 0.0), 0.0};
  std::size_t j = 0;
  double remaining = b[0].weight;
  for (std::size_t idx : order) {
    const double x = reference.coords()[idx];
    double need = reference.weights()[idx];
    const double w = need;
    double first_moment = 0.0;
    while (need > 0.0) {
      const double take = (j + 1 == b.size()) ? need : std::min(need, remaining);
      first_moment += take * b[j].position;
      e.plan_cost += take * (x - b[j].position) * (x - b[j].position);
      need -= take;
      remaining -= take;
      if (remaining <= 0.0 && j + 1 < b.size()) remaining += b[++j].weight;
      if (take <= 0.0) break;
    }
    e.map[idx] = first_moment / w;
  }
  return e;
}

}  // namespace

LotEmbedding lot_embed(const DiscreteMeasure& nu, const DiscreteMeasure& reference) {
  require(nu.dim() == reference.dim(), "measures live in different dimensions");
  require_normalized(nu);
  require_normalized(reference);
  if (reference.dim() == 1) return lot_embed_1d(nu, reference);
  require(reference.size() >= 2, "reference too coarse: need at least two atoms for d > 1");

  const TransportPlan plan = solve_kantorovich(reference, nu);
  const std::size_t d = reference.dim();
  LotEmbedding e{reference, std::vector<double>(reference.size() * d, 0.0), plan.cost};
  for (const auto& entry : plan.entries) {
    const auto y = nu.point(entry.col);
    for (std::size_t k = 0; k < d; ++k) e.map[entry.row * d + k] += entry.mass * y[k];
  }
  for (std::size_t i = 0; i < reference.size(); ++i) {
    for (std::size_t k = 0; k < d; ++k) e.map[i * d + k] /= reference.weights()[i];
  }
  return e;
}

LotEmbedding lot_identity(const DiscreteMeasure& reference) {
  return LotEmbedding{reference,
                      std::vector<double>(reference.coords().begin(), reference.coords().end()),
                      0.0};
}

double d_lot(const LotEmbedding& e1, const LotEmbedding& e2) {
  require(e1.reference.same_support(e2.reference), "reference mismatch between LOT embeddings");
  double s = 0.0;
  for (std::size_t i = 0; i < e1.reference.size(); ++i) {
    s += e1.reference.weights()[i] * squared_distance(e1.map_value(i), e2.map_value(i));
  }
  return std::sqrt(s);
}

LotEmbedding lot_interpolate(const LotEmbedding& e1, const LotEmbedding& e2, double t) {
  require(t >= 0.0 && t <= 1.0, "geodesic parameter t must lie in [0, 1]");
  require(e1.reference.same_support(e2.reference), "reference mismatch between LOT embeddings");
  LotEmbedding e{e1.reference, std::vector<double>(e1.map.size()), 0.0};
  for (std::size_t k = 0; k < e.map.size(); ++k) e.map[k] = (1.0 - t) * e1.map[k] + t * e2.map[k];
  e.plan_cost = e.map_cost();
  return e;
}

DiscreteMeasure lot_geodesic(const LotEmbedding& e1, const LotEmbedding& e2, double t) {
  const LotEmbedding e = lot_interpolate(e1, e2, t);
  return DiscreteMeasure(e.reference.dim(), e.map,
                         std::vector<double>(e.reference.weights().begin(),
                                             e.reference.weights().end()));
}

}  // namespace ottk
