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

// Exact discrete optimal transport: a transportation-simplex solver for the
// Kantorovich problem, closed-form 1D W2, sliced W2 over point clouds, and the
// discrete linear optimal transport (LOT) embedding.

#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ottk/measures1d.hpp"

namespace ottk {

struct Atom2D {
  std::array<double, 2> position;
  double weight;
};

/// Weighted point cloud in R^dim. Atom order is preserved.
class DiscreteMeasure {
 public:
  DiscreteMeasure(std::size_t dim, std::vector<double> coords, std::vector<double> weights);

  static DiscreteMeasure from_atoms(std::span<const Atom2D> atoms);
  static DiscreteMeasure from_1d(const DiscreteMeasure1D& mu);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return weights_.size(); }
  std::span<const double> point(std::size_t i) const {
    return std::span<const double>(coords_).subspan(i * dim_, dim_);
  }
  std::span<const double> coords() const { return coords_; }
  std::span<const double> weights() const { return weights_; }
  double total_weight() const;
  bool same_support(const DiscreteMeasure& other) const;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
  std::vector<double> weights_;
};

struct PlanEntry {
  std::size_t row;
  std::size_t col;
  double mass;
};

/// Sparse optimal plan: only the support of pi is stored.
struct TransportPlan {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<PlanEntry> entries;
  double cost = 0.0;

  double mass(std::size_t i, std::size_t j) const;
  std::vector<double> row_sums() const;
  std::vector<double> col_sums() const;
};

using CostFunction = std::function<double(std::size_t, std::size_t)>;

/// Minimizes sum pi_ij c_ij subject to row sums a and column sums b. Totals of
/// a and b must agree to 1e-9 ("infeasible" otherwise).
TransportPlan solve_transport(std::span<const double> a, std::span<const double> b,
                              const CostFunction& cost);

/// Optimal plan for c(x, y) = |x - y|^2; plan.cost is W2^2. Both measures must
/// be normalized to 1e-12.
TransportPlan solve_kantorovich(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// L2([0,1]) distance of two quantile reps (midpoint rule).
double w2_1d(const QuantileRep& q1, const QuantileRep& q2);

/// Exact W2 between discrete 1D probability measures (merged quantile steps).
double w2_discrete_1d(const DiscreteMeasure1D& mu, const DiscreteMeasure1D& nu);

/// Angles theta_k = k*pi/n shared with the Radon routines.
std::vector<double> angle_grid(std::size_t n_angles);

/// (mean over theta of W2^2 of the slices)^(1/2) for 2D clouds.
double sw2_pointcloud(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                      std::size_t n_angles = 180);

/// Barycentric-projection LOT embedding of a target with respect to a fixed
/// reference. Exact (a Monge map) when the plan is a permutation.
struct LotEmbedding {
  DiscreteMeasure reference;
  std::vector<double> map;  // reference.size() x dim, row-major
  double plan_cost = 0.0;   // W2^2(reference, target) from the plan

  std::span<const double> map_value(std::size_t i) const {
    return std::span<const double>(map).subspan(i * reference.dim(), reference.dim());
  }
  std::vector<double> velocity() const;
  /// sum_i w_i |T(x_i) - x_i|^2; equals plan_cost when the plan is Monge.
  double map_cost() const;
};

LotEmbedding lot_embed(const DiscreteMeasure& nu, const DiscreteMeasure& reference);
LotEmbedding lot_identity(const DiscreteMeasure& reference);
double d_lot(const LotEmbedding& e1, const LotEmbedding& e2);
/// Embedding of the point (1-t) e1 + t e2 on the segment in transform space.
LotEmbedding lot_interpolate(const LotEmbedding& e1, const LotEmbedding& e2, double t);
/// ((1-t) T1 + t T2)_# reference.
DiscreteMeasure lot_geodesic(const LotEmbedding& e1, const LotEmbedding& e2, double t);

}  // namespace ottk
