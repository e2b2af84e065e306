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

// Pipelines in transform space: affine parameter estimation, nearest
// subspace classification, and transport-based morphometry (PCA / PLDA with
// mode visualization through an inverse transform).

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ottk/cdt.hpp"
#include "ottk/linalg.hpp"
#include "ottk/radon.hpp"
#include "ottk/rcdt.hpp"

namespace ottk {

/// observed(t) = omega * template(omega t - tau). In transform space this is
/// q_obs = a q_tmpl + b with a = 1/omega, b = tau/omega.
struct EstimationResult {
  double a = 0.0;
  double b = 0.0;
  double omega = 0.0;
  double tau = 0.0;
  double residual = 0.0;         // ||a q_tmpl + b - q_obs|| in d_cdt units
  double normal_residual = 0.0;  // max |gradient of the objective| / scale at (a, b)
};

EstimationResult estimate_affine(const Density1D& tmpl, const Density1D& observed,
                                 std::size_t m = 1024);
EstimationResult estimate_affine(const CdtRep& tmpl, const CdtRep& observed);

using Vector = std::vector<double>;

struct SubspaceClass {
  int label = 0;
  Vector mean;
  Matrix basis;  // dim x k, orthonormal columns
};

struct SubspaceModel {
  std::size_t dim = 0;  // requested subspace dimension
  std::vector<SubspaceClass> classes;  // sorted by label
};

/// Affine subspace per class: class mean plus the top `dim` principal
/// directions. Directions without variance are dropped.
SubspaceModel fit_nearest_subspace(std::span<const Vector> samples, std::span<const int> labels,
                                   std::size_t dim);

/// Orthogonal distances to each class subspace, ordered as model.classes.
std::vector<double> subspace_residuals(const SubspaceModel& model, std::span<const double> x);

/// Smallest residual wins; exact ties go to the lowest label.
int classify(const SubspaceModel& model, std::span<const double> x);

enum class TbmKind { kPca, kPlda };

struct TbmModel {
  TbmKind kind = TbmKind::kPca;
  double gamma = 0.0;
  Vector mean;
  Matrix modes;  // dim x M, unit-norm columns
  std::vector<double> eigenvalues;
  double total_variance = 0.0;  // trace of the covariance

  std::size_t dim() const { return mean.size(); }
  std::size_t num_modes() const { return eigenvalues.size(); }
  Vector mode(std::size_t k) const { return modes.col(k); }
};

TbmModel tbm_pca(std::span<const Vector> data, std::size_t num_modes);
TbmModel tbm_plda(std::span<const Vector> data, std::span<const int> labels, double gamma,
                  std::size_t num_modes);

/// mean + alpha * mode_k.
Vector mode_point(const TbmModel& model, std::size_t k, double alpha);

struct ModeSignal {
  double alpha = 0.0;
  bool in_range = false;  // false: mean + alpha * mode is not a valid rep
  std::optional<Density1D> signal;
};

struct ModeImage {
  double alpha = 0.0;
  bool in_range = false;
  std::optional<Image2D> image;
};

/// Points on the mode line are validated against the transform range and
/// inverted; invalid points are flagged and left empty.
std::vector<ModeSignal> visualize_mode_cdt(const TbmModel& model, std::size_t k,
                                           std::span<const double> alphas, const Grid1D& out);
std::vector<ModeImage> visualize_mode_rcdt(const TbmModel& model, std::size_t k,
                                           std::span<const double> alphas, std::size_t n_theta,
                                           double extent, std::size_t width, std::size_t height);

std::string to_string(TbmKind kind);

}  // namespace ottk
