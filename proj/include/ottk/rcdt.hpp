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

// Radon-CDT and Radon-signed-CDT: sinogram columns are transformed one angle
// at a time. Angles follow angle_grid(); ray offsets live on [-R, R].

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ottk/cdt.hpp"
#include "ottk/radon.hpp"
#include "ottk/scdt.hpp"

namespace ottk {

inline constexpr std::size_t kDefaultM = 256;
inline constexpr std::size_t kDefaultNTheta = 180;

/// q(xi_j, theta_k), stored one angle per column of m values.
class RcdtRep {
 public:
  RcdtRep(std::size_t m, std::size_t n_theta, double extent, std::vector<double> values);

  std::size_t m() const { return m_; }
  std::size_t n_theta() const { return n_theta_; }
  double extent() const { return extent_; }
  std::span<const double> values() const { return values_; }
  std::span<const double> column(std::size_t k) const {
    return std::span<const double>(values_).subspan(k * m_, m_);
  }
  std::span<double> column(std::size_t k) { return std::span<double>(values_).subspan(k * m_, m_); }
  QuantileRep column_rep(std::size_t k) const;

 private:
  std::size_t m_;
  std::size_t n_theta_;
  double extent_;
  std::vector<double> values_;
};

/// Per-angle nondecreasing maps T(., theta) sampled on the ray-offset grid.
class SliceMap {
 public:
  SliceMap(std::size_t n_t, std::size_t n_theta, double extent, std::vector<double> values);

  std::size_t n_t() const { return n_t_; }
  std::size_t n_theta() const { return n_theta_; }
  double extent() const { return extent_; }
  Grid1D t_grid() const { return Grid1D(-extent_, extent_, n_t_); }
  std::span<const double> column(std::size_t k) const {
    return std::span<const double>(values_).subspan(k * n_t_, n_t_);
  }

  static SliceMap identity(std::size_t n_t, std::size_t n_theta, double extent);
  /// T(t, theta) = a t + <b, theta>.
  static SliceMap affine(std::size_t n_t, std::size_t n_theta, double extent, double a, double b1,
                         double b2);

 private:
  std::size_t n_t_;
  std::size_t n_theta_;
  double extent_;
  std::vector<double> values_;
};

struct RscdtRep {
  std::size_t n_t = 0;  // ray-offset samples used for reconstruction
  double extent = 1.0;
  std::vector<ScdtRep> slices;

  std::size_t n_theta() const { return slices.size(); }
  std::size_t m() const { return slices.empty() ? 0 : slices.front().m; }
};

/// Radon transform, then the CDT of each normalized column. Rejects negative
/// images and columns without mass.
RcdtRep rcdt_forward(const Image2D& img, std::size_t m = kDefaultM,
                     std::size_t n_theta = kDefaultNTheta, std::size_t n_t = 0);
RcdtRep rcdt_from_sinogram(const Sinogram& sino, std::size_t m);

/// Per-angle CDT inverses rebuild a sinogram on n_t offsets (0 selects
/// max(width, height) + 1), which is then inverted by FBP.
Sinogram rcdt_to_sinogram(const RcdtRep& rep, std::size_t n_t);
Image2D rcdt_inverse(const RcdtRep& rep, std::size_t width, std::size_t height,
                     std::size_t n_t = 0, const FbpOptions& options = {},
                     Warnings* warnings = nullptr);

/// (1/n_theta sum_theta mean_xi |q1 - q2|^2)^(1/2).
double d_rcdt(const RcdtRep& r1, const RcdtRep& r2);

/// Columnwise g(., theta) o q(., theta).
RcdtRep rcdt_apply_map(const SliceMap& g, const RcdtRep& rep);

/// Per-angle monotone pushforward of each sinogram column.
Sinogram slice_pushforward(const SliceMap& T, const Sinogram& sino);

RscdtRep rscdt_forward(const Image2D& img, std::size_t m = kDefaultM,
                       std::size_t n_theta = kDefaultNTheta, std::size_t n_t = 0);
RscdtRep rscdt_from_sinogram(const Sinogram& sino, std::size_t m);
RscdtRep rscdt_from_rcdt(const RcdtRep& rep, std::size_t n_t);
Sinogram rscdt_to_sinogram(const RscdtRep& rep, Warnings* warnings = nullptr);
Image2D rscdt_inverse(const RscdtRep& rep, std::size_t width, std::size_t height,
                      const FbpOptions& options = {}, Warnings* warnings = nullptr);

/// Angle average of per-angle squared SCDT distances, square-rooted.
double d_rscdt(const RscdtRep& r1, const RscdtRep& r2);

/// Verification route: per-angle LOT distance with respect to the slices of
/// an absolutely continuous reference sinogram.
double d_rcdt_with_reference(const Sinogram& s1, const Sinogram& s2, const Sinogram& reference,
                             std::size_t subdivisions = 4);

}  // namespace ottk
