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

// Parallel-beam Radon transform on [-R, R]^2.
//
// Image pixel (i, j) is centered at (-R + (i + 1/2) dx, -R + (j + 1/2) dy);
// values are stored row-major with j (the y index) as the row. Angles are
// theta_k = k pi / n_theta with direction (cos theta, sin theta). A sinogram
// column is a 1D density on Grid1D(-R, R, n_t) under the cell rule: entry k is
// the line integral through the center of cell k and the last entry is zero.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ottk/error.hpp"
#include "ottk/measures1d.hpp"
#include "ottk/ot_exact.hpp"

namespace ottk {

class Image2D {
 public:
  Image2D(std::size_t width, std::size_t height, double extent);
  Image2D(std::size_t width, std::size_t height, double extent, std::vector<double> values);

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  double extent() const { return extent_; }
  double dx() const { return 2.0 * extent_ / static_cast<double>(width_); }
  double dy() const { return 2.0 * extent_ / static_cast<double>(height_); }
  double pixel_area() const { return dx() * dy(); }
  double x(std::size_t i) const { return -extent_ + (static_cast<double>(i) + 0.5) * dx(); }
  double y(std::size_t j) const { return -extent_ + (static_cast<double>(j) + 0.5) * dy(); }

  double& at(std::size_t i, std::size_t j) { return values_[j * width_ + i]; }
  double at(std::size_t i, std::size_t j) const { return values_[j * width_ + i]; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  /// Integral of the piecewise-constant image.
  double mass() const;
  /// Bilinear interpolation of pixel-center samples, zero outside the grid.
  double sample(double px, double py) const;

 private:
  std::size_t width_;
  std::size_t height_;
  double extent_;
  std::vector<double> values_;
};

class Sinogram {
 public:
  Sinogram(std::size_t n_t, std::size_t n_theta, double extent);
  Sinogram(std::size_t n_t, std::size_t n_theta, double extent, std::vector<double> values);

  std::size_t n_t() const { return n_t_; }
  std::size_t n_theta() const { return n_theta_; }
  double extent() const { return extent_; }
  Grid1D t_grid() const { return Grid1D(-extent_, extent_, n_t_); }
  std::vector<double> angles() const { return angle_grid(n_theta_); }

  std::span<const double> column(std::size_t k) const {
    return std::span<const double>(values_).subspan(k * n_t_, n_t_);
  }
  std::span<double> column(std::size_t k) {
    return std::span<double>(values_).subspan(k * n_t_, n_t_);
  }
  std::span<const double> values() const { return values_; }
  /// Cell-rule integral of column k.
  double column_mass(std::size_t k) const;

 private:
  std::size_t n_t_;
  std::size_t n_theta_;
  double extent_;
  std::vector<double> values_;
};

/// Default ray-offset count: one t-cell per pixel of the larger image side.
std::size_t default_n_t(const Image2D& img);

Sinogram radon_forward(const Image2D& img, std::size_t n_t, std::size_t n_theta);

enum class FbpWindow { kRamLak, kHann };

struct FbpOptions {
  FbpWindow window = FbpWindow::kRamLak;
};

/// Filtered back projection with a band-limited ramp filter. Pixels outside
/// the disc of radius `extent` are set to zero. Fewer than 90 angles produce
/// a warning, not an error.
Image2D radon_inverse(const Sinogram& sino, std::size_t width, std::size_t height,
                      const FbpOptions& options = {}, Warnings* warnings = nullptr);

/// Ramp-filtered sinogram (the projection data back projection consumes).
Sinogram ramp_filter(const Sinogram& sino, FbpWindow window);

/// theta*_# mu: atoms <x_k, (cos theta, sin theta)> with unchanged weights.
DiscreteMeasure1D slice_pointcloud(const DiscreteMeasure& mu, double theta);

}  // namespace ottk
