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

#include "ottk/radon.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "ottk/fft.hpp"
#include "ottk/kernels.hpp"

namespace ottk {

Image2D::Image2D(std::size_t width, std::size_t height, double extent)
    : Image2D(width, height, extent, std::vector<double>(width * height, 0.0)) {}

Image2D::Image2D(std::size_t width, std::size_t height, double extent, std::vector<double> values)
    : width_(width), height_(height), extent_(extent), values_(std::move(values)) {
  require(width >= 1 && height >= 1, "image dimensions must be positive");
  require(std::isfinite(extent) && extent > 0.0, "image extent must be positive");
  require(values_.size() == width * height, "image values do not match dimensions");
  for (double v : values_) require(std::isfinite(v), "image values must be finite");
}

double Image2D::mass() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s * pixel_area();
}

double Image2D::sample(double px, double py) const {
  const double u = (px + extent_) / dx() - 0.5;
  const double v = (py + extent_) / dy() - 0.5;
  if (u <= -1.0 || v <= -1.0 || u >= static_cast<double>(width_) ||
      v >= static_cast<double>(height_)) {
    return 0.0;
  }
  const double fu = std::floor(u);
  const double fv = std::floor(v);
  const auto i0 = static_cast<long>(fu);
  const auto j0 = static_cast<long>(fv);
  const double wu = u - fu;
  const double wv = v - fv;
  const auto w = static_cast<long>(width_);
  const auto h = static_cast<long>(height_);
  auto pixel = [&](long i, long j) {
    return (i < 0 || j < 0 || i >= w || j >= h) ? 0.0 : values_[j * w + i];
  };
  return (1.0 - wv) * ((1.0 - wu) * pixel(i0, j0) + wu * pixel(i0 + 1, j0)) +
         wv * ((1.0 - wu) * pixel(i0, j0 + 1) + wu * pixel(i0 + 1, j0 + 1));
}

Sinogram::Sinogram(std::size_t n_t, std::size_t n_theta, double extent)
    : Sinogram(n_t, n_theta, extent, std::vector<double>(n_t * n_theta, 0.0)) {}

Sinogram::Sinogram(std::size_t n_t, std::size_t n_theta, double extent, std::vector<double> values)
    : n_t_(n_t), n_theta_(n_theta), extent_(extent), values_(std::move(values)) {
  require(n_t >= 2, "sinogram needs n_t >= 2");
  require(n_theta >= 1, "sinogram needs n_theta >= 1");
  require(std::isfinite(extent) && extent > 0.0, "sinogram extent must be positive");
  require(values_.size() == n_t * n_theta, "sinogram values do not match dimensions");
  for (double v : values_) require(std::isfinite(v), "sinogram values must be finite");
}

double Sinogram::column_mass(std::size_t k) const {
  const auto c = column(k);
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < n_t_; ++i) s += c[i];
  return s * t_grid().spacing();
}

std::size_t default_n_t(const Image2D& img) { return std::max(img.width(), img.height()) + 1; }

Sinogram radon_forward(const Image2D& img, std::size_t n_t, std::size_t n_theta) {
  require(n_t >= 2 && n_theta >= 2, "radon_forward needs n_t, n_theta >= 2");
  return kernels::radon_forward_parallel(img, n_t, n_theta);
}

Sinogram ramp_filter(const Sinogram& sino, FbpWindow window) {
  const std::size_t cells = sino.n_t() - 1;
  const double tau = sino.t_grid().spacing();
  const std::size_t size = next_pow2(2 * cells);

  // Band-limited ramp kernel sampled in space, then taken to frequency space;
  // this keeps the DC term consistent with the discrete convolution.
  std::vector<std::complex<double>> kernel(size, 0.0);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  kernel[0] = 1.0 / (4.0 * tau * tau);
  for (std::size_t n = 1; n < size / 2; ++n) {
    if (n % 2 == 1) {
      const double v = -1.0 / (static_cast<double>(n * n) * pi2 * tau * tau);
      kernel[n] = v;
      kernel[size - n] = v;
    }
  }
  fft(kernel, false);
  std::vector<double> response(size);
  for (std::size_t k = 0; k < size; ++k) {
    double r = kernel[k].real();
    if (window == FbpWindow::kHann) {
      const std::size_t kk = std::min(k, size - k);
      const double omega = static_cast<double>(kk) / static_cast<double>(size / 2);
      r *= 0.5 * (1.0 + std::cos(std::numbers::pi * omega));
    }
    response[k] = r;
  }

  Sinogram out(sino.n_t(), sino.n_theta(), sino.extent());
  for (std::size_t a = 0; a < sino.n_theta(); ++a) {
    auto spectrum = real_fft(sino.column(a).first(cells), size);
    for (std::size_t k = 0; k < size; ++k) spectrum[k] *= response[k];
    fft(spectrum, true);
    auto dst = out.column(a);
    for (std::size_t i = 0; i < cells; ++i) dst[i] = tau * spectrum[i].real();
  }
  return out;
}

Image2D radon_inverse(const Sinogram& sino, std::size_t width, std::size_t height,
                      const FbpOptions& options, Warnings* warnings) {
  if (sino.n_theta() < 90) {
    warn(warnings, "radon_inverse: fewer than 90 angles; expect streak artifacts");
  }
  const Sinogram filtered = ramp_filter(sino, options.window);
  Image2D img = kernels::backproject_parallel(filtered, width, height);
  // Outside the inscribed disc some angles miss the t window, so the
  // backprojection there is not a reconstruction.
  const double r2 = sino.extent() * sino.extent();
  for (std::size_t j = 0; j < height; ++j) {
    for (std::size_t i = 0; i < width; ++i) {
      if (img.x(i) * img.x(i) + img.y(j) * img.y(j) > r2) img.at(i, j) = 0.0;
    }
  }
  return img;
}

DiscreteMeasure1D slice_pointcloud(const DiscreteMeasure& mu, double theta) {
  require(mu.dim() == 2, "slice_pointcloud expects a 2D measure");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  std::vector<Atom1D> atoms(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const auto p = mu.point(i);
    atoms[i] = {p[0] * c + p[1] * s, mu.weights()[i]};
  }
  return DiscreteMeasure1D(std::move(atoms));
}

}  // namespace ottk
