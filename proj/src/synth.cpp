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

#include "ottk/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "ottk/error.hpp"

namespace ottk::synth {
namespace {

Image2D from_function(std::size_t width, std::size_t height, double extent,
                      const auto& f) {
  Image2D img(width, height, extent);
  double sum = 0.0;
  for (std::size_t j = 0; j < height; ++j) {
    for (std::size_t i = 0; i < width; ++i) {
      img.at(i, j) = f(img.x(i), img.y(j));
      sum += std::abs(img.at(i, j));
    }
  }
  require(sum > 0.0, "phantom has no mass on this grid");
  return img;
}

void scale_to_unit_mass(Image2D& img) {
  const double m = img.mass();
  require(m > 0.0, "phantom has no mass on this grid");
  for (double& v : img.values()) v /= m;
}

double gauss2(double x, double y, double cx, double cy, double sx, double sy) {
  const double u = (x - cx) / sx;
  const double v = (y - cy) / sy;
  return std::exp(-0.5 * (u * u + v * v));
}

}  // namespace

double BumpTemplate::operator()(double x) const {
  double s = 0.0;
  for (const auto& b : bumps) {
    const double u = (x - b.center) / b.width;
    s += b.weight * std::exp(-0.5 * u * u) / (b.width * std::sqrt(2.0 * std::numbers::pi));
  }
  return s;
}

std::vector<BumpTemplate> standard_templates() {
  return {
      BumpTemplate{{{0.0, 0.25, 1.0}}},
      BumpTemplate{{{-0.45, 0.15, 0.5}, {0.45, 0.15, 0.5}}},
      BumpTemplate{{{-0.6, 0.12, 0.25}, {0.0, 0.12, 0.45}, {0.6, 0.12, 0.3}}},
  };
}

Density1D render(const BumpTemplate& f, const Grid1D& grid, double omega, double tau) {
  require(omega > 0.0, "dilation must be positive");
  std::vector<double> v(grid.size());
  for (std::size_t k = 0; k < grid.cells(); ++k) {
    v[k] = omega * f(omega * grid.cell_center(k) - tau);
  }
  v[grid.cells()] = omega * f(omega * grid.hi() - tau);
  return normalize(Density1D(grid, std::move(v)));
}

Grid1D default_signal_grid(std::size_t n) { return Grid1D(-4.0, 4.0, n); }

std::vector<LabeledSignal> bump_dataset(const Grid1D& grid, std::size_t per_class,
                                        std::uint64_t seed, const DeformationRange& range) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> omega(range.omega_lo, range.omega_hi);
  std::uniform_real_distribution<double> tau(range.tau_lo, range.tau_hi);
  const auto templates = standard_templates();
  std::vector<LabeledSignal> out;
  for (std::size_t i = 0; i < per_class; ++i) {
    for (std::size_t c = 0; c < templates.size(); ++c) {
      const double w = omega(rng);
      const double t = tau(rng);
      out.push_back({static_cast<int>(c), w, t, render(templates[c], grid, w, t)});
    }
  }
  return out;
}

std::pair<Density1D, Density1D> gaussian_pair(const Grid1D& grid) {
  const BumpTemplate a{{{-1.5, 0.3, 1.0}}};
  const BumpTemplate b{{{1.2, 0.7, 1.0}}};
  return {render(a, grid), render(b, grid)};
}

Image2D disc_phantom(std::size_t width, std::size_t height, double extent, double radius,
                     double cx, double cy) {
  Image2D img = from_function(width, height, extent, [&](double x, double y) {
    return (x - cx) * (x - cx) + (y - cy) * (y - cy) <= radius * radius ? 1.0 : 0.0;
  });
  scale_to_unit_mass(img);
  return img;
}

Image2D gaussian_blob(std::size_t width, std::size_t height, double extent, double cx, double cy,
                      double sigma) {
  Image2D img = from_function(width, height, extent, [&](double x, double y) {
    return gauss2(x, y, cx, cy, sigma, sigma);
  });
  scale_to_unit_mass(img);
  return img;
}

Image2D smooth_phantom(std::size_t width, std::size_t height, double extent) {
  const double r = extent;
  Image2D img = from_function(width, height, extent, [&](double x, double y) {
    return 1.0 * gauss2(x, y, -0.25 * r, -0.1 * r, 0.18 * r, 0.12 * r) +
           0.7 * gauss2(x, y, 0.3 * r, 0.2 * r, 0.1 * r, 0.16 * r) +
           0.5 * gauss2(x, y, 0.05 * r, -0.35 * r, 0.12 * r, 0.08 * r);
  });
  scale_to_unit_mass(img);
  return img;
}

Image2D signed_two_bump(std::size_t width, std::size_t height, double extent) {
  const double r = extent;
  Image2D pos = gaussian_blob(width, height, extent, -0.3 * r, 0.1 * r, 0.1 * r);
  Image2D neg = gaussian_blob(width, height, extent, 0.3 * r, -0.1 * r, 0.12 * r);
  Image2D img(width, height, extent);
  for (std::size_t k = 0; k < img.values().size(); ++k) {
    img.values()[k] = pos.values()[k] - 0.6 * neg.values()[k];
  }
  return img;
}

Image2D rasterize(const DiscreteMeasure& mu, std::size_t width, std::size_t height,
                  double extent) {
  require(mu.dim() == 2, "rasterize expects a 2D measure");
  Image2D img(width, height, extent);
  const double area = img.pixel_area();
  for (std::size_t a = 0; a < mu.size(); ++a) {
    const auto p = mu.point(a);
    const double u = (p[0] + extent) / img.dx() - 0.5;
    const double v = (p[1] + extent) / img.dy() - 0.5;
    const auto i0 = static_cast<long>(std::floor(u));
    const auto j0 = static_cast<long>(std::floor(v));
    const double wu = u - std::floor(u);
    const double wv = v - std::floor(v);
    require(i0 >= 0 && j0 >= 0 && i0 + 1 < static_cast<long>(width) &&
                j0 + 1 < static_cast<long>(height),
            "point lies outside the rasterization window");
    const double w = mu.weights()[a] / area;
    img.at(i0, j0) += (1 - wu) * (1 - wv) * w;
    img.at(i0 + 1, j0) += wu * (1 - wv) * w;
    img.at(i0, j0 + 1) += (1 - wu) * wv * w;
    img.at(i0 + 1, j0 + 1) += wu * wv * w;
  }
  return img;
}

DiscreteMeasure random_cloud(std::size_t n, double radius, std::uint64_t seed) {
  require(n >= 1, "cloud needs at least one atom");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> coords(2 * n);
  std::vector<double> weights(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double rr = radius * std::sqrt(unit(rng));
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    coords[2 * i] = rr * std::cos(phi);
    coords[2 * i + 1] = rr * std::sin(phi);
    weights[i] = 0.2 + expo(rng);
    total += weights[i];
  }
  for (double& w : weights) w /= total;
  return DiscreteMeasure(2, std::move(coords), std::move(weights));
}

}  // namespace ottk::synth
