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

// Seeded synthetic data: bump templates and their translations/dilations,
// Gaussian pairs, and 2D phantoms.

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ottk/measures1d.hpp"
#include "ottk/ot_exact.hpp"
#include "ottk/radon.hpp"

namespace ottk::synth {

struct Bump {
  double center;
  double width;
  double weight;
};

/// Sum of Gaussian bumps.
struct BumpTemplate {
  std::vector<Bump> bumps;
  double operator()(double x) const;
};

/// Three templates with one, two and three bumps, supported near [-1, 1].
std::vector<BumpTemplate> standard_templates();

/// omega * f(omega x - tau) sampled at cell centers, normalized to unit mass.
Density1D render(const BumpTemplate& f, const Grid1D& grid, double omega = 1.0, double tau = 0.0);

struct LabeledSignal {
  int label;
  double omega;
  double tau;
  Density1D signal;
};

struct DeformationRange {
  double omega_lo = 0.6;
  double omega_hi = 1.5;
  double tau_lo = -1.0;
  double tau_hi = 1.0;
};

/// `per_class` random translations/dilations of each standard template.
std::vector<LabeledSignal> bump_dataset(const Grid1D& grid, std::size_t per_class,
                                        std::uint64_t seed, const DeformationRange& range = {});

Grid1D default_signal_grid(std::size_t n = 1025);

/// Two Gaussians of different location and width.
std::pair<Density1D, Density1D> gaussian_pair(const Grid1D& grid);

/// Uniform density on a disc, normalized so the pixel sum has mass 1.
Image2D disc_phantom(std::size_t width, std::size_t height, double extent, double radius,
                     double cx = 0.0, double cy = 0.0);

/// Isotropic Gaussian of unit mass.
Image2D gaussian_blob(std::size_t width, std::size_t height, double extent, double cx, double cy,
                      double sigma);

/// Smooth nonnegative phantom of unit mass built from three anisotropic
/// Gaussians.
Image2D smooth_phantom(std::size_t width, std::size_t height, double extent);

/// Positive and negative Gaussian bumps with disjoint effective supports.
Image2D signed_two_bump(std::size_t width, std::size_t height, double extent);

/// Bilinear splat of a weighted point cloud; each atom keeps its weight.
Image2D rasterize(const DiscreteMeasure& mu, std::size_t width, std::size_t height, double extent);

/// Random 2D cloud of `n` atoms in the disc of radius `radius`, Dirichlet-ish
/// weights summing to one.
DiscreteMeasure random_cloud(std::size_t n, double radius, std::uint64_t seed);

}  // namespace ottk::synth
