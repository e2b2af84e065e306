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

// Angle-parallel kernels. Every *_parallel kernel has a *_serial twin with an
// identical per-angle body; the serial versions are the reference the tests
// and benchmarks compare against. Results agree bit for bit because each angle
// is computed independently and written to its own slot.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ottk/measures1d.hpp"
#include "ottk/ot_exact.hpp"

namespace ottk {

class Image2D;
class Sinogram;

namespace kernels {

Sinogram radon_forward_serial(const Image2D& img, std::size_t n_t, std::size_t n_theta);
Sinogram radon_forward_parallel(const Image2D& img, std::size_t n_t, std::size_t n_theta);

/// (pi / n_theta) sum_theta Q(x cos theta + y sin theta) for a filtered sinogram.
Image2D backproject_serial(const Sinogram& filtered, std::size_t width, std::size_t height);
Image2D backproject_parallel(const Sinogram& filtered, std::size_t width, std::size_t height);

/// W2^2 between the theta-slices of two 2D clouds, one entry per angle.
std::vector<double> sliced_w2_squared_serial(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                             std::span<const double> thetas);
std::vector<double> sliced_w2_squared_parallel(const DiscreteMeasure& mu,
                                               const DiscreteMeasure& nu,
                                               std::span<const double> thetas);

/// CDT of every sinogram column after normalizing it to unit mass. Throws
/// "zero-mass column" when a column carries no mass.
std::vector<QuantileRep> column_cdt_serial(const Sinogram& sino, std::size_t m);
std::vector<QuantileRep> column_cdt_parallel(const Sinogram& sino, std::size_t m);

}  // namespace kernels
}  // namespace ottk
