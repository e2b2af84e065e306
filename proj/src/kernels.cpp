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

#include "ottk/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ottk/cdt.hpp"
#include "ottk/radon.hpp"
#include "parallel.hpp"

namespace ottk::kernels {
namespace {

struct RayGeometry {
  double ds;
  long half_steps;  // the ray lattice is s_i = i * ds for |i| <= half_steps
};

RayGeometry ray_geometry(const Image2D& img) {
  const double ds = 0.5 * std::min(img.dx(), img.dy());
  const double reach = std::numbers::sqrt2 * img.extent() + std::max(img.dx(), img.dy());
  return {ds, static_cast<long>(std::ceil(reach / ds))};
}

// Range of lattice indices whose points can hit the support of the bilinear
// interpolant, i.e. |p_x| < R + dx/2 and |p_y| < R + dy/2.
void clip_ray(double t, double c, double s, const Image2D& img, const RayGeometry& geo,
              long& first, long& last) {
  double lo = -static_cast<double>(geo.half_steps) * geo.ds;
  double hi = -lo;
  // p(s) = t (c, s) + s (-sin, cos)
  auto clip_axis = [&](double p0, double dir, double bound) {
    if (std::abs(dir) < 1e-15) {
      if (std::abs(p0) >= bound) hi = lo - 1.0;
      return;
    }
    double a = (-bound - p0) / dir;
    double b = (bound - p0) / dir;
    if (a > b) std::swap(a, b);
    lo = std::max(lo, a);
    hi = std::min(hi, b);
  };
  clip_axis(t * c, -s, img.extent() + 0.5 * img.dx());
  clip_axis(t * s, c, img.extent() + 0.5 * img.dy());
  if (hi < lo) {
    first = 1;
    last = 0;
    return;
  }
  first = std::max(-geo.half_steps, static_cast<long>(std::floor(lo / geo.ds)));
  last = std::min(geo.half_steps, static_cast<long>(std::ceil(hi / geo.ds)));
}

void project_angle(const Image2D& img, const Grid1D& tg, double theta, const RayGeometry& geo,
                   std::span<double> out) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for (std::size_t k = 0; k < tg.cells(); ++k) {
    const double t = tg.cell_center(k);
    long first = 0;
    long last = 0;
    clip_ray(t, c, s, img, geo, first, last);
    double sum = 0.0;
    for (long i = first; i <= last; ++i) {
      const double u = static_cast<double>(i) * geo.ds;
      sum += img.sample(t * c - u * s, t * s + u * c);
    }
    out[k] = sum * geo.ds;
  }
  out[tg.size() - 1] = 0.0;
}

template <typename Loop>
Sinogram radon_forward_impl(const Image2D& img, std::size_t n_t, std::size_t n_theta, Loop loop) {
  Sinogram sino(n_t, n_theta, img.extent());
  const Grid1D tg = sino.t_grid();
  const auto thetas = angle_grid(n_theta);
  const RayGeometry geo = ray_geometry(img);
  loop(n_theta, [&](std::size_t a) { project_angle(img, tg, thetas[a], geo, sino.column(a)); });
  return sino;
}

void backproject_row(const Sinogram& q, std::span<const double> cosines,
                     std::span<const double> sines, std::size_t j, Image2D& img) {
  const std::size_t cells = q.n_t() - 1;
  const double R = q.extent();
  const double tau = q.t_grid().spacing();
  const double y = img.y(j);
  const double scale = std::numbers::pi / static_cast<double>(q.n_theta());
  for (std::size_t i = 0; i < img.width(); ++i) {
    const double x = img.x(i);
    double sum = 0.0;
    for (std::size_t a = 0; a < q.n_theta(); ++a) {
      const double t = x * cosines[a] + y * sines[a];
      const double u = (t + R) / tau - 0.5;
      const double fu = std::floor(u);
      const auto k0 = static_cast<long>(fu);
      const double w = u - fu;
      const auto col = q.column(a);
      const double v0 = (k0 >= 0 && k0 < static_cast<long>(cells)) ? col[k0] : 0.0;
      const double v1 = (k0 + 1 >= 0 && k0 + 1 < static_cast<long>(cells)) ? col[k0 + 1] : 0.0;
      sum += (1.0 - w) * v0 + w * v1;
    }
    img.at(i, j) = scale * sum;
  }
}

template <typename Loop>
Image2D backproject_impl(const Sinogram& q, std::size_t width, std::size_t height, Loop loop) {
  Image2D img(width, height, q.extent());
  const auto thetas = q.angles();
  std::vector<double> c(thetas.size()), s(thetas.size());
  for (std::size_t a = 0; a < thetas.size(); ++a) {
    c[a] = std::cos(thetas[a]);
    s[a] = std::sin(thetas[a]);
  }
  loop(height, [&](std::size_t j) { backproject_row(q, c, s, j, img); });
  return img;
}

template <typename Loop>
std::vector<double> sliced_impl(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                std::span<const double> thetas, Loop loop) {
  std::vector<double> out(thetas.size());
  loop(thetas.size(), [&](std::size_t a) {
    const double w = w2_discrete_1d(slice_pointcloud(mu, thetas[a]), slice_pointcloud(nu, thetas[a]));
    out[a] = w * w;
  });
  return out;
}

template <typename Loop>
std::vector<QuantileRep> column_cdt_impl(const Sinogram& sino, std::size_t m, Loop loop) {
  const Grid1D tg = sino.t_grid();
  for (std::size_t a = 0; a < sino.n_theta(); ++a) {
    require(sino.column_mass(a) > kZeroMassThreshold,
            "zero-mass column: probability input violated");
  }
  std::vector<QuantileRep> reps(sino.n_theta(), QuantileRep(tg.lo(), tg.hi(), {0.0}));
  loop(sino.n_theta(), [&](std::size_t a) {
    const auto col = sino.column(a);
    const Density1D column(tg, std::vector<double>(col.begin(), col.end()));
    reps[a] = cdt_forward(normalize(column), m).q;
  });
  return reps;
}

constexpr auto kSerial = [](std::size_t n, auto&& body) { detail::serial_for(n, body); };
constexpr auto kParallel = [](std::size_t n, auto&& body) { detail::parallel_for(n, body); };

}  // namespace

Sinogram radon_forward_serial(const Image2D& img, std::size_t n_t, std::size_t n_theta) {
  return radon_forward_impl(img, n_t, n_theta, kSerial);
}

Sinogram radon_forward_parallel(const Image2D& img, std::size_t n_t, std::size_t n_theta) {
  return radon_forward_impl(img, n_t, n_theta, kParallel);
}

Image2D backproject_serial(const Sinogram& filtered, std::size_t width, std::size_t height) {
  return backproject_impl(filtered, width, height, kSerial);
}

Image2D backproject_parallel(const Sinogram& filtered, std::size_t width, std::size_t height) {
  return backproject_impl(filtered, width, height, kParallel);
}

std::vector<double> sliced_w2_squared_serial(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                             std::span<const double> thetas) {
  return sliced_impl(mu, nu, thetas, kSerial);
}

std::vector<double> sliced_w2_squared_parallel(const DiscreteMeasure& mu,
                                               const DiscreteMeasure& nu,
                                               std::span<const double> thetas) {
  return sliced_impl(mu, nu, thetas, kParallel);
}

std::vector<QuantileRep> column_cdt_serial(const Sinogram& sino, std::size_t m) {
  return column_cdt_impl(sino, m, kSerial);
}

std::vector<QuantileRep> column_cdt_parallel(const Sinogram& sino, std::size_t m) {
  return column_cdt_impl(sino, m, kParallel);
}

}  // namespace ottk::kernels
