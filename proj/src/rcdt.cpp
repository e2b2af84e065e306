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

#include "ottk/rcdt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ottk/kernels.hpp"
#include "parallel.hpp"

namespace ottk {
namespace {

std::size_t resolve_n_t(std::size_t n_t, std::size_t width, std::size_t height) {
  return n_t == 0 ? std::max(width, height) + 1 : n_t;
}

Density1D column_density(const Sinogram& s, std::size_t a) {
  const auto col = s.column(a);
  return Density1D(s.t_grid(), std::vector<double>(col.begin(), col.end()));
}

}  // namespace

RcdtRep::RcdtRep(std::size_t m, std::size_t n_theta, double extent, std::vector<double> values)
    : m_(m), n_theta_(n_theta), extent_(extent), values_(std::move(values)) {
  require(m >= 1 && n_theta >= 1, "RCDT rep needs m, n_theta >= 1");
  require(std::isfinite(extent) && extent > 0.0, "RCDT extent must be positive");
  require(values_.size() == m * n_theta, "RCDT values do not match dimensions");
}

QuantileRep RcdtRep::column_rep(std::size_t k) const {
  const auto c = column(k);
  return QuantileRep(-extent_, extent_, std::vector<double>(c.begin(), c.end()));
}

SliceMap::SliceMap(std::size_t n_t, std::size_t n_theta, double extent, std::vector<double> values)
    : n_t_(n_t), n_theta_(n_theta), extent_(extent), values_(std::move(values)) {
  require(n_t >= 2 && n_theta >= 1, "slice map needs n_t >= 2, n_theta >= 1");
  require(values_.size() == n_t * n_theta, "slice map values do not match dimensions");
  for (std::size_t a = 0; a < n_theta; ++a) {
    require(is_nondecreasing(column(a)), "slice map is not monotone at angle " + std::to_string(a));
  }
}

SliceMap SliceMap::identity(std::size_t n_t, std::size_t n_theta, double extent) {
  return affine(n_t, n_theta, extent, 1.0, 0.0, 0.0);
}

SliceMap SliceMap::affine(std::size_t n_t, std::size_t n_theta, double extent, double a, double b1,
                          double b2) {
  const Grid1D tg(-extent, extent, n_t);
  const auto thetas = angle_grid(n_theta);
  std::vector<double> v(n_t * n_theta);
  for (std::size_t k = 0; k < n_theta; ++k) {
    const double shift = b1 * std::cos(thetas[k]) + b2 * std::sin(thetas[k]);
    for (std::size_t i = 0; i < n_t; ++i) v[k * n_t + i] = a * tg.node(i) + shift;
  }
  return SliceMap(n_t, n_theta, extent, std::move(v));
}

RcdtRep rcdt_from_sinogram(const Sinogram& sino, std::size_t m) {
  require(m >= 1, "m must be positive");
  const auto reps = kernels::column_cdt_parallel(sino, m);
  std::vector<double> v(m * sino.n_theta());
  for (std::size_t a = 0; a < reps.size(); ++a) {
    std::copy(reps[a].values().begin(), reps[a].values().end(), v.begin() + a * m);
  }
  return RcdtRep(m, sino.n_theta(), sino.extent(), std::move(v));
}

RcdtRep rcdt_forward(const Image2D& img, std::size_t m, std::size_t n_theta, std::size_t n_t) {
  for (double v : img.values()) {
    require(v >= 0.0, "negative image: rcdt_forward expects a probability density");
  }
  require(img.mass() > kZeroMassThreshold, "degenerate measure: zero total mass");
  const Sinogram sino = radon_forward(img, resolve_n_t(n_t, img.width(), img.height()), n_theta);
  return rcdt_from_sinogram(sino, m);
}

Sinogram rcdt_to_sinogram(const RcdtRep& rep, std::size_t n_t) {
  require(n_t >= 2, "n_t must be >= 2");
  Sinogram sino(n_t, rep.n_theta(), rep.extent());
  const Grid1D tg = sino.t_grid();
  const double scale = std::max(1.0, rep.extent());
  for (std::size_t a = 0; a < rep.n_theta(); ++a) {
    require(is_nondecreasing(rep.column(a), 1e-12 * scale),
            "RCDT rep is not monotone at angle " + std::to_string(a));
  }
  detail::parallel_for(rep.n_theta(), [&](std::size_t a) {
    const Density1D d = cdt_inverse(CdtRep{rep.column_rep(a)}, tg);
    std::copy(d.values().begin(), d.values().end(), sino.column(a).begin());
  });
  return sino;
}

Image2D rcdt_inverse(const RcdtRep& rep, std::size_t width, std::size_t height, std::size_t n_t,
                     const FbpOptions& options, Warnings* warnings) {
  const Sinogram sino = rcdt_to_sinogram(rep, resolve_n_t(n_t, width, height));
  return radon_inverse(sino, width, height, options, warnings);
}

double d_rcdt(const RcdtRep& r1, const RcdtRep& r2) {
  require(r1.m() == r2.m() && r1.n_theta() == r2.n_theta(), "RCDT reps have different shapes");
  double s = 0.0;
  for (std::size_t k = 0; k < r1.values().size(); ++k) {
    const double d = r1.values()[k] - r2.values()[k];
    s += d * d;
  }
  return std::sqrt(s / static_cast<double>(r1.values().size()));
}

RcdtRep rcdt_apply_map(const SliceMap& g, const RcdtRep& rep) {
  require(g.n_theta() == rep.n_theta(), "slice map and rep have different angle counts");
  require(g.extent() == rep.extent(), "slice map and rep have different extents");
  const Grid1D tg = g.t_grid();
  std::vector<double> v(rep.values().size());
  for (std::size_t a = 0; a < rep.n_theta(); ++a) {
    const auto T = g.column(a);
    const auto q = rep.column(a);
    for (std::size_t j = 0; j < rep.m(); ++j) {
      const std::size_t k = tg.cell_of(q[j]);
      const double w = (q[j] - tg.node(k)) / tg.spacing();
      v[a * rep.m() + j] = T[k] + w * (T[k + 1] - T[k]);
    }
  }
  return RcdtRep(rep.m(), rep.n_theta(), rep.extent(), std::move(v));
}

Sinogram slice_pushforward(const SliceMap& T, const Sinogram& sino) {
  require(T.n_t() == sino.n_t() && T.n_theta() == sino.n_theta(),
          "slice map and sinogram have different shapes");
  Sinogram out(sino.n_t(), sino.n_theta(), sino.extent());
  const Grid1D tg = sino.t_grid();
  detail::parallel_for(sino.n_theta(), [&](std::size_t a) {
    const auto col = sino.column(a);
    const JordanParts parts =
        jordan_split(SignedDensity1D(tg, std::vector<double>(col.begin(), col.end())));
    const Density1D p = pushforward_monotone(T.column(a), parts.plus);
    const Density1D n = pushforward_monotone(T.column(a), parts.minus);
    auto dst = out.column(a);
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = p[i] - n[i];
  });
  return out;
}

RscdtRep rscdt_from_sinogram(const Sinogram& sino, std::size_t m) {
  require(m >= 1, "m must be positive");
  RscdtRep rep;
  rep.n_t = sino.n_t();
  rep.extent = sino.extent();
  rep.slices.resize(sino.n_theta());
  const Grid1D tg = sino.t_grid();
  detail::parallel_for(sino.n_theta(), [&](std::size_t a) {
    const auto col = sino.column(a);
    rep.slices[a] = scdt_forward(SignedDensity1D(tg, std::vector<double>(col.begin(), col.end())), m);
  });
  return rep;
}

RscdtRep rscdt_forward(const Image2D& img, std::size_t m, std::size_t n_theta, std::size_t n_t) {
  return rscdt_from_sinogram(
      radon_forward(img, resolve_n_t(n_t, img.width(), img.height()), n_theta), m);
}

RscdtRep rscdt_from_rcdt(const RcdtRep& rep, std::size_t n_t) {
  RscdtRep out;
  out.n_t = n_t;
  out.extent = rep.extent();
  out.slices.resize(rep.n_theta());
  for (std::size_t a = 0; a < rep.n_theta(); ++a) {
    ScdtRep& s = out.slices[a];
    s.m = rep.m();
    s.lo = -rep.extent();
    s.hi = rep.extent();
    s.plus = rep.column_rep(a);
    s.mass_plus = 1.0;
  }
  return out;
}

Sinogram rscdt_to_sinogram(const RscdtRep& rep, Warnings* warnings) {
  require(rep.n_theta() >= 1, "RSCDT rep has no angles");
  Sinogram sino(rep.n_t, rep.n_theta(), rep.extent);
  const Grid1D tg = sino.t_grid();
  std::vector<Warnings> per_angle(rep.n_theta());
  detail::parallel_for(rep.n_theta(), [&](std::size_t a) {
    const SignedDensity1D col = scdt_inverse(rep.slices[a], tg, &per_angle[a]);
    std::copy(col.values().begin(), col.values().end(), sino.column(a).begin());
  });
  for (std::size_t a = 0; a < per_angle.size(); ++a) {
    for (auto& w : per_angle[a]) warn(warnings, "angle " + std::to_string(a) + ": " + w);
  }
  return sino;
}

Image2D rscdt_inverse(const RscdtRep& rep, std::size_t width, std::size_t height,
                      const FbpOptions& options, Warnings* warnings) {
  return radon_inverse(rscdt_to_sinogram(rep, warnings), width, height, options, warnings);
}

double d_rscdt(const RscdtRep& r1, const RscdtRep& r2) {
  require(r1.n_theta() == r2.n_theta() && r1.m() == r2.m(), "RSCDT reps have different shapes");
  require(r1.n_theta() >= 1, "RSCDT rep has no angles");
  double s = 0.0;
  for (std::size_t a = 0; a < r1.n_theta(); ++a) {
    const double d = d_scdt(r1.slices[a], r2.slices[a]);
    s += d * d;
  }
  return std::sqrt(s / static_cast<double>(r1.n_theta()));
}

double d_rcdt_with_reference(const Sinogram& s1, const Sinogram& s2, const Sinogram& reference,
                             std::size_t subdivisions) {
  require(s1.n_theta() == s2.n_theta() && s1.n_theta() == reference.n_theta(),
          "sinograms have different angle counts");
  const std::size_t n = s1.n_theta();
  std::vector<double> per_angle(n);
  detail::parallel_for(n, [&](std::size_t a) {
    const Cdf1D c1 = cdf_from_density(normalize(column_density(s1, a)));
    const Cdf1D c2 = cdf_from_density(normalize(column_density(s2, a)));
    const double d = d_cdt_with_reference(c1, c2, normalize(column_density(reference, a)),
                                          subdivisions);
    per_angle[a] = d * d;
  });
  double s = 0.0;
  for (double v : per_angle) s += v;
  return std::sqrt(s / static_cast<double>(n));
}

}  // namespace ottk
