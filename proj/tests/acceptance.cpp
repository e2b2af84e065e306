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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ottk/apps.hpp"
#include "ottk/cdt.hpp"
#include "ottk/error.hpp"
#include "ottk/ot_exact.hpp"
#include "ottk/radon.hpp"
#include "ottk/rcdt.hpp"
#include "ottk/scdt.hpp"
#include "ottk/synth.hpp"

using namespace ottk;

namespace {

constexpr std::uint64_t kSeed = 20260114;

struct Clock {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s  [%2d] %-34s %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

DiscreteMeasure equal_cloud(std::size_t n, std::size_t dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(n * dim);
  for (auto& v : x) v = u(rng);
  return DiscreteMeasure(dim, x, std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DiscreteMeasure weighted_cloud(std::size_t n, std::size_t dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(n * dim);
  for (auto& v : x) v = u(rng);
  return DiscreteMeasure(dim, x, oracle::random_weights(n, rng));
}

Density1D density_fn(const Grid1D& g, const std::function<double(double)>& f) {
  std::vector<double> v(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) v[k] = f(g.node(k));
  return normalize(Density1D(g, v));
}

Density1D gaussian(const Grid1D& g, double mu, double s) {
  return density_fn(g, [=](double x) { return std::exp(-0.5 * (x - mu) * (x - mu) / (s * s)); });
}

SignedDensity1D signed_fn(const Grid1D& g, const std::function<double(double)>& f) {
  std::vector<double> v(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) v[k] = f(g.node(k));
  return SignedDensity1D(g, v);
}

SignedDensity1D indicator_pair(const Grid1D& g, double sign) {
  return signed_fn(g, [=](double x) { return sign * (x < 0.0 ? 1.0 : -1.0); });
}

std::vector<double> vec(std::span<const double> s) { return {s.begin(), s.end()}; }

bool unimodal(std::span<const double> v, double slack) {
  std::size_t k = 0;
  while (k + 1 < v.size() && v[k + 1] >= v[k] - slack) ++k;
  while (k + 1 < v.size() && v[k + 1] <= v[k] + slack) ++k;
  return k + 1 == v.size();
}

double rel_l2(const Image2D& a, const Image2D& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < a.values().size(); ++k) {
    num += std::pow(a.values()[k] - b.values()[k], 2);
    den += std::pow(b.values()[k], 2);
  }
  return std::sqrt(num / den);
}

Image2D positive_part(const Image2D& img) {
  Image2D out = img;
  for (double& v : out.values()) v = std::max(v, 0.0);
  return out;
}

double max_dev(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

Vector as_vector(const CdtRep& r) { return vec(r.q.values()); }

// 1. Midpoint d_cdt on atomic measures against the LP optimum.
void criterion_1() {
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<int> count(1, 20);
  std::uniform_real_distribution<double> pos(-1.0, 1.0);
  auto draw = [&]() {
    const std::size_t n = static_cast<std::size_t>(count(rng));
    const auto w = oracle::random_weights(n, rng);
    std::vector<Atom1D> atoms(n);
    for (std::size_t i = 0; i < n; ++i) atoms[i] = {pos(rng), w[i]};
    return DiscreteMeasure1D(atoms);
  };
  const Clock clock;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const DiscreteMeasure1D mu = draw(), nu = draw();
    const double lp =
        std::sqrt(solve_kantorovich(DiscreteMeasure::from_1d(mu), DiscreteMeasure::from_1d(nu)).cost);
    const double d = d_cdt(cdt_forward(mu, 4096), cdt_forward(nu, 4096));
    worst = std::max(worst, std::abs(d - lp));
  }
  const double secs = clock.seconds();
  report(1, "1D CDT distance equals W2", worst <= 1e-4 && secs < 30.0,
         fmt("max |d_cdt - W2_LP| = %.3e (tol 1e-4), %.2f s (limit 30 s)", worst, secs));
}

// 2. Exact solver against permutation brute force, and the split delta.
void criterion_2() {
  std::mt19937_64 rng(kSeed + 2);
  double worst = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial) % 5;
    const std::size_t dim = 1 + static_cast<std::size_t>(trial) % 2;
    const DiscreteMeasure a = equal_cloud(n, dim, rng), b = equal_cloud(n, dim, rng);
    const auto ca = vec(a.coords()), cb = vec(b.coords());
    const double brute = oracle::permutation_cost(ca, cb, dim);
    worst = std::max(worst, std::abs(solve_kantorovich(a, b).cost - brute));
  }
  const DiscreteMeasure delta(1, {0.0}, {1.0});
  const DiscreteMeasure split(1, {-1.0, 1.0}, {0.5, 0.5});
  const TransportPlan p = solve_kantorovich(delta, split);
  const double w2 = std::sqrt(p.cost);
  const bool ok = worst <= 1e-9 && std::abs(w2 - 1.0) <= 1e-12 &&
                  std::abs(p.mass(0, 0) - 0.5) <= 1e-12 && std::abs(p.mass(0, 1) - 0.5) <= 1e-12;
  report(2, "Exact OT matches brute force", ok,
         fmt("max |cost - brute| = %.3e (tol 1e-9), split delta W2 = %.15g", worst, w2));
}

// 3. LOT: distance to the reference and the lower bound.
void criterion_3() {
  std::mt19937_64 rng(kSeed + 3);
  double worst_id = 0.0, worst_gap = 1e300;
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial) % 6;
    const DiscreteMeasure ref = equal_cloud(n, 2, rng);
    const DiscreteMeasure a = equal_cloud(n, 2, rng), b = equal_cloud(n, 2, rng);
    const LotEmbedding ea = lot_embed(a, ref), eb = lot_embed(b, ref);
    worst_id = std::max(worst_id, std::abs(d_lot(lot_identity(ref), ea) -
                                           std::sqrt(solve_kantorovich(ref, a).cost)));
    worst_gap = std::min(worst_gap, d_lot(ea, eb) - std::sqrt(solve_kantorovich(a, b).cost));
  }
  report(3, "LOT reference distance and bound", worst_id <= 1e-6 && worst_gap >= -1e-9,
         fmt("max |d_lot(id,nu) - W2| = %.3e (tol 1e-6), min d_lot - W2 = %.3e (>= -1e-9)",
             worst_id, worst_gap));
}

// 4. Geodesics have constant speed; Gaussian interpolation stays unimodal.
void criterion_4() {
  const double ts[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::mt19937_64 rng(kSeed + 4);

  double lot2 = 0.0;
  {
    const DiscreteMeasure ref = weighted_cloud(8, 2, rng);
    const LotEmbedding e1 = lot_embed(weighted_cloud(7, 2, rng), ref);
    const LotEmbedding e2 = lot_embed(weighted_cloud(9, 2, rng), ref);
    const double total = d_lot(e1, e2);
    for (double s : ts) {
      for (double t : ts) {
        lot2 = std::max(lot2, std::abs(d_lot(lot_interpolate(e1, e2, s), lot_interpolate(e1, e2, t)) -
                                       std::abs(s - t) * total));
      }
    }
  }
  // 1D: geodesic measures re-embedded against the reference.
  double lot1 = 0.0;
  {
    const DiscreteMeasure ref = weighted_cloud(10, 1, rng);
    const LotEmbedding e1 = lot_embed(weighted_cloud(6, 1, rng), ref);
    const LotEmbedding e2 = lot_embed(weighted_cloud(8, 1, rng), ref);
    const double total = d_lot(e1, e2);
    for (double s : ts) {
      for (double t : ts) {
        const LotEmbedding a = lot_embed(lot_geodesic(e1, e2, s), ref);
        const LotEmbedding b = lot_embed(lot_geodesic(e1, e2, t), ref);
        lot1 = std::max(lot1, std::abs(d_lot(a, b) - std::abs(s - t) * total));
      }
    }
  }
  // CDT through reconstructed densities.
  double cdt = 0.0;
  {
    const Grid1D g(-4.0, 4.0, 20001);
    const CdtRep r1 = cdt_forward(gaussian(g, -1.5, 0.3), 1024);
    const CdtRep r2 = cdt_forward(gaussian(g, 1.2, 0.7), 1024);
    const double total = d_cdt(r1, r2);
    std::vector<CdtRep> reps;
    for (double t : ts) reps.push_back(cdt_forward(cdt_geodesic(r1, r2, t, g), 1024));
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        cdt = std::max(cdt, std::abs(d_cdt(reps[i], reps[j]) - std::abs(ts[i] - ts[j]) * total));
      }
    }
  }
  double scdt = 0.0;
  {
    const Grid1D g(-4.0, 4.0, 16001);
    const SignedDensity1D f1 = signed_fn(g, [](double x) { return std::exp(-2.0 * (x + 1) * (x + 1)); });
    const SignedDensity1D f2 = signed_fn(g, [](double x) { return 3.0 * std::exp(-(x - 1.5) * (x - 1.5)); });
    const ScdtRep r1 = scdt_forward(f1, 1024), r2 = scdt_forward(f2, 1024);
    const double total = d_scdt(r1, r2);
    std::vector<ScdtRep> reps;
    for (double t : ts) reps.push_back(scdt_forward(scdt_geodesic_positive(f1, f2, t, 1024, g), 1024));
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        scdt = std::max(scdt, std::abs(d_scdt(reps[i], reps[j]) - std::abs(ts[i] - ts[j]) * total));
      }
    }
  }
  bool modal = true;
  {
    const Grid1D g = synth::default_signal_grid();
    const auto [f1, f2] = synth::gaussian_pair(g);
    const CdtRep r1 = cdt_forward(f1, 256), r2 = cdt_forward(f2, 256);
    for (int i = 0; i <= 10; ++i) {
      const Density1D rho = cdt_geodesic(r1, r2, i / 10.0, g);
      const double peak = *std::max_element(rho.values().begin(), rho.values().end());
      modal = modal && unimodal(rho.values(), 1e-3 * peak);
    }
  }
  const double worst = std::max({lot2, lot1, cdt, scdt});
  report(4, "Geodesics have constant speed", worst <= 1e-6 && modal,
         fmt("speed err LOT2D %.1e, LOT1D %.1e, CDT %.1e, SCDT %.1e (tol 1e-6)", lot2, lot1, cdt,
             scdt) +
             (modal ? ", gaussian path unimodal" : ", gaussian path NOT unimodal"));
}

// 5. Composition with diffeomorphisms acts on the representation.
void criterion_5() {
  std::mt19937_64 rng(kSeed + 5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double cdt_ratio = 0.0;
  {
    const Grid1D g(-1.0, 1.0, 801);
    for (int trial = 0; trial < 100; ++trial) {
      const double c3 = 0.05 + u(rng), c1 = 0.2 + u(rng), c0 = u(rng) - 0.5;
      auto gf = [=](double x) { return c0 + c1 * x + c3 * x * x * x; };
      const MonotoneMap map = MonotoneMap::from_function(g, gf);
      const double mu = u(rng) - 0.5, s = 0.1 + 0.3 * u(rng);
      const Density1D f = gaussian(g, mu, s);
      const Grid1D out(gf(-1.0), gf(1.0), 1601);
      const CdtRep lhs = cdt_forward(pushforward_monotone(map.values(), f, out), 256);
      const CdtRep rhs = cdt_apply_map(map, cdt_forward(f, 256));
      cdt_ratio = std::max(cdt_ratio, max_dev(lhs.q.values(), rhs.q.values()) / out.spacing());
    }
  }
  const std::size_t n = 128, na = 180;
  const double cell = 2.0 / static_cast<double>(n);
  // Translation and dilation of analytic blobs.
  double rules = 0.0;
  {
    const RcdtRep base = rcdt_forward(synth::gaussian_blob(n, n, 1.0, 0.0, 0.0, 0.15), 256, na);
    const auto th = angle_grid(na);
    for (int trial = 0; trial < 3; ++trial) {
      const double b1 = 0.4 * (u(rng) - 0.5), b2 = 0.4 * (u(rng) - 0.5), a = 0.8 + 0.8 * u(rng);
      const RcdtRep moved = rcdt_forward(synth::gaussian_blob(n, n, 1.0, b1, b2, 0.15), 256, na);
      const RcdtRep scaled = rcdt_forward(synth::gaussian_blob(n, n, 1.0, 0.0, 0.0, 0.15 * a), 256, na);
      for (std::size_t k = 0; k < na; ++k) {
        const double shift = b1 * std::cos(th[k]) + b2 * std::sin(th[k]);
        for (std::size_t j = 0; j < 256; ++j) {
          rules = std::max(rules, std::abs(moved.column(k)[j] - base.column(k)[j] - shift) / cell);
          rules = std::max(rules, std::abs(scaled.column(k)[j] - a * base.column(k)[j]) / cell);
        }
      }
    }
  }
  // Random per-angle maps applied to the sinogram.
  double per_angle = 0.0;
  {
    const Sinogram s = radon_forward(synth::smooth_phantom(n, n, 1.0), n + 1, 30);
    const RcdtRep r = rcdt_from_sinogram(s, 256);
    const Grid1D tg = s.t_grid();
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> v((n + 1) * 30);
      for (std::size_t k = 0; k < 30; ++k) {
        const double c1 = 0.6 + 0.4 * u(rng), c3 = 0.3 * u(rng), c0 = 0.1 * (u(rng) - 0.5);
        for (std::size_t i = 0; i <= n; ++i) {
          const double t = tg.node(i);
          v[k * (n + 1) + i] = c0 + c1 * t + c3 * t * t * t;
        }
      }
      const SliceMap g(n + 1, 30, 1.0, v);
      const RcdtRep lhs = rcdt_from_sinogram(slice_pushforward(g, s), 256);
      per_angle = std::max(per_angle, max_dev(lhs.values(), rcdt_apply_map(g, r).values()) / tg.spacing());
    }
  }
  // Affine maps realized as images through filtered backprojection.
  std::string image_route;
  double image_worst = 0.0;
  {
    const Image2D f = synth::gaussian_blob(n, n, 1.0, 0.05, -0.1, 0.12);
    const Sinogram s = radon_forward(f, n + 1, na);
    const RcdtRep r = rcdt_from_sinogram(s, 256);
    struct Case { double a, b1, b2; };
    for (const Case c : {Case{1.0, 0.2, 0.1}, Case{1.3, 0.0, 0.0}, Case{0.8, -0.1, 0.15}}) {
      const SliceMap g = SliceMap::affine(n + 1, na, 1.0, c.a, c.b1, c.b2);
      const Image2D fg =
          positive_part(radon_inverse(slice_pushforward(g, s), n, n, FbpOptions{FbpWindow::kHann}));
      const RcdtRep lhs = rcdt_forward(fg, 256, na), rhs = rcdt_apply_map(g, r);
      const double dev = max_dev(lhs.values(), rhs.values()) / cell;
      // Diagnostic only: the same deviation without the outer 2% of quantiles.
      double inner = 0.0;
      for (std::size_t k = 0; k < na; ++k) {
        inner = std::max(inner, max_dev(lhs.column(k).subspan(5, 246), rhs.column(k).subspan(5, 246)) / cell);
      }
      image_worst = std::max(image_worst, dev);
      image_route += fmt(" a=%.1f:%.2f[inner %.2f]", c.a, dev, inner);
    }
  }
  const bool ok = cdt_ratio <= 1.0 && rules <= 3.0 && per_angle <= 3.0 && image_worst <= 3.0;
  report(5, "Deformations act on the transform", ok,
         fmt("CDT %.2f cells (<=1), RCDT rules %.2f, per-angle %.2f cells (<=3), image route", cdt_ratio,
             rules, per_angle) +
             image_route + " cells (<=3)");
}

// 6. The RCDT distance is the sliced W2.
void criterion_6() {
  double worst = 0.0;
  for (std::uint64_t k = 0; k < 4; ++k) {
    const DiscreteMeasure mu = synth::random_cloud(8 + 2 * k, 0.5, kSeed + 60 + 2 * k);
    const DiscreteMeasure nu = synth::random_cloud(7 + 3 * k, 0.5, kSeed + 61 + 2 * k);
    const RcdtRep a = rcdt_forward(synth::rasterize(mu, 256, 256, 1.0), 256, 180);
    const RcdtRep b = rcdt_forward(synth::rasterize(nu, 256, 256, 1.0), 256, 180);
    worst = std::max(worst, std::abs(d_rcdt(a, b) - sw2_pointcloud(mu, nu, 180)));
  }
  const double b1 = 0.25, b2 = 0.1;
  const RcdtRep rf = rcdt_forward(synth::gaussian_blob(256, 256, 1.0, -0.1, 0.05, 0.15), 256, 180);
  const RcdtRep rg = rcdt_forward(synth::gaussian_blob(256, 256, 1.0, -0.1 + b1, 0.05 + b2, 0.15), 256, 180);
  const double tr = std::abs(d_rcdt(rf, rg) - std::hypot(b1, b2) / std::sqrt(2.0));
  report(6, "RCDT distance is sliced W2", worst <= 5e-2 && tr <= 2e-2,
         fmt("max |d_rcdt - SW2| = %.3e (tol 5e-2), translation err %.3e (tol 2e-2)", worst, tr));
}

// 7. The distance does not depend on the reference.
void criterion_7() {
  const Image2D f = synth::smooth_phantom(128, 128, 1.0);
  const Image2D g = synth::gaussian_blob(128, 128, 1.0, 0.2, -0.1, 0.2);
  const Sinogram sf = radon_forward(f, 129, 60), sg = radon_forward(g, 129, 60);
  const double direct = d_rcdt(rcdt_from_sinogram(sf, 1024), rcdt_from_sinogram(sg, 1024));
  const Sinogram refs[] = {
      radon_forward(synth::gaussian_blob(128, 128, 1.0, 0.0, 0.0, 0.3), 129, 60),
      radon_forward(synth::disc_phantom(128, 128, 1.0, 0.7, 0.1, 0.0), 129, 60),
      radon_forward(synth::gaussian_blob(128, 128, 1.0, -0.2, 0.3, 0.15), 129, 60)};
  double worst = 0.0;
  for (const Sinogram& r : refs) worst = std::max(worst, std::abs(d_rcdt_with_reference(sf, sg, r) - direct));
  report(7, "Reference independence", worst <= 1e-3,
         fmt("max |d_ref - d_direct| = %.3e over 3 references (tol 1e-3)", worst));
}

// 8. Round trips.
void criterion_8() {
  const Clock clock;
  double cdt = 0.0;
  {
    const Grid1D g(0.0, 1.0, 1024);
    const std::function<double(double)> fs[] = {
        [](double x) { return 1.0 + 0.5 * std::cos(5.0 * x) + x; },
        [](double x) { return 1.0 - std::abs(2.0 * x - 1.0) + 0.05; },
        [](double x) { return std::exp(-8.0 * (x - 0.3) * (x - 0.3)) + 0.5 * std::exp(-20.0 * (x - 0.75) * (x - 0.75)); }};
    for (const auto& fn : fs) {
      const Density1D f = density_fn(g, fn);
      cdt = std::max(cdt, l1_distance(cdt_inverse(cdt_forward(f, 1024), g).values(), f.values(), g));
    }
  }
  double scdt = 0.0;
  {
    const Grid1D g(-1.0, 1.0, 1024);
    const SignedDensity1D fs[] = {indicator_pair(g, 1.0),
                                  signed_fn(g, [](double x) { return std::sin(3.0 * x) + 0.3; })};
    for (const auto& f : fs) {
      const SignedDensity1D back = scdt_inverse(scdt_forward(f, 1024), g);
      scdt = std::max(scdt, l1_distance(back.values(), f.values(), g));
    }
  }
  const Image2D ph = synth::smooth_phantom(256, 256, 1.0);
  const double fbp = rel_l2(radon_inverse(radon_forward(ph, 257, 180), 256, 256), ph);
  const double rcdt = rel_l2(rcdt_inverse(rcdt_forward(ph, 512, 180), 256, 256), ph);
  const Image2D sb = synth::signed_two_bump(256, 256, 1.0);
  const double rscdt = rel_l2(rscdt_inverse(rscdt_forward(sb, 512, 180), 256, 256), sb);
  const double secs = clock.seconds();
  const bool ok = cdt <= 5e-3 && scdt <= 1e-2 && fbp <= 0.10 && rcdt <= 0.15 && rscdt <= 0.2 && secs < 300.0;
  report(8, "Inverse transforms round trip", ok,
         fmt("L1 CDT %.2e (5e-3), SCDT %.2e (1e-2); relL2 FBP %.3f (0.10),", cdt, scdt, fbp) +
             fmt(" RCDT %.3f (0.15), RSCDT %.3f (0.20); %.1f s", rcdt, rscdt, secs));
}

// 9. Dilation and translation estimation.
void criterion_9() {
  const Grid1D g = synth::default_signal_grid(8193);
  const auto tmpl = synth::standard_templates()[2];
  const Density1D f = synth::render(tmpl, g);
  double om = 0.0, ta = 0.0, nr = 0.0;
  for (double omega : {0.5, 1.0, 2.0, 3.0, 4.0}) {
    for (double tau : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      const auto r = estimate_affine(f, synth::render(tmpl, g, omega, tau), 1024);
      om = std::max(om, std::abs(r.omega - omega) / omega);
      ta = std::max(ta, std::abs(r.tau - tau) / std::max(1.0, std::abs(tau)));
      nr = std::max(nr, r.normal_residual);
    }
  }
  report(9, "Affine parameter estimation", om <= 0.01 && ta <= 0.01 && nr <= 1e-10,
         fmt("max rel err omega %.2e, tau %.2e (tol 1e-2), normal residual %.1e (1e-10)", om, ta, nr));
}

// 10. Nearest subspace classification.
void criterion_10() {
  const Grid1D g = synth::default_signal_grid(2049);
  const auto train = synth::bump_dataset(g, 20, kSeed + 10);
  const auto test = synth::bump_dataset(g, 100, kSeed + 11);
  std::vector<Vector> cx, rx;
  std::vector<int> ys;
  for (const auto& s : train) {
    cx.push_back(as_vector(cdt_forward(s.signal, 256)));
    rx.push_back(vec(s.signal.values()));
    ys.push_back(s.label);
  }
  const SubspaceModel cm = fit_nearest_subspace(cx, ys, 2);
  const SubspaceModel rm = fit_nearest_subspace(rx, ys, 2);
  std::size_t c_ok = 0, r_ok = 0;
  for (const auto& s : test) {
    c_ok += classify(cm, as_vector(cdt_forward(s.signal, 256))) == s.label;
    r_ok += classify(rm, vec(s.signal.values())) == s.label;
  }
  const double n = static_cast<double>(test.size());
  report(10, "Nearest subspace classification", c_ok == test.size() && r_ok < c_ok,
         fmt("%.0f draws: transform accuracy %.4f (need 1), raw %.4f (must be lower)", n, c_ok / n, r_ok / n));
}

// 11. PLDA limits and the translation mode.
void criterion_11() {
  std::mt19937_64 rng(kSeed + 12);
  std::normal_distribution<double> n01;
  const Vector shift{3.0, 1.0, 0.0, -1.0}, scale{2.0, 0.5, 1.0, 0.3};
  std::vector<Vector> data;
  std::vector<int> labels;
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < 200; ++i) {
      Vector v(4);
      for (std::size_t k = 0; k < 4; ++k) v[k] = scale[k] * n01(rng) + (c ? shift[k] : 0.0);
      v[1] += 0.4 * v[0];
      data.push_back(v);
      labels.push_back(c);
    }
  }
  Vector m0(4, 0.0), m1(4, 0.0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t k = 0; k < 4; ++k) (labels[i] ? m1 : m0)[k] += data[i][k] / 200.0;
  }
  std::vector<std::vector<double>> sw(4, std::vector<double>(4, 0.0));
  double tw = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const Vector& mc = labels[i] ? m1 : m0;
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) sw[a][b] += (data[i][a] - mc[a]) * (data[i][b] - mc[b]);
    }
  }
  for (std::size_t a = 0; a < 4; ++a) tw += sw[a][a] / static_cast<double>(data.size());
  Vector diff(4);
  for (std::size_t k = 0; k < 4; ++k) diff[k] = m1[k] - m0[k];
  const double pca_cos =
      std::abs(oracle::cosine(tbm_plda(data, labels, 1e6 * tw / 4.0, 1).mode(0), tbm_pca(data, 1).mode(0)));
  const double lda_cos =
      std::abs(oracle::cosine(tbm_plda(data, labels, 1e-8, 1).mode(0), oracle::solve(sw, diff)));

  const Grid1D g = synth::default_signal_grid(4097);
  const auto tmpl = synth::standard_templates()[0];
  std::vector<Vector> tr;
  for (int i = 0; i < 15; ++i) tr.push_back(as_vector(cdt_forward(synth::render(tmpl, g, 1.0, -1.0 + i / 7.0), 256)));
  const TbmModel model = tbm_pca(tr, 2);
  const double frac = model.eigenvalues[0] / model.total_variance;
  const double const_cos = std::abs(oracle::cosine(model.mode(0), Vector(256, 1.0)));
  const std::vector<double> alphas{-6.0, -3.0, 0.0, 3.0, 6.0};
  const auto sweep = visualize_mode_cdt(model, 0, alphas, g);
  const double dir = model.mode(0)[0] > 0 ? 1.0 : -1.0;
  bool monotone = true;
  double prev = -1e300;
  for (const auto& s : sweep) {
    if (!s.in_range) {
      monotone = false;
      break;
    }
    double c = 0.0, w = 0.0;
    for (std::size_t k = 0; k < g.cells(); ++k) {
      c += (*s.signal)[k] * g.cell_center(k);
      w += (*s.signal)[k];
    }
    monotone = monotone && dir * c / w > prev;
    prev = dir * c / w;
  }
  const bool ok = pca_cos >= 0.999 && lda_cos >= 0.99 && frac >= 0.999 && const_cos >= 0.999 && monotone;
  report(11, "PLDA limits and translation mode", ok,
         fmt("cos(PLDA,PCA) %.6f (0.999), cos(PLDA,LDA) %.6f (0.99), mode0 share %.6f, cos(mode0,1) %.6f",
             pca_cos, lda_cos, frac, const_cos) +
             (monotone ? ", sweep monotone" : ", sweep NOT monotone"));
}

// 12. Signed transform: guarded geodesic and the rigid counterexample.
void criterion_12() {
  const Grid1D g(-1.0, 1.0, 2001);
  std::string msg;
  try {
    scdt_geodesic_positive(indicator_pair(g, 1.0), indicator_pair(g, -1.0), 0.5, 64, g);
  } catch (const Error& e) {
    msg = e.what();
  }
  const bool guarded = msg.find("geodesic defined on M+ only") != std::string::npos;
  const double d = d_scdt(scdt_forward(indicator_pair(g, 1.0), 1024), scdt_forward(indicator_pair(g, -1.0), 1024));
  report(12, "Signed geodesic guard, d(f,-f)", guarded && std::abs(d - std::sqrt(2.0)) <= 1e-3,
         fmt("d_scdt(f,-f) = %.6f (sqrt2 +- 1e-3), ", d) +
             (guarded ? "signed geodesic refused" : "signed geodesic NOT refused"));
}

}  // namespace

int main() {
  const Clock clock;
  const std::function<void()> all[] = {criterion_1, criterion_2, criterion_3,  criterion_4,
                                       criterion_5, criterion_6, criterion_7,  criterion_8,
                                       criterion_9, criterion_10, criterion_11, criterion_12};
  int id = 1;
  for (const auto& c : all) {
    try {
      c();
    } catch (const std::exception& e) {
      report(id, "exception", false, e.what());
    }
    ++id;
  }
  std::printf("%d of 12 criteria failed, %.1f s\n", failures, clock.seconds());
  return failures == 0 ? 0 : 1;
}
