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

#include "ottk/scdt.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ottk/ot_exact.hpp"

namespace ottk {
namespace {

// Squared L2([0,1]) distance between two parts; a zero marker is the zero
// function.
double part_distance_sq(const std::optional<QuantileRep>& a, const std::optional<QuantileRep>& b) {
  if (!a && !b) return 0.0;
  if (a && b) {
    const double d = w2_1d(*a, *b);
    return d * d;
  }
  const QuantileRep& q = a ? *a : *b;
  double s = 0.0;
  for (double v : q.values()) s += v * v;
  return s / static_cast<double>(q.m());
}

std::vector<double> reconstruct(const std::optional<QuantileRep>& q, double mass,
                                const Grid1D& out) {
  if (!q) return std::vector<double>(out.size(), 0.0);
  const Density1D d = cdt_inverse(CdtRep{*q}, out);
  std::vector<double> v(d.values().begin(), d.values().end());
  for (double& x : v) x *= mass;
  return v;
}

}  // namespace

ScdtRep scdt_forward(const SignedDensity1D& f, std::size_t m) {
  require(m >= 1, "m must be positive");
  const JordanParts parts = jordan_split(f);
  ScdtRep rep;
  rep.m = m;
  rep.lo = f.grid().lo();
  rep.hi = f.grid().hi();
  if (parts.mass_plus > 0.0) {
    rep.plus = cdt_forward(normalize(parts.plus), m).q;
    rep.mass_plus = parts.mass_plus;
  }
  if (parts.mass_minus > 0.0) {
    rep.minus = cdt_forward(normalize(parts.minus), m).q;
    rep.mass_minus = parts.mass_minus;
  }
  return rep;
}

double scdt_overlap_mass(const ScdtRep& rep, const Grid1D& out) {
  if (!rep.plus || !rep.minus) return 0.0;
  const auto p = reconstruct(rep.plus, rep.mass_plus, out);
  const auto n = reconstruct(rep.minus, rep.mass_minus, out);
  double s = 0.0;
  for (std::size_t k = 0; k < out.cells(); ++k) s += std::min(p[k], n[k]);
  return s * out.spacing();
}

SignedDensity1D scdt_inverse(const ScdtRep& rep, const Grid1D& out, Warnings* warnings) {
  require(rep.mass_plus >= 0.0 && rep.mass_minus >= 0.0, "SCDT masses must be nonnegative");
  require(rep.plus.has_value() == (rep.mass_plus > 0.0) &&
              rep.minus.has_value() == (rep.mass_minus > 0.0),
          "SCDT zero marker must carry zero mass");
  const auto p = reconstruct(rep.plus, rep.mass_plus, out);
  const auto n = reconstruct(rep.minus, rep.mass_minus, out);
  std::vector<double> v(out.size());
  double overlap = 0.0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    v[k] = p[k] - n[k];
    if (k + 1 < out.size()) overlap += std::min(p[k], n[k]);
  }
  overlap *= out.spacing();
  if (overlap > kOverlapTolerance) {
    warn(warnings, "scdt_inverse: positive and negative parts overlap (mass " +
                       std::to_string(overlap) + "); rep is outside the transform range");
  }
  return SignedDensity1D(out, std::move(v));
}

double d_scdt(const ScdtRep& r1, const ScdtRep& r2) {
  require(r1.m == r2.m, "SCDT reps have different m");
  const double dp = r1.mass_plus - r2.mass_plus;
  const double dn = r1.mass_minus - r2.mass_minus;
  return std::sqrt(part_distance_sq(r1.plus, r2.plus) + part_distance_sq(r1.minus, r2.minus) +
                   dp * dp + dn * dn);
}

ScdtRep scdt_interpolate_positive(const ScdtRep& r1, const ScdtRep& r2, double t) {
  require(r1.is_positive() && r2.is_positive(), "geodesic defined on M+ only");
  require(r1.m == r2.m, "SCDT reps have different m");
  const CdtRep mid = cdt_interpolate(CdtRep{*r1.plus}, CdtRep{*r2.plus}, t);
  ScdtRep rep;
  rep.m = r1.m;
  rep.lo = std::min(r1.lo, r2.lo);
  rep.hi = std::max(r1.hi, r2.hi);
  rep.plus = mid.q;
  rep.mass_plus = (1.0 - t) * r1.mass_plus + t * r2.mass_plus;
  return rep;
}

SignedDensity1D scdt_geodesic_positive(const SignedDensity1D& f1, const SignedDensity1D& f2,
                                       double t, std::size_t m, const Grid1D& out) {
  return scdt_inverse(scdt_interpolate_positive(scdt_forward(f1, m), scdt_forward(f2, m), t), out);
}

}  // namespace ottk
