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

// Signed CDT: the Jordan parts of a signed density are normalized and
// transformed separately, and their masses kept alongside.

#pragma once

#include <cstddef>
#include <optional>

#include "ottk/cdt.hpp"
#include "ottk/error.hpp"
#include "ottk/measures1d.hpp"

namespace ottk {

/// (q+, |f+|, q-, |f-|). An empty optional is the zero marker: the part has
/// no mass and contributes the identically-zero function.
struct ScdtRep {
  std::size_t m = 0;
  double lo = 0.0;
  double hi = 1.0;
  std::optional<QuantileRep> plus;
  double mass_plus = 0.0;
  std::optional<QuantileRep> minus;
  double mass_minus = 0.0;

  bool is_zero() const { return !plus && !minus; }
  bool is_positive() const { return plus.has_value() && !minus; }
};

ScdtRep scdt_forward(const SignedDensity1D& f, std::size_t m);

/// m+ q+_# L - m- q-_# L on `out`. Reconstructed parts that overlap by more
/// than 1e-6 in mass are reported through `warnings`.
SignedDensity1D scdt_inverse(const ScdtRep& rep, const Grid1D& out, Warnings* warnings = nullptr);

double d_scdt(const ScdtRep& r1, const ScdtRep& r2);

/// Geodesic in transform space between positive reps: masses and normalized
/// quantiles interpolate linearly.
ScdtRep scdt_interpolate_positive(const ScdtRep& r1, const ScdtRep& r2, double t);
SignedDensity1D scdt_geodesic_positive(const SignedDensity1D& f1, const SignedDensity1D& f2,
                                       double t, std::size_t m, const Grid1D& out);

/// Mass shared by the positive and negative reconstructions, used to detect
/// reps outside the transform range.
double scdt_overlap_mass(const ScdtRep& rep, const Grid1D& out);

inline constexpr double kOverlapTolerance = 1e-6;

}  // namespace ottk
