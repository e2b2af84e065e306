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

#include "ottk/apps.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ottk/error.hpp"

namespace ottk {
namespace {

std::size_t common_dim(std::span<const Vector> data) {
  require(!data.empty(), "empty dataset");
  const std::size_t d = data.front().size();
  require(d >= 1, "dataset vectors are empty");
  for (const auto& v : data) require(v.size() == d, "dataset vectors have different lengths");
  return d;
}

Vector mean_of(std::span<const Vector> data, std::span<const std::size_t> idx) {
  Vector m(data[idx.front()].size(), 0.0);
  for (std::size_t i : idx) {
    for (std::size_t k = 0; k < m.size(); ++k) m[k] += data[i][k];
  }
  for (double& x : m) x /= static_cast<double>(idx.size());
  return m;
}

// Rows are the centered samples. Returns up to `keep` principal directions
// (unit-norm columns) with eigenvalues of X^T X / scale, largest first.
// Directions with variance below 1e-12 of the trace are dropped.
void principal_directions(const Matrix& x, double scale, std::size_t keep, Matrix& dirs,
                          std::vector<double>& values) {
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  std::vector<double> ev;
  std::vector<Vector> cols;
  double trace = 0.0;
  for (double v : x.data()) trace += v * v;
  trace /= scale;
  const double floor = 1e-12 * std::max(trace, 1e-300);
  if (d <= n) {
    Matrix s = x.transposed() * x;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) s(i, j) /= scale;
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) s(i, j) = s(j, i) = 0.5 * (s(i, j) + s(j, i));
    }
    const auto eig = sym_eig(s);
    for (std::size_t k = 0; k < d && cols.size() < keep; ++k) {
      if (eig.values[k] <= floor) break;
      ev.push_back(eig.values[k]);
      cols.push_back(eig.vectors.col(k));
    }
  } else {
    // Gram route: X X^T w = lambda w gives X^T w / |X^T w| as a direction.
    Matrix g = x * x.transposed();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g(i, j) /= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i) = 0.5 * (g(i, j) + g(j, i));
    }
    const auto eig = sym_eig(g);
    const Matrix xt = x.transposed();
    for (std::size_t k = 0; k < n && cols.size() < keep; ++k) {
      if (eig.values[k] <= floor) break;
      Vector u = xt * eig.vectors.col(k);
      const double nu = norm2(u);
      for (double& v : u) v /= nu;
      // same sign convention as sym_eig
      for (double v : u) {
        if (std::abs(v) > 1e-12) {
          if (v < 0) {
            for (double& w : u) w = -w;
          }
          break;
        }
      }
      ev.push_back(eig.values[k]);
      cols.push_back(std::move(u));
    }
  }
  dirs = Matrix(d, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (std::size_t i = 0; i < d; ++i) dirs(i, k) = cols[k][i];
  }
  values = std::move(ev);
}

Matrix centered_rows(std::span<const Vector> data, std::span<const std::size_t> idx,
                     const Vector& mean) {
  Matrix x(idx.size(), mean.size());
  for (std::size_t r = 0; r < idx.size(); ++r) {
    for (std::size_t k = 0; k < mean.size(); ++k) x(r, k) = data[idx[r]][k] - mean[k];
  }
  return x;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return idx;
}

}  // namespace

EstimationResult estimate_affine(const CdtRep& tmpl, const CdtRep& observed) {
  require(tmpl.m() == observed.m(), "quantile reps have different m");
  const auto x = tmpl.q.values();
  const auto y = observed.q.values();
  const AffineFit fit = lstsq_affine(x, y);
  require(fit.a > 0.0, "orientation-reversing fit");
  EstimationResult r;
  r.a = fit.a;
  r.b = fit.b;
  r.omega = 1.0 / fit.a;
  r.tau = fit.b / fit.a;
  r.residual = std::sqrt(fit.residual / static_cast<double>(x.size()));
  // Normal equations: sum r_i = 0 and sum r_i x_i = 0 at the optimum.
  double g0 = 0.0;
  double g1 = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double ri = fit.a * x[i] + fit.b - y[i];
    g0 += ri;
    g1 += ri * x[i];
    scale += std::abs(y[i]) * (1.0 + std::abs(x[i]));
  }
  r.normal_residual = std::max(std::abs(g0), std::abs(g1)) / std::max(scale, 1e-300);
  return r;
}

EstimationResult estimate_affine(const Density1D& tmpl, const Density1D& observed, std::size_t m) {
  return estimate_affine(cdt_forward(normalize(tmpl), m), cdt_forward(normalize(observed), m));
}

SubspaceModel fit_nearest_subspace(std::span<const Vector> samples, std::span<const int> labels,
                                   std::size_t dim) {
  require(samples.size() == labels.size(), "samples and labels differ in length");
  common_dim(samples);
  std::map<int, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i) by_label[labels[i]].push_back(i);
  SubspaceModel model;
  model.dim = dim;
  for (const auto& [label, idx] : by_label) {
    require(idx.size() >= dim + 1, "too few samples for class " + std::to_string(label) +
                                       ": need at least dim + 1");
    SubspaceClass c;
    c.label = label;
    c.mean = mean_of(samples, idx);
    std::vector<double> values;
    principal_directions(centered_rows(samples, idx, c.mean), static_cast<double>(idx.size()),
                         dim, c.basis, values);
    model.classes.push_back(std::move(c));
  }
  return model;
}

std::vector<double> subspace_residuals(const SubspaceModel& model, std::span<const double> x) {
  require(!model.classes.empty(), "subspace model has no classes");
  std::vector<double> out;
  for (const auto& c : model.classes) {
    require(x.size() == c.mean.size(), "sample dimension does not match the model");
    Vector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - c.mean[i];
    for (std::size_t k = 0; k < c.basis.cols(); ++k) {
      const Vector u = c.basis.col(k);
      const double p = dot(u, r);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= p * u[i];
    }
    out.push_back(norm2(r));
  }
  return out;
}

int classify(const SubspaceModel& model, std::span<const double> x) {
  const auto res = subspace_residuals(model, x);
  std::size_t best = 0;
  for (std::size_t k = 1; k < res.size(); ++k) {
    if (res[k] < res[best]) best = k;
  }
  return model.classes[best].label;
}

TbmModel tbm_pca(std::span<const Vector> data, std::size_t num_modes) {
  const std::size_t d = common_dim(data);
  require(data.size() >= 2, "tbm_pca needs at least two samples");
  require(num_modes < data.size(), "number of modes must be smaller than the number of samples");
  const auto idx = all_indices(data.size());
  TbmModel model;
  model.kind = TbmKind::kPca;
  model.mean = mean_of(data, idx);
  const Matrix x = centered_rows(data, idx, model.mean);
  double trace = 0.0;
  for (double v : x.data()) trace += v * v;
  model.total_variance = trace / static_cast<double>(data.size());
  principal_directions(x, static_cast<double>(data.size()), num_modes, model.modes,
                       model.eigenvalues);
  if (model.eigenvalues.empty()) model.modes = Matrix(d, 0);
  return model;
}

TbmModel tbm_plda(std::span<const Vector> data, std::span<const int> labels, double gamma,
                  std::size_t num_modes) {
  const std::size_t d = common_dim(data);
  require(data.size() == labels.size(), "samples and labels differ in length");
  require(gamma > 0.0, "PLDA needs gamma > 0");
  std::map<int, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i) by_label[labels[i]].push_back(i);
  require(by_label.size() >= 2, "PLDA needs at least two classes");
  require(num_modes < data.size(), "number of modes must be smaller than the number of samples");
  const auto n = static_cast<double>(data.size());
  const auto idx = all_indices(data.size());

  TbmModel model;
  model.kind = TbmKind::kPlda;
  model.gamma = gamma;
  model.mean = mean_of(data, idx);

  // Within-class residual rows and total centered rows.
  Matrix xt = centered_rows(data, idx, model.mean);
  Matrix xw(data.size(), d);
  for (const auto& [label, members] : by_label) {
    const Vector mc = mean_of(data, members);
    for (std::size_t i : members) {
      for (std::size_t k = 0; k < d; ++k) xw(i, k) = data[i][k] - mc[k];
    }
  }
  double trace = 0.0;
  for (double v : xt.data()) trace += v * v;
  model.total_variance = trace / n;

  // Both scatter matrices live in the span of the centered samples; eigenpairs
  // with lambda != 0 lie there too, so solve in an orthonormal basis of it.
  Matrix basis;
  if (d <= data.size()) {
    basis = Matrix::identity(d);
  } else {
    std::vector<double> values;
    principal_directions(xt, n, data.size(), basis, values);
  }
  const std::size_t r = basis.cols();
  require(r >= 1, "PLDA: dataset has no variance");
  const Matrix pt = xt * basis;  // N x r
  const Matrix pw = xw * basis;
  Matrix s = pt.transposed() * pt;
  Matrix b = pw.transposed() * pw;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      s(i, j) /= n;
      b(i, j) /= n;
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      s(i, j) = s(j, i) = 0.5 * (s(i, j) + s(j, i));
      b(i, j) = b(j, i) = 0.5 * (b(i, j) + b(j, i));
    }
    b(i, i) += gamma;
  }
  const auto eig = gen_eig(s, b);
  const std::size_t keep = std::min(num_modes, r);
  model.modes = Matrix(d, keep);
  for (std::size_t k = 0; k < keep; ++k) {
    Vector u = basis * eig.vectors.col(k);
    const double nu = norm2(u);
    for (std::size_t i = 0; i < d; ++i) model.modes(i, k) = u[i] / nu;
    model.eigenvalues.push_back(eig.values[k]);
  }
  return model;
}

Vector mode_point(const TbmModel& model, std::size_t k, double alpha) {
  require(k < model.num_modes(), "mode index out of range");
  Vector p = model.mean;
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += alpha * model.modes(i, k);
  return p;
}

std::vector<ModeSignal> visualize_mode_cdt(const TbmModel& model, std::size_t k,
                                           std::span<const double> alphas, const Grid1D& out) {
  std::vector<ModeSignal> result;
  for (double alpha : alphas) {
    ModeSignal s;
    s.alpha = alpha;
    Vector p = mode_point(model, k, alpha);
    s.in_range = is_nondecreasing(p);
    if (s.in_range) {
      s.signal = cdt_inverse(CdtRep{QuantileRep(out.lo(), out.hi(), std::move(p))}, out);
    }
    result.push_back(std::move(s));
  }
  return result;
}

std::vector<ModeImage> visualize_mode_rcdt(const TbmModel& model, std::size_t k,
                                           std::span<const double> alphas, std::size_t n_theta,
                                           double extent, std::size_t width, std::size_t height) {
  require(n_theta >= 1 && model.dim() % n_theta == 0, "model dimension is not m * n_theta");
  const std::size_t m = model.dim() / n_theta;
  std::vector<ModeImage> result;
  for (double alpha : alphas) {
    ModeImage s;
    s.alpha = alpha;
    Vector p = mode_point(model, k, alpha);
    s.in_range = true;
    for (std::size_t a = 0; a < n_theta && s.in_range; ++a) {
      s.in_range = is_nondecreasing(std::span<const double>(p).subspan(a * m, m));
    }
    if (s.in_range) {
      s.image = rcdt_inverse(RcdtRep(m, n_theta, extent, std::move(p)), width, height);
    }
    result.push_back(std::move(s));
  }
  return result;
}

std::string to_string(TbmKind kind) { return kind == TbmKind::kPca ? "pca" : "plda"; }

}  // namespace ottk
