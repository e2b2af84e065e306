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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "oracles.hpp"
#include "ottk/error.hpp"
#include "ottk/kernels.hpp"
#include "ottk/ot_exact.hpp"
#include "ottk/radon.hpp"

namespace ottk {
namespace {

DiscreteMeasure uniform_cloud(std::size_t n, std::size_t dim, std::mt19937_64& rng) {
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

std::vector<double> to_vec(std::span<const double> s) { return {s.begin(), s.end()}; }

void expect_marginals(const TransportPlan& p, const DiscreteMeasure& a, const DiscreteMeasure& b) {
  const auto r = p.row_sums();
  const auto c = p.col_sums();
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(r[i], a.weights()[i], 1e-9);
  for (std::size_t j = 0; j < b.size(); ++j) EXPECT_NEAR(c[j], b.weights()[j], 1e-9);
  for (const auto& e : p.entries) EXPECT_GE(e.mass, 0.0);
}

TEST(Kantorovich, DeltaSplitsInHalf) {
  const DiscreteMeasure mu(1, {0.0}, {1.0});
  const DiscreteMeasure nu(1, {-1.0, 1.0}, {0.5, 0.5});
  const TransportPlan p = solve_kantorovich(mu, nu);
  EXPECT_NEAR(p.mass(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(p.mass(0, 1), 0.5, 1e-15);
  EXPECT_NEAR(p.cost, 1.0, 1e-15);
  EXPECT_EQ(std::sqrt(p.cost), 1.0);
}

TEST(Kantorovich, IdenticalMeasuresCostNothing) {
  std::mt19937_64 rng(4);
  const DiscreteMeasure mu = weighted_cloud(7, 2, rng);
  const TransportPlan p = solve_kantorovich(mu, mu);
  EXPECT_NEAR(p.cost, 0.0, 1e-15);
  for (const auto& e : p.entries) {
    if (e.mass > 1e-15) EXPECT_EQ(e.row, e.col);
  }
}

TEST(Kantorovich, MatchesPermutationBruteForce) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const std::size_t dim = 1 + trial % 2;
    const DiscreteMeasure mu = uniform_cloud(n, dim, rng);
    const DiscreteMeasure nu = uniform_cloud(n, dim, rng);
    const TransportPlan p = solve_kantorovich(mu, nu);
    EXPECT_NEAR(p.cost, oracle::permutation_cost(to_vec(mu.coords()), to_vec(nu.coords()), dim),
                1e-9);
    expect_marginals(p, mu, nu);
  }
}

TEST(Kantorovich, MarginalsOnUnequalSizes) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const DiscreteMeasure mu = weighted_cloud(3 + trial, 2, rng);
    const DiscreteMeasure nu = weighted_cloud(40 - trial, 2, rng);
    expect_marginals(solve_kantorovich(mu, nu), mu, nu);
  }
}

TEST(Kantorovich, RejectsBadInput) {
  const DiscreteMeasure mu(1, {0.0, 1.0}, {0.5, 0.6});
  const DiscreteMeasure nu(1, {0.0}, {1.0});
  EXPECT_THROW(solve_kantorovich(mu, nu), Error);
  const std::vector<double> a{0.5, 0.5}, b{0.3, 0.3};
  try {
    solve_transport(a, b, [](std::size_t, std::size_t) { return 1.0; });
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("infeasible"), std::string::npos);
  }
}

TEST(Kantorovich, GeneralCostMatchesBruteForce) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t n = 5;
  std::vector<double> c(n * n);
  for (auto& v : c) v = u(rng);
  const std::vector<double> w(n, 0.2);
  const TransportPlan p =
      solve_transport(w, w, [&](std::size_t i, std::size_t j) { return c[i * n + j]; });
  std::vector<std::size_t> perm{0, 1, 2, 3, 4};
  double best = 1e300;
  do {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += 0.2 * c[i * n + perm[i]];
    best = std::min(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_NEAR(p.cost, best, 1e-12);
}

TEST(W2OneD, ShiftAndDeltas) {
  const std::size_t m = 256;
  std::vector<double> a(m), b(m);
  for (std::size_t j = 0; j < m; ++j) {
    a[j] = QuantileRep::xi(j, m);
    b[j] = a[j] - 0.37;
  }
  EXPECT_NEAR(w2_1d(QuantileRep(0, 1, a), QuantileRep(-0.37, 0.63, b)), 0.37, 1e-14);
  const QuantileRep da(2.0, 2.0, std::vector<double>(m, 2.0));
  const QuantileRep db(-1.5, -1.5, std::vector<double>(m, -1.5));
  EXPECT_NEAR(w2_1d(da, db), 3.5, 1e-14);
  EXPECT_THROW(w2_1d(da, QuantileRep(0, 0, std::vector<double>(m + 1, 0.0))), Error);
}

TEST(W2OneD, MatchesLpOnDyadicWeights) {
  // Weights that are multiples of 1/m make the midpoint rule exact.
  std::mt19937_64 rng(12);
  const std::size_t m = 512;
  std::uniform_int_distribution<int> count(1, 40);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  auto draw = [&]() {
    std::vector<Atom1D> atoms;
    int left = static_cast<int>(m);
    while (left > 0) {
      const int c = std::min(left, count(rng));
      atoms.push_back({u(rng), static_cast<double>(c) / m});
      left -= c;
    }
    return DiscreteMeasure1D(atoms);
  };
  for (int trial = 0; trial < 20; ++trial) {
    const DiscreteMeasure1D mu = draw();
    const DiscreteMeasure1D nu = draw();
    const double lp =
        std::sqrt(solve_kantorovich(DiscreteMeasure::from_1d(mu), DiscreteMeasure::from_1d(nu))
                      .cost);
    EXPECT_NEAR(w2_1d(quantile_from_discrete(mu, m), quantile_from_discrete(nu, m)), lp, 1e-6);
    EXPECT_NEAR(w2_discrete_1d(mu, nu), lp, 1e-9);
  }
}

TEST(W2OneD, DiscreteMatchesStepOracle) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n1 = 1 + trial % 9, n2 = 1 + (trial * 7) % 11;
    const auto w1 = oracle::random_weights(n1, rng), w2 = oracle::random_weights(n2, rng);
    std::vector<Atom1D> a, b;
    std::vector<std::pair<double, double>> pa, pb;
    for (std::size_t i = 0; i < n1; ++i) {
      a.push_back({u(rng), w1[i]});
      pa.push_back({a.back().position, w1[i]});
    }
    for (std::size_t i = 0; i < n2; ++i) {
      b.push_back({u(rng), w2[i]});
      pb.push_back({b.back().position, w2[i]});
    }
    EXPECT_NEAR(w2_discrete_1d(DiscreteMeasure1D(a), DiscreteMeasure1D(b)),
                oracle::w2_steps(pa, pb), 1e-12);
  }
}

TEST(W2OneD, MetricAxioms) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t m = 300;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<QuantileRep> q;
    for (int k = 0; k < 3; ++k) {
      std::vector<double> v(m);
      double acc = u(rng);
      for (auto& x : v) x = (acc += u(rng) * 0.01);
      q.emplace_back(0.0, 10.0, v);
    }
    EXPECT_EQ(w2_1d(q[0], q[1]), w2_1d(q[1], q[0]));
    EXPECT_LE(w2_1d(q[0], q[2]), w2_1d(q[0], q[1]) + w2_1d(q[1], q[2]) + 1e-12);
  }
}

TEST(SlicedW2, BasicIdentities) {
  std::mt19937_64 rng(15);
  const DiscreteMeasure mu = weighted_cloud(12, 2, rng);
  EXPECT_NEAR(sw2_pointcloud(mu, mu, 180), 0.0, 1e-15);
  const double b1 = 0.3, b2 = -0.4;
  std::vector<double> x = to_vec(mu.coords());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    x[2 * i] += b1;
    x[2 * i + 1] += b2;
  }
  const DiscreteMeasure nu(2, x, to_vec(mu.weights()));
  // (1/pi) int <b, theta>^2 dtheta by Simpson.
  const double pi = std::acos(-1.0);
  const double want = std::sqrt(oracle::simpson(
      [&](double t) {
        const double d = b1 * std::cos(t) + b2 * std::sin(t);
        return d * d / pi;
      },
      0.0, pi));
  EXPECT_NEAR(want, std::hypot(b1, b2) / std::sqrt(2.0), 1e-10);
  EXPECT_NEAR(sw2_pointcloud(mu, nu, 720), want, 1e-3);
}

TEST(SlicedW2, SlicesMatchLpAndBoundedByW2) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    const DiscreteMeasure mu = weighted_cloud(5, 2, rng);
    const DiscreteMeasure nu = weighted_cloud(5, 2, rng);
    const auto thetas = angle_grid(16);
    const auto per = kernels::sliced_w2_squared_serial(mu, nu, thetas);
    for (std::size_t k = 0; k < thetas.size(); ++k) {
      const auto a = DiscreteMeasure::from_1d(slice_pointcloud(mu, thetas[k]));
      const auto b = DiscreteMeasure::from_1d(slice_pointcloud(nu, thetas[k]));
      EXPECT_NEAR(per[k], solve_kantorovich(a, b).cost, 1e-10);
    }
    const double w2 = std::sqrt(solve_kantorovich(mu, nu).cost);
    EXPECT_LE(sw2_pointcloud(mu, nu, 180), w2 + 1e-9);
  }
}

TEST(AngleGrid, StartsAtZeroAndCoversHalfCircle) {
  const auto a = angle_grid(4);
  const double pi = std::acos(-1.0);
  ASSERT_EQ(a.size(), 4u);
  EXPECT_EQ(a[0], 0.0);
  EXPECT_NEAR(a[2], pi / 2, 1e-15);
  EXPECT_NEAR(a[3], 3 * pi / 4, 1e-15);
}

TEST(Lot, SelfEmbeddingIsIdentity) {
  std::mt19937_64 rng(17);
  const DiscreteMeasure ref = uniform_cloud(6, 2, rng);
  const LotEmbedding e = lot_embed(ref, ref);
  for (std::size_t k = 0; k < e.map.size(); ++k) EXPECT_NEAR(e.map[k], ref.coords()[k], 1e-12);
  for (double v : e.velocity()) EXPECT_NEAR(v, 0.0, 1e-12);
  EXPECT_NEAR(d_lot(e, e), 0.0, 0.0);
}

// Mean of the step quantile of `nu` over [u0, u1], integrated exactly.
double mean_quantile(const std::vector<std::pair<double, double>>& nu, double u0, double u1) {
  double c = 0.0, acc = 0.0;
  for (const auto& [x, w] : nu) {
    const double lo = std::max(c, u0), hi = std::min(c + w, u1);
    if (hi > lo) acc += (hi - lo) * x;
    c += w;
  }
  return acc / (u1 - u0);
}

TEST(Lot, OneDimensionalMatchesQuantileComposition) {
  std::mt19937_64 rng(18);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t nr = 4 + trial, nt = 3 + 2 * trial;
    const auto wr = oracle::random_weights(nr, rng), wt = oracle::random_weights(nt, rng);
    std::vector<std::pair<double, double>> r, t;
    for (std::size_t i = 0; i < nr; ++i) r.push_back({u(rng), wr[i]});
    for (std::size_t i = 0; i < nt; ++i) t.push_back({u(rng), wt[i]});
    std::vector<double> rx, rw, tx, tw;
    for (auto& [x, w] : r) rx.push_back(x), rw.push_back(w);
    for (auto& [x, w] : t) tx.push_back(x), tw.push_back(w);
    const DiscreteMeasure ref(1, rx, rw), target(1, tx, tw);
    const LotEmbedding e = lot_embed(target, ref);
    auto sorted_t = t;
    std::sort(sorted_t.begin(), sorted_t.end());
    for (std::size_t i = 0; i < nr; ++i) {
      // F_ref just below and at the atom.
      double below = 0.0;
      for (std::size_t k = 0; k < nr; ++k) {
        if (rx[k] < rx[i] || (rx[k] == rx[i] && k < i)) below += rw[k];
      }
      EXPECT_NEAR(e.map[i], mean_quantile(sorted_t, below, below + rw[i]), 1e-6);
    }
    EXPECT_NEAR(e.plan_cost, std::pow(oracle::w2_steps(r, t), 2), 1e-10);
  }
}

TEST(Lot, EqualWeightMatchesPermutation) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const DiscreteMeasure ref = uniform_cloud(n, 2, rng);
    const DiscreteMeasure nu = uniform_cloud(n, 2, rng);
    const LotEmbedding e = lot_embed(nu, ref);
    const auto perm = oracle::best_permutation(to_vec(ref.coords()), to_vec(nu.coords()), 2);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(e.map[2 * i], nu.coords()[2 * perm[i]], 1e-9);
      EXPECT_NEAR(e.map[2 * i + 1], nu.coords()[2 * perm[i] + 1], 1e-9);
    }
    EXPECT_NEAR(e.map_cost(), e.plan_cost, 1e-12);
    const double w2 = std::sqrt(solve_kantorovich(ref, nu).cost);
    EXPECT_NEAR(d_lot(lot_identity(ref), e), w2, 1e-6);
  }
}

TEST(Lot, PushedReferenceReproducesTarget) {
  std::mt19937_64 rng(20);
  const DiscreteMeasure ref = uniform_cloud(6, 2, rng);
  const DiscreteMeasure nu = uniform_cloud(6, 2, rng);
  const DiscreteMeasure pushed = lot_geodesic(lot_identity(ref), lot_embed(nu, ref), 1.0);
  std::map<std::pair<double, double>, double> want, got;
  for (std::size_t i = 0; i < 6; ++i) {
    want[{nu.point(i)[0], nu.point(i)[1]}] += nu.weights()[i];
    got[{pushed.point(i)[0], pushed.point(i)[1]}] += pushed.weights()[i];
  }
  ASSERT_EQ(want.size(), got.size());
  for (auto it = want.begin(), jt = got.begin(); it != want.end(); ++it, ++jt) {
    EXPECT_NEAR(it->first.first, jt->first.first, 1e-12);
    EXPECT_NEAR(it->second, jt->second, 1e-6);
  }
}

TEST(Lot, LowerBoundsWassersteinOnTriples) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const DiscreteMeasure ref = uniform_cloud(n, 2, rng);
    const DiscreteMeasure a = uniform_cloud(n, 2, rng);
    const DiscreteMeasure b = uniform_cloud(n, 2, rng);
    const double w2 = std::sqrt(solve_kantorovich(a, b).cost);
    EXPECT_GE(d_lot(lot_embed(a, ref), lot_embed(b, ref)), w2 - 1e-9);
  }
}

TEST(Lot, Errors) {
  const DiscreteMeasure single(2, {0.0, 0.0}, {1.0});
  const DiscreteMeasure two(2, {0.0, 0.0, 1.0, 1.0}, {0.5, 0.5});
  try {
    lot_embed(two, single);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("reference too coarse"), std::string::npos);
  }
  const DiscreteMeasure other(2, {0.0, 0.0, 2.0, 1.0}, {0.5, 0.5});
  EXPECT_THROW(d_lot(lot_identity(two), lot_identity(other)), Error);
  EXPECT_THROW(lot_geodesic(lot_identity(two), lot_identity(two), 1.5), Error);
  EXPECT_THROW(lot_geodesic(lot_identity(two), lot_identity(two), -0.1), Error);
}

TEST(Lot, GeodesicEndpointsAndDeltas) {
  std::mt19937_64 rng(22);
  const DiscreteMeasure ref = uniform_cloud(5, 2, rng);
  const LotEmbedding e1 = lot_embed(uniform_cloud(5, 2, rng), ref);
  const LotEmbedding e2 = lot_embed(uniform_cloud(5, 2, rng), ref);
  const DiscreteMeasure r0 = lot_geodesic(e1, e2, 0.0);
  const DiscreteMeasure r1 = lot_geodesic(e1, e2, 1.0);
  for (std::size_t k = 0; k < e1.map.size(); ++k) {
    EXPECT_EQ(r0.coords()[k], e1.map[k]);
    EXPECT_EQ(r1.coords()[k], e2.map[k]);
  }
  const DiscreteMeasure ref1(1, {0.0}, {1.0});
  const LotEmbedding da = lot_embed(DiscreteMeasure(1, {-2.0}, {1.0}), ref1);
  const LotEmbedding db = lot_embed(DiscreteMeasure(1, {5.0}, {1.0}), ref1);
  EXPECT_NEAR(lot_geodesic(da, db, 0.5).coords()[0], 1.5, 1e-15);
}

TEST(Lot, ConstantSpeed) {
  std::mt19937_64 rng(23);
  const DiscreteMeasure ref = weighted_cloud(8, 2, rng);
  const LotEmbedding e1 = lot_embed(weighted_cloud(7, 2, rng), ref);
  const LotEmbedding e2 = lot_embed(weighted_cloud(9, 2, rng), ref);
  const double total = d_lot(e1, e2);
  const double ts[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (double s : ts) {
    for (double t : ts) {
      const double d = d_lot(lot_interpolate(e1, e2, s), lot_interpolate(e1, e2, t));
      EXPECT_NEAR(d, std::abs(s - t) * total, 1e-9);
    }
  }
}

}  // namespace
}  // namespace ottk
