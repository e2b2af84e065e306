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

// Primal transportation simplex. The basis is a spanning tree over the
// bipartite graph of m supply nodes and n demand nodes (m + n - 1 cells,
// degenerate zero-flow cells included). Each pivot recomputes the dual
// potentials, prices a block of non-basic cells, and pushes flow around the
// cycle closed by the entering cell.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ottk/error.hpp"
#include "ottk/ot_exact.hpp"

namespace ottk {
namespace {

struct BasicCell {
  std::size_t row;
  std::size_t col;
  double flow;
};

class TransportSimplex {
 public:
  TransportSimplex(std::span<const double> a, std::span<const double> b, const CostFunction& cost)
      : a_(a), b_(b), cost_(cost), m_(a.size()), n_(b.size()), nodes_(m_ + n_) {}

  TransportPlan solve() {
    init_northwest();
    double cmax = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) cmax = std::max(cmax, std::abs(cost_(i, j)));
    }
    eps_ = 1e-12 * std::max(cmax, 1e-300);

    const std::size_t max_pivots = 50 * (m_ * n_) + 1000;
    for (std::size_t pivot = 0;; ++pivot) {
      require(pivot < max_pivots, "transport solver did not converge");
      compute_potentials();
      std::size_t ei = 0;
      std::size_t ej = 0;
      if (!price(ei, ej)) break;
      pivot_on(ei, ej);
    }

    TransportPlan plan;
    plan.rows = m_;
    plan.cols = n_;
    for (const auto& c : cells_) {
      if (c.flow > 0.0) {
        plan.entries.push_back({c.row, c.col, c.flow});
        plan.cost += c.flow * cost_(c.row, c.col);
      }
    }
    std::sort(plan.entries.begin(), plan.entries.end(), [](const PlanEntry& x, const PlanEntry& y) {
      return x.row != y.row ? x.row < y.row : x.col < y.col;
    });
    return plan;
  }

 private:
  std::size_t col_node(std::size_t j) const { return m_ + j; }

  void add_cell(std::size_t slot, std::size_t i, std::size_t j, double flow) {
    cells_[slot] = {i, j, flow};
    adjacency_[i].push_back(slot);
    adjacency_[col_node(j)].push_back(slot);
  }

  void remove_from(std::size_t node, std::size_t slot) {
    auto& list = adjacency_[node];
    list.erase(std::find(list.begin(), list.end(), slot));
  }

  void init_northwest() {
    cells_.assign(nodes_ - 1, {});
    adjacency_.assign(nodes_, {});
    std::size_t i = 0;
    std::size_t j = 0;
    double ra = a_[0];
    double rb = b_[0];
    std::size_t slot = 0;
    for (;;) {
      const double x = std::max(0.0, std::min(ra, rb));
      add_cell(slot++, i, j, x);
      if (i == m_ - 1 && j == n_ - 1) break;
      if (j == n_ - 1 || (i < m_ - 1 && ra < rb)) {
        rb -= x;
        ra = a_[++i];
      } else {
        ra -= x;
        rb = b_[++j];
      }
    }
  }

  void compute_potentials() {
    u_.assign(m_, 0.0);
    v_.assign(n_, 0.0);
    parent_.assign(nodes_, kNone);
    parent_cell_.assign(nodes_, kNone);
    depth_.assign(nodes_, 0);
    std::vector<bool> seen(nodes_, false);
    std::vector<std::size_t> queue;
    queue.reserve(nodes_);
    queue.push_back(0);
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t node = queue[head];
      for (std::size_t slot : adjacency_[node]) {
        const BasicCell& c = cells_[slot];
        const std::size_t other = node < m_ ? col_node(c.col) : c.row;
        if (seen[other]) continue;
        seen[other] = true;
        parent_[other] = node;
        parent_cell_[other] = slot;
        depth_[other] = depth_[node] + 1;
        const double cij = cost_(c.row, c.col);
        if (node < m_) {
          v_[c.col] = cij - u_[c.row];
        } else {
          u_[c.row] = cij - v_[c.col];
        }
        queue.push_back(other);
      }
    }
  }

  // Block pricing: scan whole rows cyclically, stop once a block of cells has
  // been examined and an improving candidate exists.
  bool price(std::size_t& best_i, std::size_t& best_j) {
    const std::size_t block =
        std::max<std::size_t>(nodes_, static_cast<std::size_t>(std::sqrt(double(m_ * n_))));
    double best = -eps_;
    bool found = false;
    std::size_t scanned = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      const std::size_t i = (row_cursor_ + r) % m_;
      for (std::size_t j = 0; j < n_; ++j) {
        const double reduced = cost_(i, j) - u_[i] - v_[j];
        if (reduced < best) {
          best = reduced;
          best_i = i;
          best_j = j;
          found = true;
        }
      }
      scanned += n_;
      if (found && scanned >= block) {
        row_cursor_ = (i + 1) % m_;
        return true;
      }
    }
    return found;
  }

  void pivot_on(std::size_t ei, std::size_t ej) {
    // Tree path from column node ej up to row node ei.
    std::vector<std::size_t> from_col;
    std::vector<std::size_t> from_row;
    std::size_t x = col_node(ej);
    std::size_t y = ei;
    while (depth_[x] > depth_[y]) {
      from_col.push_back(parent_cell_[x]);
      x = parent_[x];
    }
    while (depth_[y] > depth_[x]) {
      from_row.push_back(parent_cell_[y]);
      y = parent_[y];
    }
    while (x != y) {
      from_col.push_back(parent_cell_[x]);
      x = parent_[x];
      from_row.push_back(parent_cell_[y]);
      y = parent_[y];
    }
    std::vector<std::size_t> cycle = std::move(from_col);
    cycle.insert(cycle.end(), from_row.rbegin(), from_row.rend());

    // Even positions lose flow, odd positions gain it.
    double theta = std::numeric_limits<double>::infinity();
    std::size_t leaving = kNone;
    for (std::size_t k = 0; k < cycle.size(); k += 2) {
      if (cells_[cycle[k]].flow < theta) {
        theta = cells_[cycle[k]].flow;
        leaving = cycle[k];
      }
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      double& f = cells_[cycle[k]].flow;
      f = (k % 2 == 0) ? std::max(0.0, f - theta) : f + theta;
    }
    remove_from(cells_[leaving].row, leaving);
    remove_from(col_node(cells_[leaving].col), leaving);
    add_cell(leaving, ei, ej, theta);
  }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  std::span<const double> a_;
  std::span<const double> b_;
  const CostFunction& cost_;
  std::size_t m_;
  std::size_t n_;
  std::size_t nodes_;
  double eps_ = 0.0;
  std::size_t row_cursor_ = 0;
  std::vector<BasicCell> cells_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<double> u_;
  std::vector<double> v_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_cell_;
  std::vector<std::size_t> depth_;
};

}  // namespace

TransportPlan solve_transport(std::span<const double> a, std::span<const double> b,
                              const CostFunction& cost) {
  require(!a.empty() && !b.empty(), "transport problem needs nonempty marginals");
  for (double w : a) require(std::isfinite(w) && w >= 0.0, "marginals must be nonnegative");
  for (double w : b) require(std::isfinite(w) && w >= 0.0, "marginals must be nonnegative");
  const double sa = std::accumulate(a.begin(), a.end(), 0.0);
  const double sb = std::accumulate(b.begin(), b.end(), 0.0);
  require(std::abs(sa - sb) <= 1e-9, "infeasible transport problem: mass mismatch");
  return TransportSimplex(a, b, cost).solve();
}

}  // namespace ottk
