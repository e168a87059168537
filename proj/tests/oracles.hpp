// Copyright 2026 The advgraph Authors
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

#ifndef ADVGRAPH_TESTS_ORACLES_HPP_
#define ADVGRAPH_TESTS_ORACLES_HPP_

// Brute-force references kept apart from the library code paths.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "advgraph/game.hpp"
#include "advgraph/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

// Small dense Gaussian elimination; nullopt when singular.
inline std::optional<std::vector<double>> solve_linear(Matrix a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    if (std::abs(a[p][c]) < 1e-12) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

// max over row mixtures x of min_j (x^T A)_j, by enumerating every square
// equalizing system (row support I, column set J, |I| = |J|).
inline double maxmin_vertex(const Matrix& a) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(a[0].size());
  double best = -std::numeric_limits<double>::infinity();
  for (unsigned rows = 1; rows < (1u << m); ++rows) {
    std::vector<int> I;
    for (int i = 0; i < m; ++i) {
      if (rows & (1u << i)) I.push_back(i);
    }
    const std::size_t t = I.size();
    for (unsigned cols = 1; cols < (1u << n); ++cols) {
      std::vector<int> J;
      for (int j = 0; j < n; ++j) {
        if (cols & (1u << j)) J.push_back(j);
      }
      if (J.size() != t) continue;
      // Unknowns x_I and v.
      Matrix sys(t + 1, std::vector<double>(t + 1, 0.0));
      std::vector<double> rhs(t + 1, 0.0);
      for (std::size_t e = 0; e < t; ++e) {
        for (std::size_t q = 0; q < t; ++q) sys[e][q] = a[I[q]][J[e]];
        sys[e][t] = -1.0;
      }
      for (std::size_t q = 0; q < t; ++q) sys[t][q] = 1.0;
      rhs[t] = 1.0;
      const auto sol = solve_linear(sys, rhs);
      if (!sol) continue;
      std::vector<double> x(m, 0.0);
      bool ok = true;
      for (std::size_t q = 0; q < t; ++q) {
        if ((*sol)[q] < -1e-12) ok = false;
        x[I[q]] = std::max(0.0, (*sol)[q]);
      }
      if (!ok) continue;
      double worst = std::numeric_limits<double>::infinity();
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += x[i] * a[i][j];
        worst = std::min(worst, s);
      }
      best = std::max(best, worst);
    }
  }
  return best;
}

// min over column mixtures y of max_i (A y)_i.
inline double minmax_vertex(const Matrix& a) {
  Matrix neg(a[0].size(), std::vector<double>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[0].size(); ++j) neg[j][i] = -a[i][j];
  }
  return -maxmin_vertex(neg);
}

// Grid search over the row simplex for two-row games; exact at breakpoints
// only up to the grid step, so use a loose tolerance.
inline double maxmin_grid_two_rows(const Matrix& a, int steps = 20000) {
  double best = -std::numeric_limits<double>::infinity();
  for (int s = 0; s <= steps; ++s) {
    const double x = static_cast<double>(s) / steps;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < a[0].size(); ++j) {
      worst = std::min(worst, x * a[0][j] + (1 - x) * a[1][j]);
    }
    best = std::max(best, worst);
  }
  return best;
}

// Minimum of sum_t gamma^t w(e_t) over all walks of length <= max_len from
// src that end at dst, by depth-first enumeration.
inline std::optional<double> discounted_walk_min(const advgraph::PositionGraph& g, int src,
                                                 int dst, double gamma, int max_len) {
  std::optional<double> best;
  std::function<void(int, int, double, double)> dfs = [&](int node, int depth, double cost,
                                                          double disc) {
    if (node == dst && (!best || cost < *best)) best = cost;
    if (depth == max_len) return;
    for (int next : g.out_neighbors(node)) {
      if (next == node && node == dst) continue;
      dfs(next, depth + 1, cost + disc * g.weight(node, next), disc * gamma);
    }
  };
  dfs(src, 0, 0.0, 1.0);
  return best;
}

// Shapley iteration with its own dynamics and the vertex matrix-game oracle.
// Red maximizes over rows, blue minimizes over columns. Indexed [p-1][k-1][a].
using ValueTable = std::vector<std::vector<std::vector<double>>>;

inline ValueTable value_iteration(const advgraph::Instance& inst, double gamma,
                                  int sweeps = 20000, double tol = 1e-12) {
  const int n = inst.node_count();
  const int kk = inst.graph_count();
  const int amax = inst.max_ammo();
  ValueTable v(n, std::vector<std::vector<double>>(kk, std::vector<double>(amax + 1, 0.0)));
  for (int it = 0; it < sweeps; ++it) {
    ValueTable next = v;
    double change = 0.0;
    for (int p = 1; p <= n; ++p) {
      if (p == inst.goal()) continue;
      for (int k = 1; k <= kk; ++k) {
        const advgraph::PositionGraph& g = inst.graphs().graph(k);
        for (int a = 0; a <= amax; ++a) {
          std::vector<int> reds;
          if (a == 0) {
            reds = {k};
          } else {
            for (int r = 1; r <= kk; ++r) {
              for (auto [x, y] : inst.red_graph().edges()) {
                if (x == k && y == r) reds.push_back(r);
              }
            }
          }
          std::vector<int> blues;
          for (const advgraph::Edge& e : g.edges()) {
            if (e.from == p) blues.push_back(e.to);
          }
          Matrix q(reds.size(), std::vector<double>(blues.size()));
          for (std::size_t i = 0; i < reds.size(); ++i) {
            const int na = reds[i] == k ? a : a - 1;
            for (std::size_t j = 0; j < blues.size(); ++j) {
              q[i][j] = g.weight(p, blues[j]) + gamma * v[blues[j] - 1][reds[i] - 1][na];
            }
          }
          next[p - 1][k - 1][a] = maxmin_vertex(q);
          change = std::max(change, std::abs(next[p - 1][k - 1][a] - v[p - 1][k - 1][a]));
        }
      }
    }
    v = std::move(next);
    if (change <= tol) break;
  }
  return v;
}

inline advgraph::Instance make_instance(int n, int goal, const std::vector<advgraph::Edge>& edges,
                                        const Matrix& weights, int max_ammo, int robots = 1) {
  std::vector<advgraph::PositionGraph> graphs;
  for (const auto& w : weights) graphs.emplace_back(n, goal, edges, w);
  const int k = static_cast<int>(graphs.size());
  return advgraph::Instance(advgraph::GraphSet(std::move(graphs)),
                            advgraph::RedActionGraph::complete(k), robots, max_ammo);
}

// N=3, goal 3. W1: (1,2)=1 (1,3)=5 (2,3)=4; W2: (1,2)=4 (1,3)=5 (2,3)=1.
inline advgraph::Instance f1(int max_ammo = 1, int robots = 1) {
  return make_instance(3, 3, {{1, 2}, {1, 3}, {2, 3}, {3, 3}},
                       {{1, 5, 4, 0}, {4, 5, 1, 0}}, max_ammo, robots);
}

// N=4, goal 4. The two middle routes swap a cost of 10 between graphs.
inline advgraph::Instance f2(int max_ammo = 1, int robots = 1) {
  return make_instance(4, 4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 4}},
                       {{1, 1, 10, 1, 0}, {1, 1, 1, 10, 0}}, max_ammo, robots);
}

}  // namespace oracle

#endif  // ADVGRAPH_TESTS_ORACLES_HPP_
