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

#include "advgraph/matrix_game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "advgraph/errors.hpp"

namespace advgraph {
namespace {

constexpr double kPivotEps = 1e-12;

MixedStrategy pure(int size, int index) {
  MixedStrategy s(size, 0.0);
  s[index] = 1.0;
  return s;
}

void normalize(MixedStrategy& s) {
  for (double& p : s) p = std::max(p, 0.0);
  const double total = std::accumulate(s.begin(), s.end(), 0.0);
  for (double& p : s) p /= total;
}

// Dense tableau simplex with Bland's rule for
//   max sum(w)  s.t.  B w <= 1, w >= 0,
// where every entry of B is >= 1. Returns w and the constraint duals u.
void simplex_unit_lp(const MatrixGame& b, std::vector<double>& w, std::vector<double>& u) {
  const int m = b.rows();
  const int n = b.cols();
  const int width = n + m + 1;  // structural, slack, rhs
  std::vector<double> t((m + 1) * width, 0.0);
  auto at = [&](int r, int c) -> double& { return t[r * width + c]; };
  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) at(r, c) = b(r, c);
    at(r, n + r) = 1.0;
    at(r, width - 1) = 1.0;
    basis[r] = n + r;
  }
  for (int c = 0; c < n; ++c) at(m, c) = -1.0;

  const int max_pivots = 50 * (m + n) + 100;
  for (int iter = 0; iter < max_pivots; ++iter) {
    int enter = -1;
    for (int c = 0; c < n + m; ++c) {
      if (at(m, c) < -kPivotEps) {
        enter = c;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < m; ++r) {
      const double a = at(r, enter);
      if (a <= kPivotEps) continue;
      const double ratio = at(r, width - 1) / a;
      if (leave < 0 || ratio < best_ratio - kPivotEps ||
          (ratio <= best_ratio + kPivotEps && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    // The feasible region is bounded because every entry of B is positive.
    if (leave < 0) throw ContractError("matrix game LP reported unbounded");
    const double pivot = at(leave, enter);
    for (int c = 0; c < width; ++c) at(leave, c) /= pivot;
    for (int r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const double factor = at(r, enter);
      if (factor == 0.0) continue;
      for (int c = 0; c < width; ++c) at(r, c) -= factor * at(leave, c);
    }
    basis[leave] = enter;
  }
  w.assign(n, 0.0);
  for (int r = 0; r < m; ++r) {
    if (basis[r] < n) w[basis[r]] = at(r, width - 1);
  }
  u.assign(m, 0.0);
  for (int r = 0; r < m; ++r) u[r] = at(m, n + r);
}

void check_dims(const MatrixGame& game, std::size_t red, std::size_t blue) {
  if (red != static_cast<std::size_t>(game.rows()) ||
      blue != static_cast<std::size_t>(game.cols())) {
    throw InputError("strategy dimensions do not match a " + std::to_string(game.rows()) +
                     "x" + std::to_string(game.cols()) + " game");
  }
}

}  // namespace

MatrixGame::MatrixGame(int rows, int cols, std::vector<double> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (rows_ < 1 || cols_ < 1) throw InputError("matrix game needs at least one row and column");
  if (data_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_)) {
    throw InputError("payoff data does not match the matrix shape");
  }
  for (double v : data_) {
    if (!std::isfinite(v)) throw InputError("payoff entries must be finite");
  }
}

MatrixGame::MatrixGame(std::initializer_list<std::initializer_list<double>> rows)
    : MatrixGame(static_cast<int>(rows.size()),
                 rows.size() ? static_cast<int>(rows.begin()->size()) : 0, [&] {
                   std::vector<double> d;
                   for (const auto& r : rows) {
                     if (r.size() != rows.begin()->size()) {
                       throw InputError("ragged payoff matrix");
                     }
                     d.insert(d.end(), r.begin(), r.end());
                   }
                   return d;
                 }()) {}

double MatrixGame::min_entry() const { return *std::min_element(data_.begin(), data_.end()); }
double MatrixGame::max_entry() const { return *std::max_element(data_.begin(), data_.end()); }

MatrixGameSolution solve(const MatrixGame& game) {
  const int m = game.rows();
  const int n = game.cols();
  MatrixGameSolution out;

  // Pure saddle point, which also covers single-row and single-column games.
  int best_row = 0;
  double maximin = -INFINITY;
  for (int r = 0; r < m; ++r) {
    double row_min = game(r, 0);
    for (int c = 1; c < n; ++c) row_min = std::min(row_min, game(r, c));
    if (row_min > maximin) {
      maximin = row_min;
      best_row = r;
    }
  }
  int best_col = 0;
  double minimax = INFINITY;
  for (int c = 0; c < n; ++c) {
    double col_max = game(0, c);
    for (int r = 1; r < m; ++r) col_max = std::max(col_max, game(r, c));
    if (col_max < minimax) {
      minimax = col_max;
      best_col = c;
    }
  }
  if (maximin == minimax) {
    out.value = maximin;
    out.red = pure(m, best_row);
    out.blue = pure(n, best_col);
    return out;
  }

  const double shift = 1.0 + std::abs(game.min_entry());
  MatrixGame shifted = game;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) shifted(r, c) += shift;
  }
  std::vector<double> w, u;
  simplex_unit_lp(shifted, w, u);
  out.blue = std::move(w);
  out.red = std::move(u);
  normalize(out.blue);
  normalize(out.red);
  out.value = expected_payoff(game, out.red, out.blue);
  return out;
}

double expected_payoff(const MatrixGame& game, std::span<const double> red,
                       std::span<const double> blue) {
  check_dims(game, red.size(), blue.size());
  double total = 0.0;
  for (int r = 0; r < game.rows(); ++r) {
    if (red[r] == 0.0) continue;
    double row = 0.0;
    for (int c = 0; c < game.cols(); ++c) row += game(r, c) * blue[c];
    total += red[r] * row;
  }
  return total;
}

BestResponse best_response(const MatrixGame& game, std::span<const double> opponent,
                           Side side) {
  BestResponse best;
  if (side == Side::kRed) {
    if (opponent.size() != static_cast<std::size_t>(game.cols())) {
      throw InputError("blue strategy dimension does not match the game");
    }
    for (int r = 0; r < game.rows(); ++r) {
      double payoff = 0.0;
      for (int c = 0; c < game.cols(); ++c) payoff += game(r, c) * opponent[c];
      if (r == 0 || payoff > best.payoff) best = {r, payoff};
    }
  } else {
    if (opponent.size() != static_cast<std::size_t>(game.rows())) {
      throw InputError("red strategy dimension does not match the game");
    }
    for (int c = 0; c < game.cols(); ++c) {
      double payoff = 0.0;
      for (int r = 0; r < game.rows(); ++r) payoff += game(r, c) * opponent[r];
      if (c == 0 || payoff < best.payoff) best = {c, payoff};
    }
  }
  return best;
}

Exploitability exploitability(const MatrixGame& game, std::span<const double> red,
                              std::span<const double> blue) {
  const double current = expected_payoff(game, red, blue);
  return {best_response(game, blue, Side::kRed).payoff - current,
          current - best_response(game, red, Side::kBlue).payoff};
}

}  // namespace advgraph
