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

#include <gtest/gtest.h>

#include <random>

#include "advgraph/errors.hpp"
#include "oracles.hpp"

namespace advgraph {
namespace {

oracle::Matrix to_rows(const MatrixGame& g) {
  oracle::Matrix m(g.rows(), std::vector<double>(g.cols()));
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) m[r][c] = g(r, c);
  }
  return m;
}

MatrixGame random_game(std::mt19937_64& rng, int max_dim, int lo, int hi) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(lo, hi);
  const int r = dim(rng);
  const int c = dim(rng);
  std::vector<double> data(r * c);
  for (double& x : data) x = entry(rng);
  return MatrixGame(r, c, data);
}

void expect_distribution(const MixedStrategy& d, std::size_t n) {
  ASSERT_EQ(d.size(), n);
  double sum = 0.0;
  for (double p : d) {
    EXPECT_GE(p, 0.0);
    sum += p;
  }
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(MatrixGame, RejectsBadInput) {
  EXPECT_THROW(MatrixGame(0, 1, {}), InputError);
  EXPECT_THROW(MatrixGame(1, 2, {1.0}), InputError);
  EXPECT_THROW(MatrixGame(1, 1, {NAN}), InputError);
  EXPECT_THROW(MatrixGame(1, 1, {INFINITY}), InputError);
}

TEST(Solve, MatchingPennies) {
  const auto s = solve({{1, -1}, {-1, 1}});
  EXPECT_NEAR(s.value, 0.0, 1e-12);
  EXPECT_NEAR(s.red[0], 0.5, 1e-12);
  EXPECT_NEAR(s.blue[0], 0.5, 1e-12);
}

TEST(Solve, SaddlePoint) {
  const auto s = solve({{2, 3}, {1, 1}});
  EXPECT_EQ(s.value, 2.0);
  EXPECT_EQ(s.red, (MixedStrategy{1, 0}));
  EXPECT_EQ(s.blue, (MixedStrategy{1, 0}));
}

TEST(Solve, SymmetricMixing) {
  const MatrixGame g{{11, 2}, {2, 11}};
  const auto s = solve(g);
  EXPECT_NEAR(s.value, 6.5, 1e-12);
  EXPECT_NEAR(s.red[0], 0.5, 1e-12);
  EXPECT_NEAR(s.blue[1], 0.5, 1e-12);
  // (ad - bc) / (a + d - b - c)
  EXPECT_NEAR(s.value, (11.0 * 11 - 2 * 2) / (11.0 + 11 - 2 - 2), 1e-12);
  EXPECT_NEAR(oracle::maxmin_grid_two_rows(to_rows(g)), 6.5, 1e-3);
}

TEST(Solve, SingleEntryAndVectors) {
  EXPECT_EQ(solve({{7}}).value, 7);
  const auto row = solve({{3, 1, 2}});
  EXPECT_EQ(row.value, 1);
  EXPECT_EQ(row.blue, (MixedStrategy{0, 1, 0}));
  const auto col = solve({{3}, {1}, {2}});
  EXPECT_EQ(col.value, 3);
  EXPECT_EQ(col.red, (MixedStrategy{1, 0, 0}));
}

TEST(BestResponse, Examples) {
  const MatrixGame pennies{{1, -1}, {-1, 1}};
  const MixedStrategy half = {0.5, 0.5};
  const BestResponse r = best_response(pennies, half, Side::kRed);
  EXPECT_EQ(r.action, 0);
  EXPECT_NEAR(r.payoff, 0.0, 1e-15);

  const MixedStrategy first = {1, 0};
  const BestResponse b = best_response({{2, 3}, {1, 1}}, first, Side::kBlue);
  EXPECT_EQ(b.action, 0);
  EXPECT_EQ(b.payoff, 2);

  const BestResponse tie = best_response({{11, 2}, {2, 11}}, half, Side::kBlue);
  EXPECT_EQ(tie.action, 0);
  EXPECT_EQ(tie.payoff, 6.5);

  const MixedStrategy three = {0.2, 0.3, 0.5};
  EXPECT_THROW(best_response(pennies, three, Side::kRed), InputError);
}

TEST(Exploitability, Examples) {
  const MatrixGame pennies{{1, -1}, {-1, 1}};
  const MixedStrategy pure = {1, 0};
  const MixedStrategy half = {0.5, 0.5};
  const Exploitability e = exploitability(pennies, pure, half);
  EXPECT_NEAR(e.red_gain, 0.0, 1e-15);
  EXPECT_NEAR(e.blue_gain, 1.0, 1e-15);
  const MixedStrategy one = {1};
  const Exploitability unit = exploitability({{7}}, one, one);
  EXPECT_EQ(unit.red_gain, 0);
  EXPECT_EQ(unit.blue_gain, 0);
  EXPECT_THROW(exploitability(pennies, one, half), InputError);
}

TEST(Solve, MatchesVertexOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const MatrixGame g = random_game(rng, 3, -9, 9);
    const auto s = solve(g);
    const oracle::Matrix m = to_rows(g);
    EXPECT_NEAR(s.value, oracle::maxmin_vertex(m), 1e-6);
    EXPECT_NEAR(s.value, oracle::minmax_vertex(m), 1e-6);
    if (g.rows() == 2) {
      EXPECT_NEAR(s.value, oracle::maxmin_grid_two_rows(m), 1e-2);
    }
    expect_distribution(s.red, g.rows());
    expect_distribution(s.blue, g.cols());
    EXPECT_LE(exploitability(g, s.red, s.blue).max(), 1e-9);
  }
}

TEST(Solve, Duality) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const MatrixGame g = random_game(rng, 5, -20, 20);
    const auto s = solve(g);
    const double floor = best_response(g, s.red, Side::kBlue).payoff;
    const double ceiling = best_response(g, s.blue, Side::kRed).payoff;
    EXPECT_NEAR(floor, s.value, 1e-9);
    EXPECT_NEAR(ceiling, s.value, 1e-9);
    EXPECT_NEAR(expected_payoff(g, s.red, s.blue), s.value, 1e-9);
  }
}

TEST(Solve, ShiftAndScale) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const MatrixGame g = random_game(rng, 4, -9, 9);
    const double v = solve(g).value;
    std::vector<double> shifted = g.data();
    std::vector<double> scaled = g.data();
    for (double& x : shifted) x += 3.25;
    for (double& x : scaled) x *= 2.5;
    const MatrixGame gs(g.rows(), g.cols(), shifted);
    const auto s = solve(gs);
    EXPECT_NEAR(s.value, v + 3.25, 1e-9);
    EXPECT_LE(exploitability(gs, s.red, s.blue).max(), 1e-9);
    EXPECT_NEAR(solve(MatrixGame(g.rows(), g.cols(), scaled)).value, 2.5 * v, 1e-9);
  }
}

TEST(Solve, DegenerateGames) {
  const auto zeros = solve(MatrixGame(3, 3, std::vector<double>(9, 0.0)));
  EXPECT_EQ(zeros.value, 0);
  const MatrixGame ties{{1, 1, 2}, {1, 1, 0}, {0, 3, 1}};
  const auto s = solve(ties);
  EXPECT_NEAR(s.value, oracle::maxmin_vertex(to_rows(ties)), 1e-9);
  EXPECT_LE(exploitability(ties, s.red, s.blue).max(), 1e-9);
  const MatrixGame big{{1e6, 1e-3}, {-1e6, 5e5}};
  const auto sb = solve(big);
  EXPECT_NEAR(sb.value, oracle::maxmin_vertex(to_rows(big)), 1e-6);
}

}  // namespace
}  // namespace advgraph
