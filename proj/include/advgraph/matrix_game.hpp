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

#ifndef ADVGRAPH_MATRIX_GAME_HPP_
#define ADVGRAPH_MATRIX_GAME_HPP_

#include <initializer_list>
#include <span>
#include <vector>

namespace advgraph {

// Rows are red actions (maximizer), columns are blue actions (minimizer);
// entries are the cost paid by blue.
class MatrixGame {
 public:
  MatrixGame(int rows, int cols, std::vector<double> row_major);
  MatrixGame(std::initializer_list<std::initializer_list<double>> rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  double operator()(int r, int c) const { return data_[r * cols_ + c]; }
  double& operator()(int r, int c) { return data_[r * cols_ + c]; }
  const std::vector<double>& data() const noexcept { return data_; }

  double min_entry() const;
  double max_entry() const;

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
};

using MixedStrategy = std::vector<double>;

enum class Side { kRed, kBlue };

struct MatrixGameSolution {
  double value = 0.0;
  MixedStrategy red;
  MixedStrategy blue;
};

// Minimax value and an optimal strategy pair.
MatrixGameSolution solve(const MatrixGame& game);

// red' A blue. Throws InputError on dimension mismatch.
double expected_payoff(const MatrixGame& game, std::span<const double> red,
                       std::span<const double> blue);

struct BestResponse {
  int action = 0;  // 0-based row (red) or column (blue)
  double payoff = 0.0;
};

// Pure best response of `side` against the other side's mixed strategy.
// Ties go to the lowest index.
BestResponse best_response(const MatrixGame& game, std::span<const double> opponent,
                           Side side);

struct Exploitability {
  double red_gain = 0.0;
  double blue_gain = 0.0;
  double max() const noexcept { return red_gain > blue_gain ? red_gain : blue_gain; }
};

Exploitability exploitability(const MatrixGame& game, std::span<const double> red,
                              std::span<const double> blue);

}  // namespace advgraph

#endif  // ADVGRAPH_MATRIX_GAME_HPP_
