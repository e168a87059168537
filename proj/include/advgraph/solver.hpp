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

#ifndef ADVGRAPH_SOLVER_HPP_
#define ADVGRAPH_SOLVER_HPP_

#include <span>
#include <vector>

#include "advgraph/game.hpp"
#include "advgraph/matrix_game.hpp"

namespace advgraph {

struct SolveOptions {
  double gamma = 0.99;
  double tol = 1e-8;
  int max_iter = 100000;
  // Start from the blue security bound instead of zero.
  bool warm_start_upper = false;
};

// Per-state equilibrium value and mixed policies, indexed like `space`.
// Policies are aligned with red_actions() / blue_actions() ordering.
struct Solution {
  StateSpace space;
  double gamma = 0.0;
  std::vector<double> value;
  std::vector<MixedStrategy> blue_policy;
  std::vector<MixedStrategy> red_policy;
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;

  double value_at(const GameState& s) const { return value[space.index(s)]; }
  const MixedStrategy& blue_at(const GameState& s) const { return blue_policy[space.index(s)]; }
  const MixedStrategy& red_at(const GameState& s) const { return red_policy[space.index(s)]; }
};

// Entry (r, c) = C(s, blue c) + gamma * V(step(s, blue c, red r)); `values`
// is indexed by enumerate_states(inst).
MatrixGame q_matrix(const GameState& s, std::span<const double> values,
                    const Instance& inst, double gamma);

// Synchronous Shapley value iteration over the whole state space. Stops once
// the sup-norm change between sweeps is <= tol; otherwise returns the last
// iterate with converged == false.
Solution shapley_solve(const Instance& inst, const SolveOptions& options);

// Same fixpoint, solved one (graph, ammo) layer at a time in ascending ammo
// order. Red's switching moves pay into the already-solved lower layer.
Solution solve_by_subgames(const Instance& inst, const SolveOptions& options);

struct RemovedEdge {
  Edge edge;             // original node ids
  int dominated_by = 0;  // original id of the certifying alternative
  double margin = 0.0;   // smallest lhs - rhs over all checked cases
};

struct PruneReport {
  Instance reduced;
  NodeRelabeling relabeling;  // original -> reduced ids
  std::vector<RemovedEdge> removed;
  int passes = 0;
  // False when gamma is below the discount threshold, so no bound is trusted
  // and nothing was removed.
  bool certified = true;
};

// Removes blue moves dominated under the security bounds, to a fixpoint.
PruneReport prune_dominated(const Instance& inst, double gamma);

}  // namespace advgraph

#endif  // ADVGRAPH_SOLVER_HPP_
