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

#ifndef ADVGRAPH_SIMULATOR_HPP_
#define ADVGRAPH_SIMULATOR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "advgraph/game.hpp"
#include "advgraph/matrix_game.hpp"
#include "advgraph/solver.hpp"

namespace advgraph {

enum class PolicyKind {
  kEquilibrium,
  kBlueSecurity,
  kRedSecurity,
  kNaiveBestCase,
  kRedNeverSwitch,
  kUniformRandom,
  kTable,
};

std::string to_string(PolicyKind kind);

// A stationary policy for one side, tabulated over the full state space.
// Each entry is aligned with blue_actions() or red_actions() at that state.
class Policy {
 public:
  static Policy equilibrium(const Solution& solution, Side side);
  static Policy blue_security(const Instance& inst);
  static Policy red_security(const Instance& inst, double gamma);
  // First edge of a shortest path on the elementwise-min graph, replanned
  // from the current node each step.
  static Policy naive_best_case(const Instance& inst);
  static Policy red_never_switch(const Instance& inst);
  static Policy uniform_random(const Instance& inst, Side side);
  // Not validated here; invalid rows surface as ContractError when used.
  static Policy table(const Instance& inst, Side side, std::vector<MixedStrategy> rows);

  PolicyKind kind() const noexcept { return kind_; }
  Side side() const noexcept { return side_; }
  const StateSpace& space() const noexcept { return space_; }

  // Throws ContractError naming the state if the row is not a distribution
  // over the legal action set.
  const MixedStrategy& distribution(const GameState& s, const Instance& inst) const;

 private:
  Policy(PolicyKind kind, Side side, StateSpace space, std::vector<MixedStrategy> rows)
      : kind_(kind), side_(side), space_(space), rows_(std::move(rows)) {}

  PolicyKind kind_;
  Side side_;
  StateSpace space_;
  std::vector<MixedStrategy> rows_;
};

struct Trajectory {
  std::vector<GameState> states;  // length + 1 entries, starting at s0
  std::vector<int> blue_actions;
  std::vector<int> red_actions;
  std::vector<double> stage_costs;
  double discounted_total = 0.0;
  bool reached_goal = false;
  int length = 0;
};

// One sampled play. Draws are keyed by (seed, rollout_index, step), so a
// rollout is reproducible regardless of which worker runs it.
Trajectory rollout(const Instance& inst, const Policy& blue, const Policy& red,
                   const GameState& s0, double gamma, int horizon, std::uint64_t seed,
                   std::uint64_t rollout_index = 0);

struct CostEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double goal_fraction = 0.0;
  std::vector<double> costs;  // per rollout, in index order
};

CostEstimate estimate_cost(const Instance& inst, const Policy& blue, const Policy& red,
                           const GameState& s0, double gamma, int horizon, int n_rollouts,
                           std::uint64_t seed);

// Solves v = c + gamma P v for the chain induced by the fixed policy pair.
// Goal states are pinned to zero. Indexed like enumerate_states(inst).
std::vector<double> exact_expected_cost(const Instance& inst, const Policy& blue,
                                        const Policy& red, double gamma);

// Probability that the position equals the goal after `horizon` steps.
double goal_reach_probability(const Instance& inst, const Policy& blue, const Policy& red,
                              const GameState& s0, int horizon);

// 10 * N * (max_ammo + 1).
int default_horizon(const Instance& inst);

}  // namespace advgraph

#endif  // ADVGRAPH_SIMULATOR_HPP_
