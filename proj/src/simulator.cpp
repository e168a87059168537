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

#include "advgraph/simulator.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "advgraph/bounds.hpp"
#include "advgraph/errors.hpp"
#include "advgraph/parallel.hpp"
#include "advgraph/rng.hpp"

namespace advgraph {
namespace {

constexpr double kDistributionTol = 1e-9;

std::size_t legal_count(const GameState& s, const Instance& inst, Side side) {
  return side == Side::kBlue ? blue_actions(s, inst).size() : red_actions(s, inst).size();
}

std::vector<int> legal(const GameState& s, const Instance& inst, Side side) {
  if (side == Side::kRed) return red_actions(s, inst);
  const std::span<const int> b = blue_actions(s, inst);
  return {b.begin(), b.end()};
}

template <typename Choose>
std::vector<MixedStrategy> tabulate(const Instance& inst, Side side, Choose choose) {
  const StateSpace space = enumerate_states(inst);
  std::vector<MixedStrategy> rows(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const GameState s = space.state(i);
    rows[i] = choose(s, legal(s, inst, side));
  }
  return rows;
}

MixedStrategy pure_at(std::size_t size, std::size_t index) {
  MixedStrategy d(size, 0.0);
  d[index] = 1.0;
  return d;
}

int sample(const MixedStrategy& d, double u) {
  double acc = 0.0;
  int last = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] <= 0.0) continue;
    acc += d[i];
    last = static_cast<int>(i);
    if (u < acc) return last;
  }
  return last;
}

void check_space(const Policy& p, const Instance& inst) {
  if (!(p.space() == enumerate_states(inst))) {
    throw InputError(to_string(p.kind()) + " policy was built for a different instance");
  }
}

}  // namespace

std::string to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kEquilibrium: return "equilibrium";
    case PolicyKind::kBlueSecurity: return "blue_security";
    case PolicyKind::kRedSecurity: return "red_security";
    case PolicyKind::kNaiveBestCase: return "naive_best_case";
    case PolicyKind::kRedNeverSwitch: return "red_never_switch";
    case PolicyKind::kUniformRandom: return "uniform_random";
    case PolicyKind::kTable: return "table";
  }
  return "unknown";
}

Policy Policy::equilibrium(const Solution& solution, Side side) {
  return Policy(PolicyKind::kEquilibrium, side, solution.space,
                side == Side::kBlue ? solution.blue_policy : solution.red_policy);
}

Policy Policy::blue_security(const Instance& inst) {
  const SecurityBounds bounds(inst, 1.0);
  auto rows = tabulate(inst, Side::kBlue, [&](const GameState& s, const std::vector<int>& acts) {
    const int a = bounds.blue(s).action;
    return pure_at(acts.size(), std::find(acts.begin(), acts.end(), a) - acts.begin());
  });
  return Policy(PolicyKind::kBlueSecurity, Side::kBlue, enumerate_states(inst), std::move(rows));
}

Policy Policy::red_security(const Instance& inst, double gamma) {
  const SecurityBounds bounds(inst, gamma);
  auto rows = tabulate(inst, Side::kRed, [&](const GameState& s, const std::vector<int>& acts) {
    const int a = bounds.red(s).action;
    return pure_at(acts.size(), std::find(acts.begin(), acts.end(), a) - acts.begin());
  });
  return Policy(PolicyKind::kRedSecurity, Side::kRed, enumerate_states(inst), std::move(rows));
}

Policy Policy::naive_best_case(const Instance& inst) {
  const PositionGraph best = best_case_graph(inst.graphs());
  const std::vector<Distance> dist = distances_to(best, best.goal());
  auto rows = tabulate(inst, Side::kBlue, [&](const GameState& s, const std::vector<int>& acts) {
    std::size_t pick = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < acts.size(); ++i) {
      const Distance& d = dist[acts[i] - 1];
      if (!d) continue;
      const double c = best.weight(s.position, acts[i]) + *d;
      if (c < best_cost) {
        best_cost = c;
        pick = i;
      }
    }
    return pure_at(acts.size(), pick);
  });
  return Policy(PolicyKind::kNaiveBestCase, Side::kBlue, enumerate_states(inst), std::move(rows));
}

Policy Policy::red_never_switch(const Instance& inst) {
  auto rows = tabulate(inst, Side::kRed, [&](const GameState& s, const std::vector<int>& acts) {
    return pure_at(acts.size(), std::find(acts.begin(), acts.end(), s.graph) - acts.begin());
  });
  return Policy(PolicyKind::kRedNeverSwitch, Side::kRed, enumerate_states(inst), std::move(rows));
}

Policy Policy::uniform_random(const Instance& inst, Side side) {
  auto rows = tabulate(inst, side, [](const GameState&, const std::vector<int>& acts) {
    return MixedStrategy(acts.size(), 1.0 / static_cast<double>(acts.size()));
  });
  return Policy(PolicyKind::kUniformRandom, side, enumerate_states(inst), std::move(rows));
}

Policy Policy::table(const Instance& inst, Side side, std::vector<MixedStrategy> rows) {
  const StateSpace space = enumerate_states(inst);
  if (rows.size() != space.size()) {
    throw InputError("policy table must have one row per state");
  }
  return Policy(PolicyKind::kTable, side, space, std::move(rows));
}

const MixedStrategy& Policy::distribution(const GameState& s, const Instance& inst) const {
  const MixedStrategy& d = rows_[space_.index(s)];
  const std::size_t expected = legal_count(s, inst, side_);
  double total = 0.0;
  bool ok = d.size() == expected;
  for (double p : d) {
    ok = ok && std::isfinite(p) && p >= 0.0;
    total += p;
  }
  ok = ok && std::abs(total - 1.0) <= kDistributionTol;
  if (!ok) {
    throw ContractError(to_string(kind_) + " policy emits an invalid distribution at state " +
                        to_string(s));
  }
  return d;
}

int default_horizon(const Instance& inst) {
  return 10 * inst.node_count() * (inst.max_ammo() + 1);
}

Trajectory rollout(const Instance& inst, const Policy& blue, const Policy& red,
                   const GameState& s0, double gamma, int horizon, std::uint64_t seed,
                   std::uint64_t rollout_index) {
  if (horizon < 1) throw InputError("horizon must be at least 1");
  if (!inst.contains(s0)) throw InputError("initial state " + to_string(s0) + " is not valid");
  check_space(blue, inst);
  check_space(red, inst);
  Trajectory traj;
  traj.states.push_back(s0);
  GameState s = s0;
  double discount = 1.0;
  for (int t = 0; t < horizon && s.position != inst.goal(); ++t) {
    const std::span<const int> b_opts = blue_actions(s, inst);
    const std::vector<int> r_opts = red_actions(s, inst);
    const std::uint64_t step_key = static_cast<std::uint64_t>(t);
    const int b = b_opts[sample(blue.distribution(s, inst),
                                to_unit(keyed_bits(seed, rollout_index, step_key, 0)))];
    const int r = r_opts[sample(red.distribution(s, inst),
                                to_unit(keyed_bits(seed, rollout_index, step_key, 1)))];
    const double c = stage_cost(s, b, inst);
    traj.blue_actions.push_back(b);
    traj.red_actions.push_back(r);
    traj.stage_costs.push_back(c);
    traj.discounted_total += discount * c;
    discount *= gamma;
    s = step(s, b, r, inst);
    traj.states.push_back(s);
    ++traj.length;
  }
  traj.reached_goal = s.position == inst.goal();
  return traj;
}

CostEstimate estimate_cost(const Instance& inst, const Policy& blue, const Policy& red,
                           const GameState& s0, double gamma, int horizon, int n_rollouts,
                           std::uint64_t seed) {
  if (n_rollouts < 1) throw InputError("need at least one rollout");
  CostEstimate est;
  est.costs.assign(n_rollouts, 0.0);
  std::vector<char> reached(n_rollouts, 0);
  parallel_for(static_cast<std::size_t>(n_rollouts), [&](std::size_t i) {
    const Trajectory t = rollout(inst, blue, red, s0, gamma, horizon, seed, i);
    est.costs[i] = t.discounted_total;
    reached[i] = t.reached_goal ? 1 : 0;
  });
  // Deviations from the first sample keep identical runs at exactly zero spread.
  const double pivot = est.costs.front();
  double sum = 0.0, sum_sq = 0.0;
  int hits = 0;
  for (int i = 0; i < n_rollouts; ++i) {
    const double d = est.costs[i] - pivot;
    sum += d;
    sum_sq += d * d;
    hits += reached[i];
  }
  const double n = static_cast<double>(n_rollouts);
  est.mean = pivot + sum / n;
  if (n_rollouts > 1) {
    const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
    est.std_error = std::sqrt(var / n);
  }
  est.goal_fraction = hits / n;
  return est;
}

std::vector<double> exact_expected_cost(const Instance& inst, const Policy& blue,
                                        const Policy& red, double gamma) {
  check_space(blue, inst);
  check_space(red, inst);
  const StateSpace space = enumerate_states(inst);
  const Eigen::Index n = static_cast<Eigen::Index>(space.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
  for (std::size_t i = 0; i < space.size(); ++i) {
    const GameState s = space.state(i);
    if (s.position == inst.goal()) continue;
    const std::span<const int> b_opts = blue_actions(s, inst);
    const std::vector<int> r_opts = red_actions(s, inst);
    const MixedStrategy& pb = blue.distribution(s, inst);
    const MixedStrategy& pr = red.distribution(s, inst);
    const Eigen::Index row = static_cast<Eigen::Index>(i);
    for (std::size_t bi = 0; bi < b_opts.size(); ++bi) {
      if (pb[bi] == 0.0) continue;
      c[row] += pb[bi] * stage_cost(s, b_opts[bi], inst);
      for (std::size_t ri = 0; ri < r_opts.size(); ++ri) {
        if (pr[ri] == 0.0) continue;
        const std::size_t j = space.index(step(s, b_opts[bi], r_opts[ri], inst));
        a(row, static_cast<Eigen::Index>(j)) -= gamma * pb[bi] * pr[ri];
      }
    }
  }
  const Eigen::VectorXd v = a.fullPivLu().solve(c);
  return {v.data(), v.data() + v.size()};
}

double goal_reach_probability(const Instance& inst, const Policy& blue, const Policy& red,
                              const GameState& s0, int horizon) {
  if (horizon < 1) throw InputError("horizon must be at least 1");
  if (!inst.contains(s0)) throw InputError("initial state " + to_string(s0) + " is not valid");
  check_space(blue, inst);
  check_space(red, inst);
  const StateSpace space = enumerate_states(inst);
  std::vector<double> mass(space.size(), 0.0), next(space.size());
  mass[space.index(s0)] = 1.0;
  for (int t = 0; t < horizon; ++t) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (mass[i] == 0.0) continue;
      const GameState s = space.state(i);
      if (s.position == inst.goal()) {
        next[i] += mass[i];
        continue;
      }
      const std::span<const int> b_opts = blue_actions(s, inst);
      const std::vector<int> r_opts = red_actions(s, inst);
      const MixedStrategy& pb = blue.distribution(s, inst);
      const MixedStrategy& pr = red.distribution(s, inst);
      for (std::size_t bi = 0; bi < b_opts.size(); ++bi) {
        if (pb[bi] == 0.0) continue;
        for (std::size_t ri = 0; ri < r_opts.size(); ++ri) {
          if (pr[ri] == 0.0) continue;
          next[space.index(step(s, b_opts[bi], r_opts[ri], inst))] += mass[i] * pb[bi] * pr[ri];
        }
      }
    }
    mass.swap(next);
  }
  double reached = 0.0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.state(i).position == inst.goal()) reached += mass[i];
  }
  return std::min(1.0, reached);
}

}  // namespace advgraph
