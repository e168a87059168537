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

#include "advgraph/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "advgraph/bounds.hpp"
#include "advgraph/errors.hpp"

namespace advgraph {
namespace {

// Everything about one state's stage game that does not depend on V.
struct StageTable {
  int rows = 0;
  int cols = 0;
  std::vector<double> cost;         // by column
  std::vector<std::size_t> next;    // row-major successor state indices
};

std::vector<StageTable> build_stage_tables(const Instance& inst, const StateSpace& space) {
  std::vector<StageTable> tables(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const GameState s = space.state(i);
    const std::span<const int> blue = blue_actions(s, inst);
    const std::vector<int> red = red_actions(s, inst);
    StageTable& t = tables[i];
    t.rows = static_cast<int>(red.size());
    t.cols = static_cast<int>(blue.size());
    const PositionGraph& g = inst.graphs().graph(s.graph);
    for (int b : blue) t.cost.push_back(g.weight(s.position, b));
    t.next.reserve(red.size() * blue.size());
    for (int r : red) {
      const int ammo = r != s.graph ? s.ammo - 1 : s.ammo;
      for (int b : blue) t.next.push_back(space.index({b, r, ammo}));
    }
  }
  return tables;
}

void check_options(const SolveOptions& options) {
  if (!(options.gamma > 0.0 && options.gamma <= 1.0)) {
    throw InputError("discount factor must lie in (0, 1]");
  }
  if (!(options.tol > 0.0)) throw InputError("tolerance must be positive");
  if (options.max_iter < 1) throw InputError("max_iter must be at least 1");
}

// Jacobi sweeps over `active`; every other entry of `values` stays fixed and
// acts as a terminal payment.
struct SweepResult {
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

SweepResult sweep_until_converged(const std::vector<std::size_t>& active,
                                  const std::vector<StageTable>& tables,
                                  const SolveOptions& options, std::vector<double>& values,
                                  Solution& out) {
  SweepResult result;
  std::vector<double> next(active.size());
  std::vector<double> payoff;
  for (int iter = 1; iter <= options.max_iter; ++iter) {
    double residual = 0.0;
    for (std::size_t a = 0; a < active.size(); ++a) {
      const std::size_t i = active[a];
      const StageTable& t = tables[i];
      payoff.resize(t.next.size());
      for (int r = 0; r < t.rows; ++r) {
        for (int c = 0; c < t.cols; ++c) {
          const std::size_t e = static_cast<std::size_t>(r) * t.cols + c;
          payoff[e] = t.cost[c] + options.gamma * values[t.next[e]];
        }
      }
      MatrixGameSolution sol = solve(MatrixGame(t.rows, t.cols, payoff));
      next[a] = sol.value;
      residual = std::max(residual, std::abs(sol.value - values[i]));
      out.red_policy[i] = std::move(sol.red);
      out.blue_policy[i] = std::move(sol.blue);
    }
    for (std::size_t a = 0; a < active.size(); ++a) values[active[a]] = next[a];
    result.iterations = iter;
    result.residual = residual;
    if (residual <= options.tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

Solution empty_solution(const Instance& inst, const SolveOptions& options) {
  if (inst.robots() != 1) {
    throw InputError("solver expects a single-robot instance; apply build_joint first");
  }
  check_options(options);
  Solution sol;
  sol.space = enumerate_states(inst);
  sol.gamma = options.gamma;
  sol.value.assign(sol.space.size(), 0.0);
  sol.blue_policy.resize(sol.space.size());
  sol.red_policy.resize(sol.space.size());
  if (options.warm_start_upper) {
    const BoundTable table = bound_table(inst, options.gamma);
    for (std::size_t i = 0; i < sol.space.size(); ++i) sol.value[i] = table.bounds[i].upper;
  }
  return sol;
}

}  // namespace

MatrixGame q_matrix(const GameState& s, std::span<const double> values,
                    const Instance& inst, double gamma) {
  const StateSpace space = enumerate_states(inst);
  if (values.size() != space.size()) {
    throw InputError("value snapshot does not cover the state space");
  }
  const std::span<const int> blue = blue_actions(s, inst);
  const std::vector<int> red = red_actions(s, inst);
  std::vector<double> payoff;
  payoff.reserve(red.size() * blue.size());
  for (int r : red) {
    for (int b : blue) {
      payoff.push_back(stage_cost(s, b, inst) + gamma * values[space.index(step(s, b, r, inst))]);
    }
  }
  return MatrixGame(static_cast<int>(red.size()), static_cast<int>(blue.size()),
                    std::move(payoff));
}

Solution shapley_solve(const Instance& inst, const SolveOptions& options) {
  Solution sol = empty_solution(inst, options);
  const std::vector<StageTable> tables = build_stage_tables(inst, sol.space);
  std::vector<std::size_t> active(sol.space.size());
  std::iota(active.begin(), active.end(), std::size_t{0});
  const SweepResult r = sweep_until_converged(active, tables, options, sol.value, sol);
  sol.iterations = r.iterations;
  sol.residual = r.residual;
  sol.converged = r.converged;
  return sol;
}

Solution solve_by_subgames(const Instance& inst, const SolveOptions& options) {
  Solution sol = empty_solution(inst, options);
  const std::vector<StageTable> tables = build_stage_tables(inst, sol.space);
  sol.converged = true;
  for (int ammo = 0; ammo <= inst.max_ammo(); ++ammo) {
    for (int k = 1; k <= inst.graph_count(); ++k) {
      std::vector<std::size_t> layer;
      layer.reserve(inst.node_count());
      for (int p = 1; p <= inst.node_count(); ++p) layer.push_back(sol.space.index({p, k, ammo}));
      const SweepResult r = sweep_until_converged(layer, tables, options, sol.value, sol);
      sol.iterations += r.iterations;
      sol.residual = std::max(sol.residual, r.residual);
      sol.converged = sol.converged && r.converged;
    }
  }
  return sol;
}

namespace {

struct DominationCheck {
  bool dominated = false;
  double margin = 0.0;
};

// Both p1 and p2 are out-neighbors of p0; checks every (graph, ammo, red
// response) combination at p0.
DominationCheck check_domination(const Instance& inst, const BoundTable& bounds, double gamma,
                                 int p0, int p1, int p2) {
  DominationCheck out{true, std::numeric_limits<double>::infinity()};
  for (int k = 1; k <= inst.graph_count(); ++k) {
    const PositionGraph& g = inst.graphs().graph(k);
    const double c1 = g.weight(p0, p1);
    const double c2 = g.weight(p0, p2);
    for (int ammo = 0; ammo <= inst.max_ammo(); ++ammo) {
      const GameState s{p0, k, ammo};
      for (int r : red_actions(s, inst)) {
        const int next_ammo = r != k ? ammo - 1 : ammo;
        const double lhs = c1 + gamma * bounds.at({p1, r, next_ammo}).lower;
        const double rhs = c2 + gamma * bounds.at({p2, r, next_ammo}).upper;
        out.margin = std::min(out.margin, lhs - rhs);
        if (!(lhs > rhs)) {
          out.dominated = false;
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace

PruneReport prune_dominated(const Instance& inst, double gamma) {
  if (inst.robots() != 1) {
    throw InputError("pruning expects a single-robot instance; apply build_joint first");
  }
  NodeRelabeling identity;
  for (int p = 1; p <= inst.node_count(); ++p) {
    identity.old_to_new.push_back(p);
    identity.new_to_old.push_back(p);
  }
  PruneReport report{inst, identity, {}, 0, true};

  while (true) {
    const Instance& current = report.reduced;
    if (gamma < gamma_threshold(current)) {
      report.certified = false;
      return report;
    }
    const BoundTable bounds = bound_table(current, gamma);
    std::vector<std::vector<int>> drop(current.node_count());
    for (int p0 = 1; p0 <= current.node_count(); ++p0) {
      const std::span<const int> actions = current.graphs().out_neighbors(p0);
      for (int p1 : actions) {
        for (int p2 : actions) {
          if (p2 == p1) continue;
          const DominationCheck check = check_domination(current, bounds, gamma, p0, p1, p2);
          if (!check.dominated) continue;
          drop[p0 - 1].push_back(p1);
          const auto& back = report.relabeling.new_to_old;
          report.removed.push_back({{back[p0 - 1], back[p1 - 1]}, back[p2 - 1], check.margin});
          break;
        }
      }
      if (!actions.empty() && drop[p0 - 1].size() == actions.size()) {
        throw ContractError("pruning would remove every move out of node " +
                            std::to_string(report.relabeling.new_to_old[p0 - 1]));
      }
    }
    ++report.passes;
    bool any = false;
    for (const auto& d : drop) any = any || !d.empty();
    if (!any) return report;

    std::vector<PositionGraph> graphs;
    for (const PositionGraph& g : current.graphs().graphs()) {
      std::vector<Edge> edges;
      std::vector<double> weights;
      for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const Edge& edge = g.edges()[e];
        const auto& d = drop[edge.from - 1];
        if (std::find(d.begin(), d.end(), edge.to) != d.end()) continue;
        edges.push_back(edge);
        weights.push_back(g.weights()[e]);
      }
      graphs.emplace_back(g.node_count(), g.goal(), std::move(edges), std::move(weights));
    }
    PrunedGraphSet pruned = prune_unreachable(GraphSet(std::move(graphs)));

    NodeRelabeling composed;
    composed.old_to_new.assign(inst.node_count(), 0);
    for (int old = 1; old <= inst.node_count(); ++old) {
      const int mid = report.relabeling.old_to_new[old - 1];
      if (mid != 0) composed.old_to_new[old - 1] = pruned.relabeling.old_to_new[mid - 1];
    }
    for (int mid : pruned.relabeling.new_to_old) {
      composed.new_to_old.push_back(report.relabeling.new_to_old[mid - 1]);
    }
    report.reduced = Instance(std::move(pruned.graphs), current.red_graph(), 1, current.max_ammo());
    report.relabeling = std::move(composed);
  }
}

}  // namespace advgraph
