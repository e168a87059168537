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

#include "advgraph/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "advgraph/errors.hpp"

namespace advgraph {
namespace {

std::vector<double> finite_distances(const PositionGraph& g) {
  std::vector<double> out;
  out.reserve(g.node_count());
  for (const Distance& d : distances_to(g, g.goal())) {
    if (!d) throw InvalidInstance("goal is unreachable from some node");
    out.push_back(*d);
  }
  return out;
}

}  // namespace

double gamma_threshold(const Instance& inst) {
  const int goal = inst.goal();
  double c_min = std::numeric_limits<double>::infinity();
  for (const PositionGraph& g : inst.graphs().graphs()) {
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const Edge& edge = g.edges()[e];
      if (edge.from == goal && edge.to == goal) continue;
      c_min = std::min(c_min, g.weights()[e]);
    }
  }
  if (!std::isfinite(c_min)) return 0.0;  // only the goal self-loop exists
  if (c_min <= 0.0) {
    throw InfeasibleCondition(
        "a non-goal edge has zero cost, so the discount condition cannot hold");
  }
  double d_max = 0.0;
  for (double d : finite_distances(highest_cost_graph(inst.graphs()))) d_max = std::max(d_max, d);
  if (d_max <= 0.0) return 0.0;
  return 1.0 - c_min / d_max;
}

SecurityBounds::SecurityBounds(const Instance& inst, double gamma, BoundOptions options)
    : inst_(&inst), gamma_(gamma) {
  const int exponent = options.red_discount_exponent.value_or(inst.node_count() - 1);
  red_discount_ = std::pow(gamma, exponent);
  high_ = finite_distances(highest_cost_graph(inst.graphs()));
  for (const PositionGraph& g : inst.graphs().graphs()) per_graph_.push_back(finite_distances(g));
}

BlueSecurity SecurityBounds::blue(const GameState& s) const {
  const PositionGraph& g = inst_->graphs().graph(s.graph);
  BlueSecurity best{0, std::numeric_limits<double>::infinity()};
  for (int next : blue_actions(s, *inst_)) {
    const double candidate = g.weight(s.position, next) + high_[next - 1];
    if (candidate < best.upper) best = {next, candidate};
  }
  return best;
}

RedSecurity SecurityBounds::red(const GameState& s) const {
  const PositionGraph& g = inst_->graphs().graph(s.graph);
  RedSecurity best{0, -std::numeric_limits<double>::infinity()};
  for (int k_next : red_actions(s, *inst_)) {
    const std::vector<double>& dist = per_graph_[k_next - 1];
    double blue_best = std::numeric_limits<double>::infinity();
    for (int next : blue_actions(s, *inst_)) {
      blue_best = std::min(blue_best, g.weight(s.position, next) + red_discount_ * dist[next - 1]);
    }
    if (blue_best > best.lower) best = {k_next, blue_best};
  }
  return best;
}

BlueSecurity blue_security(const GameState& s, const Instance& inst) {
  return SecurityBounds(inst, 1.0).blue(s);
}

RedSecurity red_security(const GameState& s, const Instance& inst, double gamma,
                         BoundOptions options) {
  return SecurityBounds(inst, gamma, options).red(s);
}

BoundTable bound_table(const Instance& inst, double gamma, BoundOptions options) {
  const SecurityBounds security(inst, gamma, options);
  BoundTable table{enumerate_states(inst), {}};
  table.bounds.reserve(table.space.size());
  for (std::size_t i = 0; i < table.space.size(); ++i) {
    const GameState s = table.space.state(i);
    table.bounds.push_back({security.red(s).lower, security.blue(s).upper});
  }
  return table;
}

}  // namespace advgraph
