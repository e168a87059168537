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

#ifndef ADVGRAPH_BOUNDS_HPP_
#define ADVGRAPH_BOUNDS_HPP_

#include <optional>
#include <vector>

#include "advgraph/game.hpp"

namespace advgraph {

// 1 - C_min / d_max. Throws InfeasibleCondition if any edge other than the
// goal self-loop costs zero on some graph.
double gamma_threshold(const Instance& inst);

struct BlueSecurity {
  int action = 0;
  double upper = 0.0;
};

struct RedSecurity {
  int action = 0;
  double lower = 0.0;
};

struct BoundOptions {
  // Exponent applied to gamma in the red security bound. Defaults to N - 1
  // with N the node count of the position graph in play.
  std::optional<int> red_discount_exponent;
};

// Security strategies for both players with the distance tables computed
// once per instance.
class SecurityBounds {
 public:
  SecurityBounds(const Instance& inst, double gamma, BoundOptions options = {});

  // argmin over p+ of W^k(p, p+) + d_high(p+, goal); ties to the lowest id.
  BlueSecurity blue(const GameState& s) const;
  // argmax over k+ of min over p+ of W^k(p, p+) + gamma^e d_{k+}(p+, goal);
  // ties to the lowest graph index.
  RedSecurity red(const GameState& s) const;

  double gamma() const noexcept { return gamma_; }
  const Instance& instance() const noexcept { return *inst_; }
  // Distance to goal on the highest-cost graph, by node id - 1.
  const std::vector<double>& high_distance() const noexcept { return high_; }

 private:
  const Instance* inst_;
  double gamma_;
  double red_discount_;
  std::vector<double> high_;
  std::vector<std::vector<double>> per_graph_;  // [k - 1][node - 1]
};

BlueSecurity blue_security(const GameState& s, const Instance& inst);
RedSecurity red_security(const GameState& s, const Instance& inst, double gamma,
                         BoundOptions options = {});

struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
};

struct BoundTable {
  StateSpace space;
  std::vector<BoundPair> bounds;  // indexed like space
  const BoundPair& at(const GameState& s) const { return bounds[space.index(s)]; }
};

BoundTable bound_table(const Instance& inst, double gamma, BoundOptions options = {});

}  // namespace advgraph

#endif  // ADVGRAPH_BOUNDS_HPP_
