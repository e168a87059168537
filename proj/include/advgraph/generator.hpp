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

#ifndef ADVGRAPH_GENERATOR_HPP_
#define ADVGRAPH_GENERATOR_HPP_

#include <cstdint>

#include "advgraph/game.hpp"

namespace advgraph {

struct GeneratorOptions {
  int n_max = 6;
  int k = 3;
  double edge_prob = 0.5;
  int max_ammo = 6;
  int robots = 1;
  std::uint64_t seed = 0;
  // Sample (i, i) pairs along with the rest of V x V.
  bool sample_self_loops = true;
  int max_retries = 1000;
};

// Directed Erdos-Renyi sample with start and goal at the pair of longest
// finite unweighted distance, nodes that cannot reach the goal pruned, and
// per-edge weights drawn as a random permutation of {2, 4, 8, ...}.
Instance random_instance(const GeneratorOptions& options);

// True when the security bounds coincide at the standard initial state.
bool is_trivial(const Instance& inst, double gamma);

}  // namespace advgraph

#endif  // ADVGRAPH_GENERATOR_HPP_
