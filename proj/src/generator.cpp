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

#include "advgraph/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "advgraph/bounds.hpp"
#include "advgraph/errors.hpp"
#include "advgraph/rng.hpp"

namespace advgraph {
namespace {

using Adjacency = std::vector<std::vector<bool>>;  // 0-based

std::vector<int> bfs_hops(const Adjacency& adj, int src) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> hops(n, -1);
  std::queue<int> frontier;
  hops[src] = 0;
  frontier.push(src);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int u = 0; u < n; ++u) {
      if (adj[v][u] && hops[u] < 0) {
        hops[u] = hops[v] + 1;
        frontier.push(u);
      }
    }
  }
  return hops;
}

std::optional<Instance> try_sample(const GeneratorOptions& o, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int n = o.n_max;
  Adjacency adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j && !o.sample_self_loops) continue;
      adj[i][j] = rng.uniform() < o.edge_prob;
    }
  }

  int start = -1, goal = -1, longest = 0;
  for (int s = 0; s < n; ++s) {
    const std::vector<int> hops = bfs_hops(adj, s);
    for (int g = 0; g < n; ++g) {
      if (g != s && hops[g] > longest) {
        longest = hops[g];
        start = s;
        goal = g;
      }
    }
  }
  if (start < 0) return std::nullopt;

  // start -> 1, remaining nodes in ascending order, goal -> n.
  std::vector<int> new_id(n, 0);
  int next = 1;
  new_id[start] = next++;
  for (int v = 0; v < n; ++v) {
    if (v != start && v != goal) new_id[v] = next++;
  }
  new_id[goal] = n;

  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    if (i == goal) continue;  // the game ends at the goal
    for (int j = 0; j < n; ++j) {
      if (adj[i][j]) edges.push_back({new_id[i], new_id[j]});
    }
  }
  edges.push_back({n, n});
  const PositionGraph topology(n, n, edges, std::vector<double>(edges.size(), 0.0));
  const PositionGraph pruned = prune_unreachable(topology).graph;

  std::vector<double> weight_set(o.k);
  for (int k = 0; k < o.k; ++k) weight_set[k] = std::ldexp(1.0, k + 1);
  std::vector<std::vector<double>> weights(o.k);
  const int pruned_goal = pruned.goal();
  for (const Edge& e : pruned.edges()) {
    if (e.from == e.to) {
      const double w = e.from == pruned_goal ? 0.0 : 1.0;
      for (auto& wk : weights) wk.push_back(w);
      continue;
    }
    std::vector<double> perm = weight_set;
    for (int i = o.k - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    }
    for (int k = 0; k < o.k; ++k) weights[k].push_back(perm[k]);
  }
  std::vector<PositionGraph> graphs;
  for (auto& wk : weights) graphs.push_back(pruned.with_weights(std::move(wk)));
  return Instance(GraphSet(std::move(graphs)), RedActionGraph::complete(o.k), o.robots,
                  o.max_ammo);
}

}  // namespace

Instance random_instance(const GeneratorOptions& o) {
  if (o.n_max < 2) throw InputError("n_max must be at least 2");
  if (o.k < 1) throw InputError("k must be at least 1");
  if (o.k > 60) throw InputError("k is too large for the weight set");
  if (!(o.edge_prob >= 0.0 && o.edge_prob <= 1.0)) {
    throw InputError("edge probability must lie in [0, 1]");
  }
  if (o.max_ammo < 0) throw InputError("ammo must be nonnegative");
  if (o.robots < 1) throw InputError("robot count must be at least 1");
  if (o.max_retries < 0) throw InputError("max_retries must be nonnegative");
  for (int attempt = 0; attempt <= o.max_retries; ++attempt) {
    const std::uint64_t seed =
        attempt == 0 ? o.seed : keyed_bits(o.seed, static_cast<std::uint64_t>(attempt));
    if (std::optional<Instance> inst = try_sample(o, seed)) return *std::move(inst);
  }
  throw InvalidInstance("no start/goal pair with a finite distance after " +
                        std::to_string(o.max_retries + 1) + " samples");
}

bool is_trivial(const Instance& inst, double gamma) {
  const JointInstance joint = build_joint(inst);
  const GameState s0 = initial_state(joint);
  const SecurityBounds bounds(joint.instance, gamma);
  return std::abs(bounds.blue(s0).upper - bounds.red(s0).lower) <= 1e-9;
}

}  // namespace advgraph
