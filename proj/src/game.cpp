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

#include "advgraph/game.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "advgraph/errors.hpp"

namespace advgraph {

RedActionGraph::RedActionGraph(int node_count, std::vector<std::pair<int, int>> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 1) throw InputError("red action graph needs at least one node");
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  out_.assign(node_count_, {});
  for (auto [a, b] : edges_) {
    if (a < 1 || a > node_count_ || b < 1 || b > node_count_) {
      throw InputError("red action edge references an invalid graph index");
    }
    out_[a - 1].push_back(b);
  }
}

RedActionGraph RedActionGraph::complete(int node_count) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= node_count; ++a) {
    for (int b = 1; b <= node_count; ++b) edges.emplace_back(a, b);
  }
  return RedActionGraph(node_count, std::move(edges));
}

std::span<const int> RedActionGraph::out_neighbors(int k) const {
  if (k < 1 || k > node_count_) throw InputError("invalid graph index " + std::to_string(k));
  return out_[k - 1];
}

bool RedActionGraph::is_complete() const noexcept {
  return edges_.size() ==
         static_cast<std::size_t>(node_count_) * static_cast<std::size_t>(node_count_);
}

std::vector<std::string> RedActionGraph::validate() const {
  std::vector<std::string> diagnostics;
  for (int k = 1; k <= node_count_; ++k) {
    const auto& out = out_[k - 1];
    if (!std::binary_search(out.begin(), out.end(), k)) {
      diagnostics.push_back("red action graph: node " + std::to_string(k) +
                            " lacks a self-loop");
    }
  }
  // Weak connectivity: undirected flood fill from node 1.
  std::vector<std::vector<int>> undirected(node_count_);
  for (auto [a, b] : edges_) {
    undirected[a - 1].push_back(b);
    undirected[b - 1].push_back(a);
  }
  std::vector<bool> seen(node_count_, false);
  std::vector<int> stack{1};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : undirected[v - 1]) {
      if (!seen[u - 1]) {
        seen[u - 1] = true;
        stack.push_back(u);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    diagnostics.push_back("red action graph is not weakly connected");
  }
  return diagnostics;
}

std::string to_string(const GameState& s) {
  std::ostringstream os;
  os << s.position << "/" << s.graph << "/" << s.ammo;
  return os.str();
}

Instance::Instance(GraphSet graphs, RedActionGraph red, int robots, int max_ammo)
    : graphs_(std::move(graphs)), red_(std::move(red)), robots_(robots), max_ammo_(max_ammo) {
  std::vector<std::string> problems = validate(graphs_);
  for (std::string& d : red_.validate()) problems.push_back(std::move(d));
  if (red_.node_count() != graphs_.size()) {
    problems.push_back("red action graph has " + std::to_string(red_.node_count()) +
                       " nodes but there are " + std::to_string(graphs_.size()) +
                       " graphs");
  }
  if (robots_ < 1) problems.push_back("robot count must be at least 1");
  if (max_ammo_ < 0) problems.push_back("max ammo must be nonnegative");
  if (!problems.empty()) {
    std::string message = "invalid instance:";
    for (const std::string& d : problems) message += "\n  " + d;
    throw InvalidInstance(message);
  }
}

bool Instance::contains(const GameState& s) const noexcept {
  return s.position >= 1 && s.position <= node_count() && s.graph >= 1 &&
         s.graph <= graph_count() && s.ammo >= 0 && s.ammo <= max_ammo_;
}

StateSpace::StateSpace(int node_count, int graph_count, int max_ammo)
    : nodes_(node_count), graphs_(graph_count), max_ammo_(max_ammo) {
  if (nodes_ < 1 || graphs_ < 1 || max_ammo_ < 0) {
    throw InputError("state space dimensions must be positive");
  }
  size_ = static_cast<std::size_t>(nodes_) * static_cast<std::size_t>(graphs_) *
          static_cast<std::size_t>(max_ammo_ + 1);
}

std::size_t StateSpace::index(const GameState& s) const {
  if (s.position < 1 || s.position > nodes_ || s.graph < 1 || s.graph > graphs_ ||
      s.ammo < 0 || s.ammo > max_ammo_) {
    throw InputError("state " + to_string(s) + " is outside the state space");
  }
  const std::size_t ammo_levels = static_cast<std::size_t>(max_ammo_ + 1);
  return (static_cast<std::size_t>(s.position - 1) * graphs_ +
          static_cast<std::size_t>(s.graph - 1)) * ammo_levels +
         static_cast<std::size_t>(s.ammo);
}

GameState StateSpace::state(std::size_t i) const {
  if (i >= size_) throw InputError("state index out of range");
  const std::size_t ammo_levels = static_cast<std::size_t>(max_ammo_ + 1);
  GameState s;
  s.ammo = static_cast<int>(i % ammo_levels);
  i /= ammo_levels;
  s.graph = static_cast<int>(i % graphs_) + 1;
  s.position = static_cast<int>(i / graphs_) + 1;
  return s;
}

std::vector<GameState> StateSpace::all() const {
  std::vector<GameState> states;
  states.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) states.push_back(state(i));
  return states;
}

StateSpace enumerate_states(const Instance& inst) {
  return StateSpace(inst.node_count(), inst.graph_count(), inst.max_ammo());
}

std::span<const int> blue_actions(const GameState& s, const Instance& inst) {
  if (!inst.contains(s)) throw InputError("state " + to_string(s) + " is not valid");
  return inst.graphs().out_neighbors(s.position);
}

std::vector<int> red_actions(const GameState& s, const Instance& inst) {
  if (!inst.contains(s)) throw InputError("state " + to_string(s) + " is not valid");
  if (s.ammo == 0) return {s.graph};
  std::span<const int> out = inst.red_graph().out_neighbors(s.graph);
  return {out.begin(), out.end()};
}

double stage_cost(const GameState& s, int blue_action, const Instance& inst) {
  if (!inst.contains(s)) throw InputError("state " + to_string(s) + " is not valid");
  const PositionGraph& g = inst.graphs().graph(s.graph);
  if (!g.has_edge(s.position, blue_action)) {
    throw InputError("illegal blue action " + std::to_string(blue_action) +
                     " in state " + to_string(s));
  }
  return g.weight(s.position, blue_action);
}

GameState step(const GameState& s, int blue_action, int red_action,
               const Instance& inst) {
  if (!inst.contains(s)) throw InputError("state " + to_string(s) + " is not valid");
  if (!inst.graphs().graph(1).has_edge(s.position, blue_action)) {
    throw InputError("illegal blue action " + std::to_string(blue_action) +
                     " in state " + to_string(s));
  }
  const std::vector<int> options = red_actions(s, inst);
  if (std::find(options.begin(), options.end(), red_action) == options.end()) {
    throw InputError("illegal red action " + std::to_string(red_action) +
                     " in state " + to_string(s));
  }
  return {blue_action, red_action, red_action != s.graph ? s.ammo - 1 : s.ammo};
}

int JointInstance::joint_node(std::vector<int> robot_positions) const {
  std::sort(robot_positions.begin(), robot_positions.end());
  auto it = std::lower_bound(positions.begin(), positions.end(), robot_positions);
  if (it == positions.end() || *it != robot_positions) {
    throw InputError("position vector does not name a joint node");
  }
  return static_cast<int>(it - positions.begin()) + 1;
}

const std::vector<int>& JointInstance::decode(int joint_node) const {
  if (joint_node < 1 || joint_node > static_cast<int>(positions.size())) {
    throw InputError("invalid joint node id " + std::to_string(joint_node));
  }
  return positions[joint_node - 1];
}

namespace {

// All nondecreasing length-m vectors over 1..n, in lexicographic order.
std::vector<std::vector<int>> multisets(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(m, 1);
  while (true) {
    out.push_back(current);
    int i = m - 1;
    while (i >= 0 && current[i] == n) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < m; ++j) current[j] = current[i];
  }
  return out;
}

}  // namespace

JointInstance build_joint(const Instance& inst) {
  const int m = inst.robots();
  const int n = inst.node_count();
  const int k_count = inst.graph_count();
  if (m == 1) {
    std::vector<std::vector<int>> identity;
    identity.reserve(n);
    for (int p = 1; p <= n; ++p) identity.push_back({p});
    return {inst, 1, std::move(identity)};
  }
  if (inst.goal() != n) throw InvalidInstance("joint reduction expects goal = N");

  std::vector<std::vector<int>> nodes = multisets(n, m);
  std::map<std::vector<int>, int> id_of;
  for (std::size_t j = 0; j < nodes.size(); ++j) id_of[nodes[j]] = static_cast<int>(j) + 1;

  std::vector<Edge> edges;
  std::vector<std::vector<double>> weights(k_count);
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const std::vector<int>& from = nodes[j];
    std::vector<std::span<const int>> moves;
    moves.reserve(m);
    for (int p : from) moves.push_back(inst.graphs().out_neighbors(p));
    // Cheapest assignment per target multiset, separately for every graph.
    std::map<int, std::vector<double>> best;
    std::vector<std::size_t> pick(m, 0);
    bool done = false;
    while (!done) {
      std::vector<int> target(m);
      for (int r = 0; r < m; ++r) target[r] = moves[r][pick[r]];
      std::vector<double> cost(k_count, 0.0);
      for (int k = 1; k <= k_count; ++k) {
        const PositionGraph& g = inst.graphs().graph(k);
        for (int r = 0; r < m; ++r) cost[k - 1] += g.weight(from[r], target[r]);
      }
      std::sort(target.begin(), target.end());
      auto [it, inserted] = best.try_emplace(id_of.at(target), k_count, inf);
      for (int k = 0; k < k_count; ++k) it->second[k] = std::min(it->second[k], cost[k]);

      int r = m - 1;
      while (r >= 0 && ++pick[r] == moves[r].size()) {
        pick[r] = 0;
        --r;
      }
      done = r < 0;
    }
    for (const auto& [to, cost] : best) {
      edges.push_back({static_cast<int>(j) + 1, to});
      for (int k = 0; k < k_count; ++k) weights[k].push_back(cost[k]);
    }
  }
  const int joint_n = static_cast<int>(nodes.size());
  std::vector<PositionGraph> graphs;
  for (int k = 0; k < k_count; ++k) {
    graphs.emplace_back(joint_n, joint_n, edges, std::move(weights[k]));
  }
  Instance joint(GraphSet(std::move(graphs)), inst.red_graph(), 1, inst.max_ammo());
  return {std::move(joint), m, std::move(nodes)};
}

GameState initial_state(const JointInstance& joint) {
  return {joint.joint_node(std::vector<int>(joint.robots, 1)), 1,
          joint.instance.max_ammo()};
}

}  // namespace advgraph
