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

#ifndef ADVGRAPH_GAME_HPP_
#define ADVGRAPH_GAME_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "advgraph/graph.hpp"

namespace advgraph {

// Unweighted digraph over graph indices 1..K constraining red's switches.
class RedActionGraph {
 public:
  RedActionGraph(int node_count, std::vector<std::pair<int, int>> edges);
  static RedActionGraph complete(int node_count);

  int node_count() const noexcept { return node_count_; }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  std::span<const int> out_neighbors(int k) const;
  bool is_complete() const noexcept;

  // Self-loops everywhere and weak connectivity.
  std::vector<std::string> validate() const;

  friend bool operator==(const RedActionGraph&, const RedActionGraph&) = default;

 private:
  int node_count_;
  std::vector<std::pair<int, int>> edges_;  // sorted, unique
  std::vector<std::vector<int>> out_;
};

// S(t) = (position, current graph, remaining ammo). Graph index is 1-based.
struct GameState {
  int position = 1;
  int graph = 1;
  int ammo = 0;
  auto operator<=>(const GameState&) const = default;
};

std::string to_string(const GameState& s);  // "p/k/a"

// A fully validated game definition. The constructor throws InvalidInstance
// listing every violated invariant.
class Instance {
 public:
  Instance(GraphSet graphs, RedActionGraph red, int robots, int max_ammo);

  const GraphSet& graphs() const noexcept { return graphs_; }
  const RedActionGraph& red_graph() const noexcept { return red_; }
  int robots() const noexcept { return robots_; }
  int max_ammo() const noexcept { return max_ammo_; }

  int node_count() const noexcept { return graphs_.node_count(); }
  int goal() const noexcept { return graphs_.goal(); }
  int graph_count() const noexcept { return graphs_.size(); }

  bool contains(const GameState& s) const noexcept;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  GraphSet graphs_;
  RedActionGraph red_;
  int robots_;
  int max_ammo_;
};

// Ordered, bijective enumeration of every (position, graph, ammo) triple:
// position-major, then graph, then ammo.
class StateSpace {
 public:
  StateSpace() = default;
  StateSpace(int node_count, int graph_count, int max_ammo);

  std::size_t size() const noexcept { return size_; }
  std::size_t index(const GameState& s) const;
  GameState state(std::size_t i) const;
  std::vector<GameState> all() const;

  int node_count() const noexcept { return nodes_; }
  int graph_count() const noexcept { return graphs_; }
  int max_ammo() const noexcept { return max_ammo_; }

  friend bool operator==(const StateSpace&, const StateSpace&) = default;

 private:
  int nodes_ = 0;
  int graphs_ = 0;
  int max_ammo_ = 0;
  std::size_t size_ = 0;
};

StateSpace enumerate_states(const Instance& inst);

// Out-neighbors of the current position, ascending.
std::span<const int> blue_actions(const GameState& s, const Instance& inst);
// Red's options: out-neighbors in the action graph, or only the current
// graph once ammo is exhausted.
std::vector<int> red_actions(const GameState& s, const Instance& inst);

// Weight of the traversed edge on the current (pre-switch) graph.
double stage_cost(const GameState& s, int blue_action, const Instance& inst);

// Deterministic transition; ammo drops by one iff the graph changes.
GameState step(const GameState& s, int blue_action, int red_action,
               const Instance& inst);

// Single-robot encoding of an M-robot team over indistinguishable robots.
struct JointInstance {
  Instance instance;  // robots() == 1
  int robots = 1;
  // Element j is the ascending position vector of joint node j + 1.
  std::vector<std::vector<int>> positions;

  int joint_node(std::vector<int> robot_positions) const;
  const std::vector<int>& decode(int joint_node) const;
};

JointInstance build_joint(const Instance& inst);

// Standard initial state: every robot at node 1, graph 1, full ammo.
GameState initial_state(const JointInstance& joint);

}  // namespace advgraph

#endif  // ADVGRAPH_GAME_HPP_
