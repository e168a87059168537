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

#include <gtest/gtest.h>

#include <set>

#include "advgraph/errors.hpp"
#include "advgraph/generator.hpp"
#include "oracles.hpp"

namespace advgraph {
namespace {

std::vector<int> as_vec(std::span<const int> s) { return {s.begin(), s.end()}; }

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(RedActionGraph, Validation) {
  EXPECT_TRUE(RedActionGraph::complete(3).validate().empty());
  EXPECT_TRUE(RedActionGraph::complete(3).is_complete());
  EXPECT_FALSE(RedActionGraph(2, {{1, 1}, {1, 2}}).validate().empty());
  EXPECT_FALSE(RedActionGraph(3, {{1, 1}, {2, 2}, {3, 3}, {1, 2}}).validate().empty());
  EXPECT_THROW(RedActionGraph(2, {{1, 3}}), InputError);
}

TEST(Instance, RejectsInvalidParts) {
  const Instance f1 = oracle::f1();
  EXPECT_THROW(Instance(f1.graphs(), RedActionGraph::complete(3), 1, 1), InvalidInstance);
  EXPECT_THROW(Instance(f1.graphs(), RedActionGraph::complete(2), 0, 1), InvalidInstance);
  EXPECT_THROW(Instance(f1.graphs(), RedActionGraph::complete(2), 1, -1), InvalidInstance);
  const std::vector<Edge> edges = {{1, 2}, {1, 3}, {2, 3}, {3, 3}};
  EXPECT_THROW(oracle::make_instance(3, 3, edges, {{1, 5, 4, 0.5}}, 1), InvalidInstance);
}

TEST(Actions, BlueActions) {
  const Instance f1 = oracle::f1();
  EXPECT_EQ(as_vec(blue_actions({1, 1, 1}, f1)), (std::vector<int>{2, 3}));
  EXPECT_EQ(as_vec(blue_actions({3, 2, 0}, f1)), (std::vector<int>{3}));
  const Instance f2 = oracle::f2(0);
  EXPECT_EQ(as_vec(blue_actions({2, 2, 0}, f2)), (std::vector<int>{4}));
  EXPECT_THROW(blue_actions({4, 1, 0}, f1), InputError);
}

TEST(Actions, RedActions) {
  const Instance f1 = oracle::f1();
  EXPECT_EQ(red_actions({1, 1, 1}, f1), (std::vector<int>{1, 2}));
  EXPECT_EQ(red_actions({1, 2, 0}, f1), (std::vector<int>{2}));

  const std::vector<Edge> edges = {{1, 2}, {2, 2}};
  const Instance cyc(GraphSet({PositionGraph(2, 2, edges, {1, 0}),
                               PositionGraph(2, 2, edges, {2, 0}),
                               PositionGraph(2, 2, edges, {3, 0})}),
                     RedActionGraph(3, {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 3}, {3, 1}}), 1, 5);
  EXPECT_EQ(red_actions({1, 2, 5}, cyc), (std::vector<int>{2, 3}));
  EXPECT_EQ(red_actions({1, 2, 0}, cyc), (std::vector<int>{2}));
}

TEST(Dynamics, StageCost) {
  const Instance f1 = oracle::f1();
  EXPECT_EQ(stage_cost({1, 1, 1}, 2, f1), 1);
  EXPECT_EQ(stage_cost({1, 2, 0}, 3, f1), 5);
  EXPECT_EQ(stage_cost({3, 2, 1}, 3, f1), 0);
  EXPECT_THROW(stage_cost({2, 1, 0}, 1, f1), InputError);
}

TEST(Dynamics, Step) {
  const Instance f1 = oracle::f1();
  EXPECT_EQ(step({1, 1, 1}, 2, 2, f1), (GameState{2, 2, 0}));
  EXPECT_EQ(step({1, 1, 1}, 2, 1, f1), (GameState{2, 1, 1}));
  EXPECT_EQ(step({3, 2, 0}, 3, 2, f1), (GameState{3, 2, 0}));
  EXPECT_THROW(step({1, 1, 0}, 2, 2, f1), InputError);
  EXPECT_THROW(step({1, 1, 1}, 1, 1, f1), InputError);
}

TEST(Dynamics, AmmoDropsExactlyOnSwitch) {
  GeneratorOptions opts;
  opts.max_ammo = 3;
  const Instance inst = random_instance(opts);
  for (const GameState& s : enumerate_states(inst).all()) {
    for (int b : blue_actions(s, inst)) {
      for (int r : red_actions(s, inst)) {
        const GameState t = step(s, b, r, inst);
        EXPECT_EQ(t, step(s, b, r, inst));
        EXPECT_EQ(t.ammo, r == s.graph ? s.ammo : s.ammo - 1);
        EXPECT_GE(t.ammo, 0);
      }
    }
    if (s.position == inst.goal()) {
      for (int r : red_actions(s, inst)) {
        EXPECT_EQ(stage_cost(s, inst.goal(), inst), 0);
        EXPECT_EQ(step(s, inst.goal(), r, inst).position, inst.goal());
      }
    }
  }
}

TEST(StateSpace, SizesAndBijection) {
  EXPECT_EQ(enumerate_states(oracle::f1(1)).size(), 12u);
  EXPECT_EQ(enumerate_states(oracle::f2(0)).size(), 8u);
  const StateSpace space = enumerate_states(oracle::f2(3));
  for (std::size_t i = 0; i < space.size(); ++i) EXPECT_EQ(space.index(space.state(i)), i);
  EXPECT_EQ(space.state(0), (GameState{1, 1, 0}));
  EXPECT_EQ(space.state(1), (GameState{1, 1, 1}));
  EXPECT_EQ(space.state(4), (GameState{1, 2, 0}));
  EXPECT_THROW(space.index({5, 1, 0}), InputError);
}

TEST(Joint, F1TwoRobots) {
  const JointInstance joint = build_joint(oracle::f1(1, 2));
  const std::vector<std::vector<int>> expect = {{1, 1}, {1, 2}, {1, 3},
                                                {2, 2}, {2, 3}, {3, 3}};
  EXPECT_EQ(joint.positions, expect);
  EXPECT_EQ(joint.instance.node_count(), 6);
  EXPECT_EQ(joint.instance.goal(), 6);
  EXPECT_EQ(joint.instance.robots(), 1);
  const int from = joint.joint_node({1, 1});
  const int to = joint.joint_node({2, 2});
  EXPECT_EQ(joint.instance.graphs().graph(1).weight(from, to), 2);
  EXPECT_EQ(joint.instance.graphs().graph(2).weight(from, to), 8);
  // {1,2} -> {2,3}: either (1->2, 2->3) or (1->3, 2->2 missing); only the first exists.
  EXPECT_EQ(joint.instance.graphs().graph(1).weight(joint.joint_node({2, 1}),
                                                   joint.joint_node({2, 3})),
            5);
  EXPECT_EQ(joint.decode(6), (std::vector<int>{3, 3}));
  EXPECT_EQ(initial_state(joint), (GameState{1, 1, 1}));
}

TEST(Joint, MinAssignmentWeight) {
  // {1,2} -> {2,3}: 1->2 then 2->3, or 1->3 then 2->2.
  const std::vector<Edge> edges = {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
  const Instance inst = oracle::make_instance(3, 3, edges, {{1, 6, 2, 4, 0}}, 0, 2);
  const JointInstance joint = build_joint(inst);
  const double w = joint.instance.graphs().graph(1).weight(joint.joint_node({1, 2}),
                                                          joint.joint_node({2, 3}));
  EXPECT_EQ(w, 5);
}

TEST(Joint, SingleRobotPassthrough) {
  const Instance f2 = oracle::f2();
  const JointInstance joint = build_joint(f2);
  EXPECT_EQ(joint.instance, f2);
  EXPECT_EQ(joint.positions.size(), 4u);
}

TEST(Joint, NodeCountFormula) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<Edge> edges;
    std::vector<double> w;
    for (int i = 1; i < n; ++i) {
      edges.push_back({i, i + 1});
      w.push_back(1);
    }
    edges.push_back({n, n});
    w.push_back(0);
    for (int m = 1; m <= 3; ++m) {
      const Instance inst = oracle::make_instance(n, n, edges, {w}, 0, m);
      const JointInstance joint = build_joint(inst);
      EXPECT_EQ(joint.instance.node_count(), binomial(n + m - 1, m)) << n << " " << m;
      std::set<std::vector<int>> unique(joint.positions.begin(), joint.positions.end());
      EXPECT_EQ(unique.size(), joint.positions.size());
      EXPECT_TRUE(std::is_sorted(joint.positions.begin(), joint.positions.end()));
    }
  }
}

TEST(Joint, RedFrozenValueIsTwiceDistance) {
  const Instance f1 = oracle::f1(0, 2);
  const JointInstance joint = build_joint(f1);
  const oracle::ValueTable v = oracle::value_iteration(joint.instance, 1.0);
  const int start = joint.joint_node({1, 1});
  EXPECT_NEAR(v[start - 1][0][0], 2 * 5.0, 1e-9);
  EXPECT_NEAR(v[start - 1][1][0], 2 * 5.0, 1e-9);
}

}  // namespace
}  // namespace advgraph
