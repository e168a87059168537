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

#include <gtest/gtest.h>

#include <random>

#include "advgraph/errors.hpp"
#include "advgraph/generator.hpp"
#include "advgraph/simulator.hpp"
#include "oracles.hpp"

namespace advgraph {
namespace {

std::vector<Instance> random_instances(int count, int max_ammo) {
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    GeneratorOptions opts;
    opts.n_max = 4 + i % 3;
    opts.max_ammo = max_ammo;
    opts.seed = 100 + i;
    out.push_back(random_instance(opts));
  }
  return out;
}

TEST(GammaThreshold, Fixtures) {
  EXPECT_DOUBLE_EQ(gamma_threshold(oracle::f1()), 0.8);
  EXPECT_DOUBLE_EQ(gamma_threshold(oracle::f2()), 1.0 - 1.0 / 11.0);
  const Instance one = oracle::make_instance(2, 2, {{1, 2}, {2, 2}}, {{3, 0}, {3, 0}}, 1);
  EXPECT_DOUBLE_EQ(gamma_threshold(one), 0.0);
}

TEST(GammaThreshold, ZeroCostEdgeIsInfeasible) {
  const Instance z = oracle::make_instance(3, 3, {{1, 2}, {2, 3}, {3, 3}},
                                           {{0, 1, 0}, {1, 1, 0}}, 1);
  EXPECT_THROW(gamma_threshold(z), InfeasibleCondition);
}

TEST(BlueSecurity, Fixtures) {
  const Instance f1 = oracle::f1();
  const BlueSecurity b1 = blue_security({1, 1, 1}, f1);
  EXPECT_EQ(b1.action, 2);
  EXPECT_EQ(b1.upper, 5);
  const BlueSecurity b1g2 = blue_security({1, 2, 1}, f1);
  EXPECT_EQ(b1g2.action, 3);
  EXPECT_EQ(b1g2.upper, 5);
  const BlueSecurity b2 = blue_security({2, 2, 0}, f1);
  EXPECT_EQ(b2.action, 3);
  EXPECT_EQ(b2.upper, 1);
  const BlueSecurity g = blue_security({3, 1, 1}, f1);
  EXPECT_EQ(g.action, 3);
  EXPECT_EQ(g.upper, 0);
}

TEST(RedSecurity, Fixtures) {
  const Instance f1 = oracle::f1();
  const RedSecurity r1 = red_security({1, 1, 1}, f1, 1.0);
  EXPECT_EQ(r1.action, 1);
  EXPECT_DOUBLE_EQ(r1.lower, 5.0);
  const RedSecurity r9 = red_security({1, 1, 1}, f1, 0.9);
  EXPECT_EQ(r9.action, 1);
  EXPECT_NEAR(r9.lower, 4.24, 1e-12);
  const RedSecurity frozen = red_security({1, 2, 0}, f1, 0.9);
  EXPECT_EQ(frozen.action, 2);
  EXPECT_NEAR(frozen.lower, std::min(4 + 0.81 * 1, 5.0), 1e-12);
  EXPECT_EQ(red_security({3, 2, 1}, f1, 0.9).lower, 0);
}

TEST(RedSecurity, ExponentKnob) {
  const Instance f1 = oracle::f1();
  BoundOptions opts;
  opts.red_discount_exponent = 1;
  EXPECT_NEAR(red_security({1, 1, 1}, f1, 0.9, opts).lower, std::min(1 + 0.9 * 4, 5.0), 1e-12);
}

TEST(BoundTable, Fixtures) {
  const Instance f1 = oracle::f1();
  const BoundTable t = bound_table(f1, 0.999);
  for (int k = 1; k <= 2; ++k) {
    for (int a = 0; a <= 1; ++a) {
      EXPECT_EQ(t.at({1, k, a}).upper, 5);
      EXPECT_EQ(t.at({3, k, a}).upper, 0);
      EXPECT_EQ(t.at({3, k, a}).lower, 0);
    }
  }
  const BoundTable t2 = bound_table(oracle::f2(), 1.0);
  // d on the highest-cost graph from node 2 and node 3 is 10.
  EXPECT_EQ(t2.at({1, 1, 1}).upper, 11);
  EXPECT_DOUBLE_EQ(t2.at({1, 1, 1}).lower, 2);
}

TEST(BoundTable, UpperNeverExceedsHighDistance) {
  for (const Instance& inst : random_instances(20, 2)) {
    const SecurityBounds sb(inst, 0.99);
    for (const GameState& s : enumerate_states(inst).all()) {
      EXPECT_LE(sb.blue(s).upper, sb.high_distance()[s.position - 1] + 1e-12);
      EXPECT_LE(sb.red(s).lower, sb.blue(s).upper + 1e-12);
    }
  }
}

TEST(BoundTable, SandwichesOracleValue) {
  for (const Instance& inst : random_instances(12, 2)) {
    const double gamma = std::max(0.99, gamma_threshold(inst));
    const BoundTable t = bound_table(inst, gamma);
    const oracle::ValueTable v = oracle::value_iteration(inst, gamma);
    for (const GameState& s : enumerate_states(inst).all()) {
      const double value = v[s.position - 1][s.graph - 1][s.ammo];
      EXPECT_LE(t.at(s).lower, value + 1e-6) << to_string(s);
      EXPECT_LE(value, t.at(s).upper + 1e-6) << to_string(s);
    }
  }
}

std::vector<MixedStrategy> random_rows(const Instance& inst, Side side, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<MixedStrategy> rows;
  for (const GameState& s : enumerate_states(inst).all()) {
    const std::size_t n = side == Side::kBlue ? blue_actions(s, inst).size()
                                              : red_actions(s, inst).size();
    MixedStrategy d(n);
    double sum = 0.0;
    for (double& x : d) sum += (x = u(rng) < 0.5 ? 0.0 : u(rng));
    if (sum == 0.0) {
      d.assign(n, 0.0);
      d[rng() % n] = 1.0;
    } else {
      for (double& x : d) x /= sum;
    }
    rows.push_back(d);
  }
  return rows;
}

TEST(SecurityPolicies, HoldAgainstArbitraryOpponents) {
  std::mt19937_64 rng(3);
  for (const Instance& inst : random_instances(10, 2)) {
    const double gamma = std::max(0.99, gamma_threshold(inst));
    const BoundTable t = bound_table(inst, gamma);
    const StateSpace space = enumerate_states(inst);
    const Policy blue_sec = Policy::blue_security(inst);
    const Policy red_sec = Policy::red_security(inst, gamma);
    for (int trial = 0; trial < 5; ++trial) {
      const Policy red = Policy::table(inst, Side::kRed, random_rows(inst, Side::kRed, rng));
      const Policy blue = Policy::table(inst, Side::kBlue, random_rows(inst, Side::kBlue, rng));
      const auto vs_red = exact_expected_cost(inst, blue_sec, red, gamma);
      const auto vs_never = exact_expected_cost(inst, blue_sec, Policy::red_never_switch(inst), gamma);
      const auto vs_blue = exact_expected_cost(inst, blue, red_sec, gamma);
      for (std::size_t i = 0; i < space.size(); ++i) {
        EXPECT_LE(vs_red[i], t.bounds[i].upper + 1e-6);
        EXPECT_LE(vs_never[i], t.bounds[i].upper + 1e-6);
        EXPECT_GE(vs_blue[i], t.bounds[i].lower - 1e-6);
      }
    }
  }
}

}  // namespace
}  // namespace advgraph
