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

#include "advgraph/io.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "advgraph/errors.hpp"

namespace advgraph {
namespace {

constexpr double kDropBelow = 1e-12;

template <typename T>
T required(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInstance(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInstance(std::string("field \"") + key + "\": " + e.what());
  }
}

nlohmann::json strategy_to_json(const MixedStrategy& d, const std::vector<int>& labels) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] >= kDropBelow) out[std::to_string(labels[i])] = d[i];
  }
  return out;
}

MixedStrategy strategy_from_json(const nlohmann::json& j, const std::vector<int>& labels) {
  MixedStrategy d(labels.size(), 0.0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string key = std::to_string(labels[i]);
    if (j.contains(key)) d[i] = j.at(key).get<double>();
  }
  return d;
}

}  // namespace

nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j;
  const GraphSet& set = inst.graphs();
  j["n"] = inst.node_count();
  j["goal"] = inst.goal();
  j["k"] = inst.graph_count();
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : set.graph(1).edges()) edges.push_back({e.from, e.to});
  j["edges"] = std::move(edges);
  nlohmann::json weights = nlohmann::json::array();
  for (const PositionGraph& g : set.graphs()) weights.push_back(g.weights());
  j["weights"] = std::move(weights);
  if (inst.red_graph().is_complete()) {
    j["red_edges"] = "complete";
  } else {
    nlohmann::json red = nlohmann::json::array();
    for (auto [a, b] : inst.red_graph().edges()) red.push_back({a, b});
    j["red_edges"] = std::move(red);
  }
  j["robots"] = inst.robots();
  j["max_ammo"] = inst.max_ammo();
  return j;
}

Instance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInstance("instance JSON must be an object");
  const int n = required<int>(j, "n");
  const int goal = required<int>(j, "goal");
  const int k = required<int>(j, "k");
  const auto edge_pairs = required<std::vector<std::vector<int>>>(j, "edges");
  const auto weights = required<std::vector<std::vector<double>>>(j, "weights");
  if (k < 1 || weights.size() != static_cast<std::size_t>(k)) {
    throw InvalidInstance("\"weights\" must hold one list per graph");
  }
  std::vector<Edge> edges;
  for (const auto& e : edge_pairs) {
    if (e.size() != 2) throw InvalidInstance("each edge must be a pair [i, j]");
    edges.push_back({e[0], e[1]});
  }
  try {
    std::vector<PositionGraph> graphs;
    for (const auto& w : weights) {
      if (w.size() != edges.size()) {
        throw InvalidInstance("each weight list must align with \"edges\"");
      }
      graphs.emplace_back(n, goal, edges, w);
    }
    const nlohmann::json& red_json = j.contains("red_edges") ? j.at("red_edges")
                                                              : nlohmann::json("complete");
    std::optional<RedActionGraph> red;
    if (red_json.is_string()) {
      if (red_json.get<std::string>() != "complete") {
        throw InvalidInstance("\"red_edges\" must be \"complete\" or a list of pairs");
      }
      red = RedActionGraph::complete(k);
    } else {
      std::vector<std::pair<int, int>> red_edges;
      for (const auto& e : red_json.get<std::vector<std::vector<int>>>()) {
        if (e.size() != 2) throw InvalidInstance("each red edge must be a pair [a, b]");
        red_edges.emplace_back(e[0], e[1]);
      }
      red = RedActionGraph(k, std::move(red_edges));
    }
    return Instance(GraphSet(std::move(graphs)), *red, required<int>(j, "robots"),
                    required<int>(j, "max_ammo"));
  } catch (const InputError& e) {
    throw InvalidInstance(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInstance(e.what());
  }
}

nlohmann::json solution_to_json(const Solution& sol, const Instance& inst) {
  nlohmann::json j;
  j["gamma"] = sol.gamma;
  j["converged"] = sol.converged;
  j["iterations"] = sol.iterations;
  j["residual"] = sol.residual;
  nlohmann::json values = nlohmann::json::object();
  nlohmann::json blue = nlohmann::json::object();
  nlohmann::json red = nlohmann::json::object();
  for (std::size_t i = 0; i < sol.space.size(); ++i) {
    const GameState s = sol.space.state(i);
    const std::string key = to_string(s);
    if (std::isfinite(sol.value[i])) {
      values[key] = sol.value[i];
    } else {
      values[key] = nullptr;
    }
    const std::span<const int> b = blue_actions(s, inst);
    blue[key] = strategy_to_json(sol.blue_policy[i], {b.begin(), b.end()});
    red[key] = strategy_to_json(sol.red_policy[i], red_actions(s, inst));
  }
  j["values"] = std::move(values);
  j["blue_policy"] = std::move(blue);
  j["red_policy"] = std::move(red);
  return j;
}

Solution solution_from_json(const nlohmann::json& j, const Instance& inst) {
  Solution sol;
  sol.space = enumerate_states(inst);
  try {
    sol.gamma = j.at("gamma").get<double>();
    sol.converged = j.value("converged", true);
    sol.iterations = j.value("iterations", 0);
    sol.residual = j.value("residual", 0.0);
    const nlohmann::json& values = j.at("values");
    const nlohmann::json& blue = j.at("blue_policy");
    const nlohmann::json& red = j.at("red_policy");
    if (values.size() != sol.space.size()) {
      throw InputError("solution file has " + std::to_string(values.size()) +
                       " states but the instance has " + std::to_string(sol.space.size()));
    }
    sol.value.resize(sol.space.size());
    sol.blue_policy.resize(sol.space.size());
    sol.red_policy.resize(sol.space.size());
    for (std::size_t i = 0; i < sol.space.size(); ++i) {
      const GameState s = sol.space.state(i);
      const std::string key = to_string(s);
      const nlohmann::json& v = values.at(key);
      sol.value[i] = v.is_null() ? NAN : v.get<double>();
      const std::span<const int> b = blue_actions(s, inst);
      sol.blue_policy[i] = strategy_from_json(blue.at(key), {b.begin(), b.end()});
      sol.red_policy[i] = strategy_from_json(red.at(key), red_actions(s, inst));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("solution file does not match the instance: ") + e.what());
  }
  return sol;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("cannot parse " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("failed writing " + path);
}

}  // namespace advgraph
