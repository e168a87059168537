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

#include "advgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <utility>

#include "advgraph/errors.hpp"

namespace advgraph {
namespace {

std::string edge_name(const Edge& e) {
  std::ostringstream os;
  os << "(" << e.from << "," << e.to << ")";
  return os.str();
}

PositionGraph combine_weights(const GraphSet& set,
                              const std::function<double(double, double)>& op) {
  const PositionGraph& first = set.graph(1);
  std::vector<double> combined = first.weights();
  for (int k = 2; k <= set.size(); ++k) {
    const PositionGraph& g = set.graph(k);
    if (!g.same_topology(first)) {
      throw InvalidInstance("graph set members do not share a topology");
    }
    for (std::size_t e = 0; e < combined.size(); ++e) {
      combined[e] = op(combined[e], g.weights()[e]);
    }
  }
  return first.with_weights(std::move(combined));
}

// Nodes that can reach `dst` following edges forward; index by id - 1.
std::vector<bool> reaches(const PositionGraph& graph, int dst) {
  const int n = graph.node_count();
  std::vector<std::vector<int>> incoming(n);
  for (const Edge& e : graph.edges()) incoming[e.to - 1].push_back(e.from);
  std::vector<bool> seen(n, false);
  std::vector<int> stack{dst};
  seen[dst - 1] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : incoming[v - 1]) {
      if (!seen[u - 1]) {
        seen[u - 1] = true;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

NodeRelabeling relabel_survivors(const std::vector<bool>& keep, int goal) {
  NodeRelabeling map;
  const int n = static_cast<int>(keep.size());
  map.old_to_new.assign(n, 0);
  for (int id = 1; id <= n; ++id) {
    if (keep[id - 1] && id != goal) map.new_to_old.push_back(id);
  }
  map.new_to_old.push_back(goal);
  for (std::size_t j = 0; j < map.new_to_old.size(); ++j) {
    map.old_to_new[map.new_to_old[j] - 1] = static_cast<int>(j) + 1;
  }
  return map;
}

PositionGraph apply_relabeling(const PositionGraph& graph,
                               const NodeRelabeling& map) {
  std::vector<Edge> edges;
  std::vector<double> weights;
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const Edge& old = graph.edges()[e];
    int from = map.old_to_new[old.from - 1];
    int to = map.old_to_new[old.to - 1];
    if (from == 0 || to == 0) continue;
    edges.push_back({from, to});
    weights.push_back(graph.weights()[e]);
  }
  const int n = static_cast<int>(map.new_to_old.size());
  return PositionGraph(n, n, std::move(edges), std::move(weights));
}

}  // namespace

PositionGraph::PositionGraph(int node_count, int goal, std::vector<Edge> edges,
                             std::vector<double> weights)
    : node_count_(node_count), goal_(goal) {
  if (node_count < 1) throw InputError("node_count must be positive");
  if (!valid_node(goal)) throw InputError("goal is not a valid node id");
  if (edges.size() != weights.size()) {
    throw InputError("edge and weight lists differ in length");
  }
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  edges_.reserve(edges.size());
  weights_.reserve(edges.size());
  for (std::size_t i : order) {
    const Edge& e = edges[i];
    if (!valid_node(e.from) || !valid_node(e.to)) {
      throw InputError("edge " + edge_name(e) + " references an invalid node");
    }
    if (!edges_.empty() && edges_.back() == e) {
      throw InputError("duplicate edge " + edge_name(e));
    }
    edges_.push_back(e);
    weights_.push_back(weights[i]);
  }
  offsets_.assign(node_count_ + 1, 0);
  for (const Edge& e : edges_) ++offsets_[e.from];
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  targets_.reserve(edges_.size());
  for (const Edge& e : edges_) targets_.push_back(e.to);
}

std::span<const int> PositionGraph::out_neighbors(int node) const {
  if (!valid_node(node)) throw InputError("invalid node id " + std::to_string(node));
  const int begin = offsets_[node - 1];
  const int end = offsets_[node];
  return std::span<const int>(targets_).subspan(begin, end - begin);
}

int PositionGraph::edge_index(int from, int to) const {
  if (!valid_node(from) || !valid_node(to)) return -1;
  auto first = targets_.begin() + offsets_[from - 1];
  auto last = targets_.begin() + offsets_[from];
  auto it = std::lower_bound(first, last, to);
  if (it == last || *it != to) return -1;
  return static_cast<int>(it - targets_.begin());
}

bool PositionGraph::has_edge(int from, int to) const {
  return edge_index(from, to) >= 0;
}

double PositionGraph::weight(int from, int to) const {
  const int e = edge_index(from, to);
  if (e < 0) throw InputError("no edge " + edge_name({from, to}));
  return weights_[e];
}

PositionGraph PositionGraph::with_weights(std::vector<double> weights) const {
  if (weights.size() != edges_.size()) {
    throw InputError("weight vector does not match the edge count");
  }
  PositionGraph copy = *this;
  copy.weights_ = std::move(weights);
  return copy;
}

GraphSet::GraphSet(std::vector<PositionGraph> graphs) : graphs_(std::move(graphs)) {
  if (graphs_.empty()) throw InputError("a graph set needs at least one graph");
}

const PositionGraph& GraphSet::graph(int k) const {
  if (k < 1 || k > size()) throw InputError("invalid graph index " + std::to_string(k));
  return graphs_[k - 1];
}

std::vector<Distance> distances_to(const PositionGraph& graph, int dst) {
  if (!graph.valid_node(dst)) throw InputError("invalid node id " + std::to_string(dst));
  const int n = graph.node_count();
  std::vector<std::vector<std::pair<int, double>>> incoming(n);
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const Edge& edge = graph.edges()[e];
    incoming[edge.to - 1].emplace_back(edge.from, graph.weights()[e]);
  }
  std::vector<Distance> dist(n);
  std::vector<bool> done(n, false);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
  dist[dst - 1] = 0.0;
  frontier.emplace(0.0, dst);
  while (!frontier.empty()) {
    auto [d, v] = frontier.top();
    frontier.pop();
    if (done[v - 1]) continue;
    done[v - 1] = true;
    for (auto [u, w] : incoming[v - 1]) {
      const double candidate = d + w;
      if (!dist[u - 1] || candidate < *dist[u - 1]) {
        dist[u - 1] = candidate;
        frontier.emplace(candidate, u);
      }
    }
  }
  return dist;
}

Distance shortest_distance(const PositionGraph& graph, int src, int dst) {
  if (!graph.valid_node(src)) throw InputError("invalid node id " + std::to_string(src));
  return distances_to(graph, dst)[src - 1];
}

PositionGraph highest_cost_graph(const GraphSet& set) {
  return combine_weights(set, [](double a, double b) { return std::max(a, b); });
}

PositionGraph best_case_graph(const GraphSet& set) {
  return combine_weights(set, [](double a, double b) { return std::min(a, b); });
}

PrunedGraphSet prune_unreachable(const GraphSet& set) {
  const PositionGraph& first = set.graph(1);
  for (const PositionGraph& g : set.graphs()) {
    if (!g.same_topology(first)) {
      throw InvalidInstance("graph set members do not share a topology");
    }
  }
  NodeRelabeling map = relabel_survivors(reaches(first, first.goal()), first.goal());
  std::vector<PositionGraph> graphs;
  graphs.reserve(set.size());
  for (const PositionGraph& g : set.graphs()) graphs.push_back(apply_relabeling(g, map));
  return {GraphSet(std::move(graphs)), std::move(map)};
}

PrunedGraph prune_unreachable(const PositionGraph& graph) {
  PrunedGraphSet pruned = prune_unreachable(GraphSet({graph}));
  return {pruned.graphs.graph(1), std::move(pruned.relabeling)};
}

std::vector<std::string> validate(const GraphSet& set) {
  std::vector<std::string> diagnostics;
  const PositionGraph& first = set.graph(1);
  for (int k = 2; k <= set.size(); ++k) {
    const PositionGraph& g = set.graph(k);
    if (g.node_count() != first.node_count() || g.goal() != first.goal()) {
      diagnostics.push_back("graph " + std::to_string(k) +
                            ": node count or goal differs from graph 1");
    } else if (g.edges() != first.edges()) {
      diagnostics.push_back("graph " + std::to_string(k) +
                            ": edge sets differ from graph 1");
    }
  }
  if (!diagnostics.empty()) return diagnostics;

  const int goal = first.goal();
  if (!first.has_edge(goal, goal)) {
    diagnostics.push_back("goal self-loop (" + std::to_string(goal) + "," +
                          std::to_string(goal) + ") is missing");
  }
  for (int k = 1; k <= set.size(); ++k) {
    const PositionGraph& g = set.graph(k);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const Edge& edge = g.edges()[e];
      const double w = g.weights()[e];
      const std::string where =
          "graph " + std::to_string(k) + " edge " + edge_name(edge);
      if (!std::isfinite(w)) {
        diagnostics.push_back(where + ": weight must be finite");
      } else if (w < 0) {
        diagnostics.push_back(where + ": weight must be nonnegative");
      }
      if (edge.from == goal && edge.to == goal && w != 0.0) {
        diagnostics.push_back("graph " + std::to_string(k) +
                              ": goal self-loop must cost 0");
      }
    }
  }
  for (int j : first.out_neighbors(goal)) {
    if (j != goal) {
      diagnostics.push_back("goal must be absorbing: remove edge " +
                            edge_name({goal, j}));
    }
  }
  const std::vector<bool> reach = reaches(first, goal);
  for (int id = 1; id <= first.node_count(); ++id) {
    if (id != goal && first.out_neighbors(id).empty()) {
      diagnostics.push_back("node " + std::to_string(id) + " has no outgoing edge");
    }
    if (!reach[id - 1]) {
      diagnostics.push_back("goal is unreachable from node " + std::to_string(id));
    }
  }
  return diagnostics;
}

}  // namespace advgraph
