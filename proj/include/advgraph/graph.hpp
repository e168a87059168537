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

#ifndef ADVGRAPH_GRAPH_HPP_
#define ADVGRAPH_GRAPH_HPP_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace advgraph {

// Node ids are 1-based throughout; the goal is conventionally the highest id.
struct Edge {
  int from = 0;
  int to = 0;
  auto operator<=>(const Edge&) const = default;
};

// A shortest-path length, or std::nullopt when the target is unreachable.
using Distance = std::optional<double>;

// Weighted digraph with immutable topology. Edges are kept sorted by
// (from, to) so each node's out-edges form a contiguous block.
class PositionGraph {
 public:
  PositionGraph(int node_count, int goal, std::vector<Edge> edges,
                std::vector<double> weights);

  int node_count() const noexcept { return node_count_; }
  int goal() const noexcept { return goal_; }
  bool valid_node(int id) const noexcept { return id >= 1 && id <= node_count_; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  // Aligned with edges().
  const std::vector<double>& weights() const noexcept { return weights_; }

  // Ascending out-neighbors of `node`.
  std::span<const int> out_neighbors(int node) const;

  bool has_edge(int from, int to) const;
  // Throws InputError when (from, to) is not an edge.
  double weight(int from, int to) const;

  // Same topology, new weights aligned with edges().
  PositionGraph with_weights(std::vector<double> weights) const;

  bool same_topology(const PositionGraph& other) const noexcept {
    return node_count_ == other.node_count_ && goal_ == other.goal_ &&
           edges_ == other.edges_;
  }

  friend bool operator==(const PositionGraph&, const PositionGraph&) = default;

 private:
  int edge_index(int from, int to) const;  // -1 if absent

  int node_count_;
  int goal_;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
  std::vector<int> offsets_;  // node_count_ + 1 entries, index by id - 1
  std::vector<int> targets_;
};

// K position graphs over one shared topology. Construction only requires
// K >= 1; everything else is reported by validate().
class GraphSet {
 public:
  explicit GraphSet(std::vector<PositionGraph> graphs);

  int size() const noexcept { return static_cast<int>(graphs_.size()); }
  // 1-based graph index k in 1..K.
  const PositionGraph& graph(int k) const;
  const std::vector<PositionGraph>& graphs() const noexcept { return graphs_; }

  int node_count() const noexcept { return graphs_.front().node_count(); }
  int goal() const noexcept { return graphs_.front().goal(); }
  std::span<const int> out_neighbors(int node) const {
    return graphs_.front().out_neighbors(node);
  }

  friend bool operator==(const GraphSet&, const GraphSet&) = default;

 private:
  std::vector<PositionGraph> graphs_;
};

// Label-setting (Dijkstra) shortest path. Throws InputError on bad ids.
Distance shortest_distance(const PositionGraph& graph, int src, int dst);

// Distances from every node to `dst`; element i is for node i + 1.
std::vector<Distance> distances_to(const PositionGraph& graph, int dst);

// Elementwise max / min of the weights over all members.
PositionGraph highest_cost_graph(const GraphSet& set);
PositionGraph best_case_graph(const GraphSet& set);

// old_to_new[i] is the new id of old node i + 1, or 0 if it was removed.
struct NodeRelabeling {
  std::vector<int> old_to_new;
  std::vector<int> new_to_old;  // element j is the old id of new node j + 1
};

struct PrunedGraphSet {
  GraphSet graphs;
  NodeRelabeling relabeling;
};

struct PrunedGraph {
  PositionGraph graph;
  NodeRelabeling relabeling;
};

// Drops every node that cannot reach the goal on the given topology, then
// relabels survivors contiguously in ascending order with the goal last.
PrunedGraphSet prune_unreachable(const GraphSet& set);
PrunedGraph prune_unreachable(const PositionGraph& graph);

// Empty iff all structural invariants hold.
std::vector<std::string> validate(const GraphSet& set);

}  // namespace advgraph

#endif  // ADVGRAPH_GRAPH_HPP_
