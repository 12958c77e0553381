// Copyright 2026 The dpcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpcert/error.hpp"

namespace dpcert {

/// Undirected edge with 0-based endpoints, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// The vertex order is part of the identity of a graph: it fixes the signs of
/// the graph polynomial's factors (x_u - x_v, u < v). Edges are kept sorted
/// lexicographically, which is also the factor order of every polynomial
/// built from the graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Endpoint order within each pair is irrelevant. Throws InputError on
  /// loops, duplicate edges, or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  bool adjacent(int u, int v) const { return edge_index_[u * n_ + v] >= 0; }
  /// Index of edge {u, v} in edges(), if present.
  std::optional<int> edge_index(int u, int v) const;
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> edge_index_;
};

/// Edge orientation: forward[e] means edge e = {u, v} (u < v) points u -> v.
class Orientation {
 public:
  Orientation(Graph base, std::vector<bool> forward);

  const Graph& graph() const { return base_; }
  bool forward(int edge) const { return forward_[edge]; }
  int tail(int edge) const;
  int head(int edge) const;
  int outdegree(int v) const { return out_[v]; }
  int indegree(int v) const { return in_[v]; }

 private:
  Graph base_;
  std::vector<bool> forward_;
  std::vector<int> out_;
  std::vector<int> in_;
};

// Named constructions. Cycles and paths are numbered in order along the
// cycle/path; joins place the first graph's vertices first.

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// k-th power of the n-cycle: edges between vertices at cyclic distance <= k.
Graph cycle_power(int n, int k);
Graph complete_graph(int n);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);
/// K_{a,b} minus the matching {i, a+i} for i < s.
Graph complete_bipartite_minus_matching(int a, int b, int s);
Graph join(const Graph& first, const Graph& second);
/// K_1 v G; the universal vertex is vertex 0.
Graph cone(const Graph& g);
/// Renumbers vertices: new index of v is position of v in `order`.
Graph relabel(const Graph& g, std::span<const int> order);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

// Structure.

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// Spanning forest by breadth-first search from the lowest-index vertex of
/// each component; returns indices into g.edges().
std::vector<int> spanning_tree(const Graph& g);
/// Side (0/1) of each vertex, if bipartite; vertex 0 of every component is on side 0.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_complete(const Graph& g);
/// Connected and 2-regular.
bool is_cycle(const Graph& g);
/// Degeneracy + 1.
int coloring_number(const Graph& g);
/// Vertex sequence of a shortest cycle, if any.
std::optional<std::vector<int>> shortest_cycle(const Graph& g);

// Brute-force coloring utilities.

enum class SearchStatus { Found, None, BudgetExhausted };

struct ChromaticResult {
  enum class Status { Exact, AboveLimit, Unknown };
  Status status = Status::Unknown;
  int value = 0;  // chi(G) when Exact
  std::uint64_t nodes = 0;
};

/// Least k <= kmax admitting a proper k-coloring, via DSATUR backtracking.
ChromaticResult chromatic_number(const Graph& g, int kmax, Budget budget = {});

/// Proper k-coloring (colors 0..k-1), if one exists within budget.
SearchStatus find_coloring(const Graph& g, int k, std::vector<int>& coloring,
                           std::uint64_t& nodes, Budget budget = {});

struct ListColoringCount {
  std::uint64_t count = 0;
  std::optional<std::vector<int>> first;  // lexicographically least coloring
};

/// Counts proper colorings c with c(v) in lists[v]. Stops early once `stop_at`
/// colorings have been seen (0 = count all).
ListColoringCount count_list_colorings(const Graph& g, std::span<const std::vector<int>> lists,
                                       std::uint64_t stop_at = 0);

struct ColorClassStats {
  int k = 0;
  std::vector<std::vector<int>> classes;
  std::vector<int> sizes;
  /// cross_edges[i][j] = |E(I_i, I_j)|, symmetric, zero diagonal.
  std::vector<std::vector<int>> cross_edges;
};

/// Computes sizes and cross-class edge counts for a given partition.
ColorClassStats class_stats(const Graph& g, std::vector<std::vector<int>> classes);

struct UniqueColoringResult {
  std::optional<ColorClassStats> stats;  // set when uniquely k-colorable
  /// Number of partitions into exactly k independent classes, capped at 2.
  int partitions = 0;
  std::string reason;
};

/// Decides unique k-colorability by enumerating partitions into k independent
/// classes. Classes are reported ordered by their lowest vertex.
UniqueColoringResult unique_k_analysis(const Graph& g, int k, Budget budget = {});

}  // namespace dpcert
