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

#include "dpcert/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace dpcert {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InputError("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) {
      throw InputError("edge {" + std::to_string(e.u + 1) + ", " + std::to_string(e.v + 1) +
                       "} references a vertex outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u + 1));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw InputError("duplicate edge {" + std::to_string(dup->u + 1) + ", " +
                     std::to_string(dup->v + 1) + "}");
  }
  adj_.assign(n, {});
  edge_index_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < num_edges(); ++i) {
    const Edge& e = edges_[i];
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    edge_index_[e.u * n_ + e.v] = i;
    edge_index_[e.v * n_ + e.u] = i;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  const int i = edge_index_[u * n_ + v];
  if (i < 0) return std::nullopt;
  return i;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

Orientation::Orientation(Graph base, std::vector<bool> forward)
    : base_(std::move(base)), forward_(std::move(forward)) {
  if (static_cast<int>(forward_.size()) != base_.num_edges()) {
    throw InputError("orientation needs one direction per edge");
  }
  out_.assign(base_.num_vertices(), 0);
  in_.assign(base_.num_vertices(), 0);
  for (int e = 0; e < base_.num_edges(); ++e) {
    ++out_[tail(e)];
    ++in_[head(e)];
  }
}

int Orientation::tail(int edge) const {
  const Edge& e = base_.edge(edge);
  return forward_[edge] ? e.u : e.v;
}

int Orientation::head(int edge) const {
  const Edge& e = base_.edge(edge);
  return forward_[edge] ? e.v : e.u;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  if (n < 1) throw InputError("path needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle length must be at least 3, got " + std::to_string(n));
  return cycle_power(n, 1);
}

Graph cycle_power(int n, int k) {
  if (n < 3) throw InputError("cycle length must be at least 3, got " + std::to_string(n));
  if (k < 1) throw InputError("cycle power must be at least 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int d = std::min(j - i, n - (j - i));
      if (d <= k) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) throw InputError("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) { return complete_bipartite_minus_matching(a, b, 0); }

Graph complete_bipartite_minus_matching(int a, int b, int s) {
  if (a < 1 || b < 1) throw InputError("complete bipartite parts must be nonempty");
  if (s < 0 || s > std::min(a, b)) {
    throw InputError("matching size " + std::to_string(s) + " does not fit K_{" +
                     std::to_string(a) + "," + std::to_string(b) + "}");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      if (i == j && i < s) continue;
      edges.push_back({i, a + j});
    }
  }
  return Graph(a + b, std::move(edges));
}

Graph join(const Graph& first, const Graph& second) {
  const int n1 = first.num_vertices();
  const int n2 = second.num_vertices();
  std::vector<Edge> edges(first.edges().begin(), first.edges().end());
  for (const Edge& e : second.edges()) edges.push_back({e.u + n1, e.v + n1});
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) edges.push_back({i, n1 + j});
  }
  return Graph(n1 + n2, std::move(edges));
}

Graph cone(const Graph& g) { return join(complete_graph(1), g); }

Graph relabel(const Graph& g, std::span<const int> order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) throw InputError("relabel order has wrong length");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) {
      throw InputError("relabel order is not a permutation");
    }
    pos[order[i]] = i;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({pos[e.u], pos[e.v]});
  return Graph(n, std::move(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> pos(g.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) pos[vertices[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (pos[e.u] >= 0 && pos[e.v] >= 0) edges.push_back({pos[e.u], pos[e.v]});
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.num_vertices(), false);
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = true;
    for (std::size_t h = 0; h < comp.size(); ++h) {
      for (int w : g.neighbors(comp[h])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<int> spanning_tree(const Graph& g) {
  std::vector<int> tree;
  std::vector<bool> seen(g.num_vertices(), false);
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = true;
        tree.push_back(*g.edge_index(v, w));
        q.push(w);
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(g.num_vertices(), -1);
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_complete(const Graph& g) {
  const long long n = g.num_vertices();
  return g.num_edges() == n * (n - 1) / 2;
}

bool is_cycle(const Graph& g) {
  if (g.num_vertices() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

int coloring_number(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return 0;
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int degeneracy = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    }
    degeneracy = std::max(degeneracy, deg[best]);
    removed[best] = true;
    for (int w : g.neighbors(best)) {
      if (!removed[w]) --deg[w];
    }
  }
  return degeneracy + 1;
}

std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
  const int n = g.num_vertices();
  int best_len = n + 1;
  std::vector<int> best;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::vector<int> parent(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push(w);
        } else if (w != parent[v] && v < w) {
          const int len = dist[v] + dist[w] + 1;
          if (len >= best_len) continue;
          std::vector<int> left;
          std::vector<int> right;
          for (int x = v; x != -1; x = parent[x]) left.push_back(x);
          for (int x = w; x != -1; x = parent[x]) right.push_back(x);
          // Walks share only s when s lies on a shortest cycle; skip otherwise.
          std::vector<int> a(left.begin(), left.end() - 1);
          std::vector<int> b(right.begin(), right.end() - 1);
          std::vector<int> sa(a), sb(b);
          std::sort(sa.begin(), sa.end());
          std::sort(sb.begin(), sb.end());
          std::vector<int> common;
          std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                std::back_inserter(common));
          if (!common.empty()) continue;
          best_len = len;
          best.assign(left.rbegin(), left.rend());
          best.insert(best.end(), b.begin(), b.end());
        }
      }
    }
  }
  if (best.empty()) return std::nullopt;
  return best;
}

namespace {

class Dsatur {
 public:
  Dsatur(const Graph& g, int k, Budget budget)
      : g_(g), k_(k), budget_(budget), color_(g.num_vertices(), -1),
        seen_(g.num_vertices(), std::vector<int>(k, 0)), sat_(g.num_vertices(), 0) {}

  SearchStatus run(std::vector<int>& out, std::uint64_t& nodes) {
    const SearchStatus s = extend(0, 0);
    nodes += nodes_;
    if (s == SearchStatus::Found) out = color_;
    return s;
  }

 private:
  SearchStatus extend(int colored, int used) {
    if (++nodes_ > budget_.limit) return SearchStatus::BudgetExhausted;
    if (colored == g_.num_vertices()) return SearchStatus::Found;
    int v = -1;
    for (int w = 0; w < g_.num_vertices(); ++w) {
      if (color_[w] >= 0) continue;
      if (v < 0 || sat_[w] > sat_[v] || (sat_[w] == sat_[v] && g_.degree(w) > g_.degree(v))) {
        v = w;
      }
    }
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (seen_[v][c] > 0) continue;
      assign(v, c, +1);
      const SearchStatus s = extend(colored + 1, std::max(used, c + 1));
      assign(v, c, -1);
      if (s != SearchStatus::None) return s;
    }
    return SearchStatus::None;
  }

  void assign(int v, int c, int delta) {
    color_[v] = delta > 0 ? c : -1;
    for (int w : g_.neighbors(v)) {
      int& cnt = seen_[w][c];
      if (delta > 0 && cnt++ == 0) ++sat_[w];
      if (delta < 0 && --cnt == 0) --sat_[w];
    }
  }

  const Graph& g_;
  int k_;
  Budget budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> color_;
  std::vector<std::vector<int>> seen_;
  std::vector<int> sat_;
};

}  // namespace

SearchStatus find_coloring(const Graph& g, int k, std::vector<int>& coloring,
                           std::uint64_t& nodes, Budget budget) {
  if (g.num_vertices() == 0) {
    coloring.clear();
    return SearchStatus::Found;
  }
  if (k <= 0) return SearchStatus::None;
  return Dsatur(g, k, budget).run(coloring, nodes);
}

ChromaticResult chromatic_number(const Graph& g, int kmax, Budget budget) {
  ChromaticResult r;
  const int lo = g.num_vertices() == 0 ? 0 : (g.num_edges() == 0 ? 1 : 2);
  for (int k = lo; k <= kmax; ++k) {
    std::vector<int> coloring;
    const SearchStatus s = find_coloring(g, k, coloring, r.nodes, {budget.limit - std::min(budget.limit, r.nodes)});
    if (s == SearchStatus::Found) {
      r.status = ChromaticResult::Status::Exact;
      r.value = k;
      return r;
    }
    if (s == SearchStatus::BudgetExhausted) {
      r.status = ChromaticResult::Status::Unknown;
      return r;
    }
  }
  r.status = ChromaticResult::Status::AboveLimit;
  r.value = kmax;
  return r;
}

ListColoringCount count_list_colorings(const Graph& g, std::span<const std::vector<int>> lists,
                                       std::uint64_t stop_at) {
  const int n = g.num_vertices();
  if (static_cast<int>(lists.size()) != n) throw InputError("one list per vertex required");
  std::vector<std::vector<int>> sorted(lists.begin(), lists.end());
  for (auto& l : sorted) std::sort(l.begin(), l.end());
  ListColoringCount result;
  std::vector<int> color(n, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) {
      if (!result.first) result.first = color;
      ++result.count;
      return stop_at != 0 && result.count >= stop_at;
    }
    for (int c : sorted[v]) {
      bool ok = true;
      for (int w : g.neighbors(v)) {
        if (w < v && color[w] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[v] = c;
      if (self(self, v + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return result;
}

ColorClassStats class_stats(const Graph& g, std::vector<std::vector<int>> classes) {
  ColorClassStats s;
  s.k = static_cast<int>(classes.size());
  std::vector<int> cls(g.num_vertices(), -1);
  for (int i = 0; i < s.k; ++i) {
    for (int v : classes[i]) {
      if (v < 0 || v >= g.num_vertices() || cls[v] >= 0) {
        throw InputError("classes must partition the vertex set");
      }
      cls[v] = i;
    }
    s.sizes.push_back(static_cast<int>(classes[i].size()));
  }
  if (std::count(cls.begin(), cls.end(), -1) > 0) {
    throw InputError("classes must partition the vertex set");
  }
  s.cross_edges.assign(s.k, std::vector<int>(s.k, 0));
  for (const Edge& e : g.edges()) {
    const int a = cls[e.u];
    const int b = cls[e.v];
    if (a == b) throw InputError("class " + std::to_string(a + 1) + " is not independent");
    ++s.cross_edges[a][b];
    ++s.cross_edges[b][a];
  }
  s.classes = std::move(classes);
  return s;
}

UniqueColoringResult unique_k_analysis(const Graph& g, int k, Budget budget) {
  if (k < 1) throw InputError("k must be positive");
  const int n = g.num_vertices();
  UniqueColoringResult result;
  std::vector<int> color(n, -1);
  std::vector<int> found;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  // Canonical colorings: vertex v may open at most one new class, so each
  // unordered partition appears exactly once.
  auto rec = [&](auto&& self, int v, int used) -> bool {
    if (++nodes > budget.limit) {
      exhausted = true;
      return true;
    }
    if (n - v < k - used) return false;
    if (v == n) {
      if (used == k) {
        if (++result.partitions == 1) found = color;
        return result.partitions >= 2;
      }
      return false;
    }
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      bool ok = true;
      for (int w : g.neighbors(v)) {
        if (w < v && color[w] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[v] = c;
      if (self(self, v + 1, std::max(used, c + 1))) return true;
    }
    color[v] = -1;
    return false;
  };
  rec(rec, 0, 0);
  if (exhausted) {
    throw BudgetExceeded("unique coloring analysis exceeded " + std::to_string(budget.limit) +
                         " nodes");
  }
  if (result.partitions == 0) {
    result.reason = "not " + std::to_string(k) + "-colorable";
    return result;
  }
  if (result.partitions > 1) {
    result.reason = "multiple partitions into " + std::to_string(k) + " color classes";
    return result;
  }
  std::vector<std::vector<int>> classes(k);
  for (int v = 0; v < n; ++v) classes[found[v]].push_back(v);
  result.stats = class_stats(g, std::move(classes));
  return result;
}

}  // namespace dpcert
