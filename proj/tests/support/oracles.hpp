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

// Reference computations kept apart from the library: naive field arithmetic,
// dense integer expansion, brute-force transversal and circulation counts,
// and a free-tree catalog.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "dpcert/cover.hpp"
#include "dpcert/graph.hpp"

namespace oracle {

// Polynomial-basis field F_p[x]/(m(x)); elements are base-p digit integers.
class RefField {
 public:
  explicit RefField(int t) {
    static const std::map<int, std::pair<int, std::vector<int>>> table = {
        {2, {2, {}}},  {3, {3, {}}},           {4, {2, {1, 1, 1}}},       {5, {5, {}}},
        {7, {7, {}}},  {8, {2, {1, 1, 0, 1}}}, {9, {3, {1, 0, 1}}},       {11, {11, {}}},
        {13, {13, {}}}, {16, {2, {1, 1, 0, 0, 1}}}};
    const auto& [p, m] = table.at(t);
    p_ = p;
    modulus_ = m;
    k_ = m.empty() ? 1 : static_cast<int>(m.size()) - 1;
    t_ = t;
  }
  int order() const { return t_; }
  const std::vector<int>& modulus() const { return modulus_; }

  std::vector<int> digits(int a) const {
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
    return d;
  }
  int pack(const std::vector<int>& d) const {
    int v = 0;
    for (int i = k_ - 1; i >= 0; --i) v = v * p_ + d[i];
    return v;
  }
  int add(int a, int b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < k_; ++i) x[i] = (x[i] + y[i]) % p_;
    return pack(x);
  }
  int neg(int a) const {
    auto x = digits(a);
    for (int& c : x) c = (p_ - c) % p_;
    return pack(x);
  }
  int mul(int a, int b) const {
    const auto x = digits(a), y = digits(b);
    std::vector<int> prod(2 * k_, 0);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    // Reduce with the monic modulus, highest degree first.
    for (int d = 2 * k_ - 1; d >= k_; --d) {
      const int c = prod[d];
      if (c == 0 || modulus_.empty()) continue;
      for (int i = 0; i <= k_; ++i) {
        prod[d - k_ + i] = ((prod[d - k_ + i] - c * modulus_[i]) % p_ + p_) % p_;
      }
    }
    prod.resize(k_);
    return pack(prod);
  }

 private:
  int p_ = 2;
  int k_ = 1;
  int t_ = 2;
  std::vector<int> modulus_;
};

// Integer polynomial as exponent vector -> coefficient.
using IntPoly = std::map<std::vector<int>, long long>;

// prod over factors (x_i + sign x_j - offset), integer coefficients. Terms
// exceeding `caps` (when given) are dropped; they cannot reach monomials
// within the caps.
inline IntPoly int_expand(int n, const std::vector<std::tuple<int, int, int, int>>& factors,
                          const std::vector<int>& caps = {}) {
  auto within = [&](const std::vector<int>& m) {
    if (caps.empty()) return true;
    for (int i = 0; i < n; ++i)
      if (m[i] > caps[i]) return false;
    return true;
  };
  IntPoly p;
  p[std::vector<int>(n, 0)] = 1;
  for (const auto& [i, j, sign, offset] : factors) {
    IntPoly next;
    for (const auto& [mono, c] : p) {
      auto a = mono;
      ++a[i];
      if (within(a)) next[a] += c;
      auto b = mono;
      ++b[j];
      if (within(b)) next[b] += sign * c;
      if (offset != 0) next[mono] -= offset * c;
    }
    p.clear();
    for (auto& [m, c] : next) {
      if (c != 0) p.emplace(m, c);
    }
  }
  return p;
}

inline long long coefficient(const IntPoly& p, const std::vector<int>& mono) {
  const auto it = p.find(mono);
  return it == p.end() ? 0 : it->second;
}

inline int mod(long long v, int p) { return static_cast<int>(((v % p) + p) % p); }

inline std::vector<std::tuple<int, int, int, int>> graph_factors(const dpcert::Graph& g) {
  std::vector<std::tuple<int, int, int, int>> f;
  for (const auto& e : g.edges()) f.emplace_back(e.u, e.v, -1, 0);
  return f;
}

// Enumerates every label tuple and checks every matching pair directly from
// the raw cover description.
inline std::uint64_t count_transversals(const dpcert::CoverSpec& spec) {
  const int n = static_cast<int>(spec.labels.size());
  std::vector<std::size_t> idx(n, 0);
  std::uint64_t count = 0;
  if (n == 0) return 1;
  for (const auto& l : spec.labels)
    if (l.empty()) return 0;
  while (true) {
    bool ok = true;
    for (const auto& m : spec.matchings) {
      const int a = spec.labels[m.u][idx[m.u]];
      const int b = spec.labels[m.v][idx[m.v]];
      for (auto [x, y] : m.pairs) {
        if (x == a && y == b) ok = false;
      }
    }
    count += ok;
    int v = n - 1;
    while (v >= 0 && ++idx[v] == spec.labels[v].size()) idx[v--] = 0;
    if (v < 0) break;
  }
  return count;
}

inline bool valid_transversal(const dpcert::CoverSpec& spec, const std::vector<int>& labels) {
  if (labels.size() != spec.labels.size()) return false;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (std::find(spec.labels[v].begin(), spec.labels[v].end(), labels[v]) ==
        spec.labels[v].end())
      return false;
  }
  for (const auto& m : spec.matchings) {
    for (auto [x, y] : m.pairs) {
      if (labels[m.u] == x && labels[m.v] == y) return false;
    }
  }
  return true;
}

// |#even - #odd| over spanning circulations, by plain subset enumeration.
// forward[e] true orients edge e from its lower to its higher endpoint.
inline std::uint64_t circulation_diff(const dpcert::Graph& g, const std::vector<bool>& forward) {
  const int m = g.num_edges();
  long long even = 0;
  long long odd = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    std::vector<int> bal(g.num_vertices(), 0);
    int size = 0;
    for (int e = 0; e < m; ++e) {
      if (!(s >> e & 1)) continue;
      ++size;
      const auto& ed = g.edge(e);
      const int tail = forward[e] ? ed.u : ed.v;
      const int head = forward[e] ? ed.v : ed.u;
      ++bal[tail];
      --bal[head];
    }
    if (std::all_of(bal.begin(), bal.end(), [](int b) { return b == 0; })) {
      (size % 2 == 0 ? even : odd)++;
    }
  }
  return static_cast<std::uint64_t>(even > odd ? even - odd : odd - even);
}

// Rooted canonical string of a tree (AHU).
inline std::string ahu(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != parent) kids.push_back(ahu(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

inline std::string tree_code(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n <= 2) return std::to_string(n);
  // Peel leaves to the center(s).
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = next;
  }
  std::string best;
  for (int c : layer) {
    const std::string s = ahu(adj, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// All non-isomorphic trees on 1..max_n vertices; vertex 0 is the root of the
// growth and parents precede children.
inline std::vector<dpcert::Graph> tree_catalog(int max_n) {
  std::vector<dpcert::Graph> out;
  std::vector<std::vector<int>> level = {{-1}};  // parent arrays
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& parent : level) {
      std::vector<dpcert::Edge> edges;
      for (int v = 1; v < n; ++v) edges.push_back({parent[v], v});
      out.emplace_back(n, edges);
    }
    if (n == max_n) break;
    std::map<std::string, std::vector<int>> next;
    for (const auto& parent : level) {
      for (int attach = 0; attach < n; ++attach) {
        auto p = parent;
        p.push_back(attach);
        std::vector<std::vector<int>> adj(n + 1);
        for (int v = 1; v <= n; ++v) {
          adj[v].push_back(p[v]);
          adj[p[v]].push_back(v);
        }
        next.emplace(tree_code(adj), p);
      }
    }
    level.clear();
    for (auto& [code, p] : next) level.push_back(p);
  }
  return out;
}

// Small graphs with at most seven edges used by the orientation checks.
inline std::vector<std::pair<std::string, dpcert::Graph>> small_regression_set() {
  using dpcert::Graph;
  return {
      {"P3", dpcert::path_graph(3)},
      {"P4", dpcert::path_graph(4)},
      {"C3", dpcert::cycle_graph(3)},
      {"C4", dpcert::cycle_graph(4)},
      {"C5", dpcert::cycle_graph(5)},
      {"C6", dpcert::cycle_graph(6)},
      {"C7", dpcert::cycle_graph(7)},
      {"K4", dpcert::complete_graph(4)},
      {"K1,3", dpcert::complete_bipartite(1, 3)},
      {"K2,3", dpcert::complete_bipartite(2, 3)},
      {"diamond", Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})},
      {"bowtie", Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}})},
      {"house", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {2, 4}, {3, 4}})},
      {"C4+pendant", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}})},
      {"K4-e+pendant", Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}})},
      {"theta-2-2-3", Graph(6, {{0, 1}, {1, 5}, {0, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}})},
  };
}

}  // namespace oracle
