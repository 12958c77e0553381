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

#include "dpcert/poly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace dpcert {

int ExponentVector::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

EdgeProductPolynomial::EdgeProductPolynomial(Field field, int num_vars,
                                             std::vector<SignedEdgeFactor> factors)
    : field_(std::move(field)), n_(num_vars), factors_(std::move(factors)) {
  for (const SignedEdgeFactor& f : factors_) {
    if (f.i < 0 || f.j >= n_ || f.i >= f.j) {
      throw InputError("factor (" + std::to_string(f.i + 1) + ", " + std::to_string(f.j + 1) +
                       ") is not a pair i < j of variables in 1.." + std::to_string(n_));
    }
    if (f.sign != 1 && f.sign != -1) throw InputError("factor sign must be +1 or -1");
    if (!field_.contains(f.offset)) throw InputError("factor offset outside the field");
  }
}

EdgeProductPolynomial EdgeProductPolynomial::from_graph(const Graph& g, const Field& field,
                                                        std::span<const int> signs,
                                                        std::span<const Element> offsets) {
  const std::size_t m = g.edges().size();
  if (!signs.empty() && signs.size() != m) {
    throw InputError("sign pattern has " + std::to_string(signs.size()) + " entries for " +
                     std::to_string(m) + " edges");
  }
  if (!offsets.empty() && offsets.size() != m) {
    throw InputError("offsets have " + std::to_string(offsets.size()) + " entries for " +
                     std::to_string(m) + " edges");
  }
  std::vector<SignedEdgeFactor> factors;
  factors.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    const Edge& edge = g.edge(static_cast<int>(e));
    factors.push_back({edge.u, edge.v, signs.empty() ? -1 : signs[e],
                       offsets.empty() ? Element{} : offsets[e]});
  }
  return EdgeProductPolynomial(field, g.num_vertices(), std::move(factors));
}

Element EdgeProductPolynomial::evaluate(std::span<const Element> point) const {
  if (static_cast<int>(point.size()) != n_) throw InputError("point has wrong dimension");
  const Element minus_one = field_.neg(field_.one());
  Element r = field_.one();
  for (const SignedEdgeFactor& f : factors_) {
    Element xj = f.sign < 0 ? field_.mul(minus_one, point[f.j]) : point[f.j];
    r = field_.mul(r, field_.sub(field_.add(point[f.i], xj), f.offset));
    if (r.is_zero()) break;
  }
  return r;
}

GridSpec::GridSpec(const Field& field, std::vector<std::vector<Element>> point_sets)
    : field_(field), sets_(std::move(point_sets)) {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    auto& s = sets_[i];
    if (s.empty()) throw InputError("grid set " + std::to_string(i + 1) + " is empty");
    for (Element a : s) {
      if (!field_.contains(a)) throw InputError("grid point outside the field");
    }
    std::vector<Element> sorted(s);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("grid set " + std::to_string(i + 1) + " repeats a point");
    }
  }
}

GridSpec GridSpec::leading(const Field& field, const ExponentVector& target) {
  std::vector<std::vector<Element>> sets;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (target[i] < 0 || target[i] >= field.order()) {
      throw InputError("grid method infeasible: target exponent " + std::to_string(target[i]) +
                       " at variable " + std::to_string(i + 1) + " needs more than " +
                       std::to_string(field.order()) + " points; use the expand method");
    }
    std::vector<Element> s;
    for (int a = 0; a <= target[i]; ++a) s.emplace_back(a);
    sets.push_back(std::move(s));
  }
  return GridSpec(field, std::move(sets));
}

ExponentVector GridSpec::exponents() const {
  std::vector<int> d;
  for (const auto& s : sets_) d.push_back(static_cast<int>(s.size()) - 1);
  return ExponentVector(std::move(d));
}

Element GridSpec::inverse_weight(std::span<const Element> point) const {
  Element w = field_.one();
  for (std::size_t j = 0; j < sets_.size(); ++j) {
    for (Element eps : sets_[j]) {
      if (eps != point[j]) w = field_.mul(w, field_.sub(point[j], eps));
    }
  }
  return field_.inv(w);
}

namespace {

constexpr int kBitsPerExponent = 4;
constexpr int kMaxExpansionVars = 64 / kBitsPerExponent;

struct Term {
  std::uint64_t key;  // packed exponents, 4 bits per variable
  std::uint32_t index;  // mixed-radix position within caps
  Element coef;
};

int exponent_of(std::uint64_t key, int var) {
  return static_cast<int>((key >> (kBitsPerExponent * var)) & 0xF);
}

ExponentVector unpack(std::uint64_t key, int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = exponent_of(key, i);
  return ExponentVector(std::move(e));
}

std::vector<Term> expand_terms(const EdgeProductPolynomial& poly, const ExponentVector& caps,
                               bool top_only, std::uint64_t limit, ExpansionStats* stats) {
  const int n = poly.num_vars();
  const Field& F = poly.field();
  if (static_cast<int>(caps.size()) != n) throw InputError("caps have wrong dimension");
  if (n > kMaxExpansionVars) {
    throw InputError("expansion supports at most " + std::to_string(kMaxExpansionVars) +
                     " variables");
  }
  std::vector<std::uint32_t> stride(n);
  std::uint64_t table = 1;
  for (int i = 0; i < n; ++i) {
    if (caps[i] < 0 || caps[i] > 15) throw InputError("caps must lie in [0, 15]");
    stride[i] = static_cast<std::uint32_t>(table);
    table *= static_cast<std::uint64_t>(caps[i] + 1);
    if (table > limit) {
      std::uint64_t full = 1;
      for (int v = 0; v < n; ++v) full *= static_cast<std::uint64_t>(caps[v] + 1);
      throw BudgetExceeded("expansion map of " + std::to_string(full) +
                           " entries exceeds the limit of " + std::to_string(limit));
    }
  }

  thread_local std::vector<std::int32_t> slot;
  slot.assign(table, -1);

  const Element minus_one = F.neg(F.one());
  std::vector<Term> cur{{0, 0, F.one()}};
  std::vector<Term> next;
  std::uint64_t updates = 0;
  std::size_t peak = 1;

  auto emit = [&](std::uint64_t key, std::uint32_t index, Element c) {
    ++updates;
    std::int32_t& s = slot[index];
    if (s < 0) {
      s = static_cast<std::int32_t>(next.size());
      next.push_back({key, index, c});
    } else {
      next[s].coef = F.add(next[s].coef, c);
    }
  };

  for (const SignedEdgeFactor& f : poly.factors()) {
    next.clear();
    const Element cj = f.sign < 0 ? minus_one : F.one();
    const Element c0 = F.neg(f.offset);
    const std::uint64_t unit_i = std::uint64_t{1} << (kBitsPerExponent * f.i);
    const std::uint64_t unit_j = std::uint64_t{1} << (kBitsPerExponent * f.j);
    for (const Term& t : cur) {
      if (exponent_of(t.key, f.i) < caps[f.i]) emit(t.key + unit_i, t.index + stride[f.i], t.coef);
      if (exponent_of(t.key, f.j) < caps[f.j]) {
        emit(t.key + unit_j, t.index + stride[f.j], F.mul(t.coef, cj));
      }
      if (!top_only && !c0.is_zero()) emit(t.key, t.index, F.mul(t.coef, c0));
    }
    std::size_t w = 0;
    for (std::size_t r = 0; r < next.size(); ++r) {
      slot[next[r].index] = -1;
      if (!next[r].coef.is_zero()) next[w++] = next[r];
    }
    next.resize(w);
    std::swap(cur, next);
    peak = std::max(peak, cur.size());
    if (cur.empty()) break;
  }
  if (stats) {
    stats->term_updates += updates;
    stats->peak_terms = std::max(stats->peak_terms, peak);
  }
  return cur;
}

std::map<ExponentVector, Element> to_map(const std::vector<Term>& terms, int n) {
  std::map<ExponentVector, Element> out;
  for (const Term& t : terms) out.emplace(unpack(t.key, n), t.coef);
  return out;
}

}  // namespace

std::map<ExponentVector, Element> expand_coefficients(const EdgeProductPolynomial& poly,
                                                      const ExponentVector& caps,
                                                      std::uint64_t limit, ExpansionStats* stats) {
  return to_map(expand_terms(poly, caps, false, limit, stats), poly.num_vars());
}

std::map<ExponentVector, Element> expand_top_coefficients(const EdgeProductPolynomial& poly,
                                                          const ExponentVector& caps,
                                                          std::uint64_t limit,
                                                          ExpansionStats* stats) {
  return to_map(expand_terms(poly, caps, true, limit, stats), poly.num_vars());
}

Element grid_coefficient(const EdgeProductPolynomial& poly, const GridSpec& grid,
                         std::uint64_t* points_visited) {
  const int n = poly.num_vars();
  const Field& F = poly.field();
  if (static_cast<int>(grid.size()) != n) throw InputError("grid has wrong dimension");

  // Per-coordinate inverse weights (prod over eps != p of (p - eps))^{-1}.
  std::vector<std::vector<Element>> inv_w(n);
  for (int j = 0; j < n; ++j) {
    for (Element p : grid.points(j)) {
      Element w = F.one();
      for (Element eps : grid.points(j)) {
        if (eps != p) w = F.mul(w, F.sub(p, eps));
      }
      inv_w[j].push_back(F.inv(w));
    }
  }

  std::vector<std::size_t> at(n, 0);
  std::vector<Element> point(n);
  for (int j = 0; j < n; ++j) point[j] = grid.points(j)[0];
  Element sum = F.zero();
  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    const Element value = poly.evaluate(point);
    if (!value.is_zero()) {
      Element w = value;
      for (int j = 0; j < n; ++j) w = F.mul(w, inv_w[j][at[j]]);
      sum = F.add(sum, w);
    }
    int j = n - 1;
    while (j >= 0) {
      if (++at[j] < grid.points(j).size()) {
        point[j] = grid.points(j)[at[j]];
        break;
      }
      at[j] = 0;
      point[j] = grid.points(j)[0];
      --j;
    }
    if (j < 0) break;
  }
  if (points_visited) *points_visited += visited;
  return sum;
}

Element coefficient_at(const EdgeProductPolynomial& poly, const ExponentVector& target,
                       CoefficientMethod method) {
  if (static_cast<int>(target.size()) != poly.num_vars()) {
    throw InputError("target has " + std::to_string(target.size()) + " exponents for " +
                     std::to_string(poly.num_vars()) + " variables");
  }
  auto by_expansion = [&] {
    const auto coeffs = expand_coefficients(poly, target);
    const auto it = coeffs.find(target);
    return it == coeffs.end() ? poly.field().zero() : it->second;
  };
  auto by_grid = [&] {
    if (target.degree() != poly.degree()) {
      throw InputError("grid method needs target degree " + std::to_string(target.degree()) +
                       " to equal polynomial degree " + std::to_string(poly.degree()));
    }
    return grid_coefficient(poly, GridSpec::leading(poly.field(), target));
  };
  switch (method) {
    case CoefficientMethod::Expand:
      return by_expansion();
    case CoefficientMethod::Grid:
      return by_grid();
    case CoefficientMethod::Both: {
      const Element g = by_grid();
      const Element e = by_expansion();
      if (g != e) {
        throw ConsistencyError("grid sum gave " + std::to_string(g.value) +
                               " but expansion gave " + std::to_string(e.value));
      }
      return g;
    }
  }
  return poly.field().zero();
}

std::optional<QualifyingMonomial> find_qualifying_monomial(const EdgeProductPolynomial& poly,
                                                           const ExponentVector& caps,
                                                           std::uint64_t limit,
                                                           ExpansionStats* stats) {
  const std::vector<Term> terms = expand_terms(poly, caps, true, limit, stats);
  const int n = poly.num_vars();
  const Term* best = nullptr;
  ExponentVector best_exp;
  for (const Term& t : terms) {
    ExponentVector e = unpack(t.key, n);
    if (!best || e > best_exp) {
      best = &t;
      best_exp = std::move(e);
    }
  }
  if (!best) return std::nullopt;
  return QualifyingMonomial{std::move(best_exp), best->coef};
}

std::uint64_t alon_tarsi_diff(const Orientation& d, Budget budget) {
  const Graph& g = d.graph();
  const int m = g.num_edges();
  if (m >= 63 || (std::uint64_t{1} << m) > budget.limit) {
    throw BudgetExceeded("circulation enumeration over 2^" + std::to_string(m) +
                         " edge subsets exceeds the budget of " + std::to_string(budget.limit));
  }
  const int n = g.num_vertices();
  std::vector<int> balance(n, 0);
  int balanced = n;
  std::uint64_t even = 1;  // the empty circulation
  std::uint64_t odd = 0;
  int size = 0;
  std::uint64_t gray = 0;
  auto shift = [&](int v, int delta) {
    if (balance[v] == 0) --balanced;
    balance[v] += delta;
    if (balance[v] == 0) ++balanced;
  };
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); ++i) {
    const int e = std::countr_zero(i);
    gray ^= std::uint64_t{1} << e;
    const int delta = (gray >> e & 1) ? 1 : -1;
    size += delta;
    shift(d.tail(e), delta);
    shift(d.head(e), -delta);
    if (balanced == n) ++(size % 2 == 0 ? even : odd);
  }
  return even > odd ? even - odd : odd - even;
}

}  // namespace dpcert
