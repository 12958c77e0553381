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
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dpcert/error.hpp"
#include "dpcert/ff.hpp"
#include "dpcert/graph.hpp"

namespace dpcert {

/// The linear factor x_i + sign * x_j - offset, with i < j.
struct SignedEdgeFactor {
  int i = 0;
  int j = 0;
  int sign = -1;  // +1 or -1
  Element offset{};
};

/// Monomial exponents t_1..t_n.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> exps) : exps_(std::move(exps)) {}
  ExponentVector(std::initializer_list<int> exps) : exps_(exps) {}

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  int degree() const;
  const std::vector<int>& values() const { return exps_; }

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> exps_;
};

/// Product of SignedEdgeFactors over F_t.
class EdgeProductPolynomial {
 public:
  EdgeProductPolynomial(Field field, int num_vars, std::vector<SignedEdgeFactor> factors);

  /// Factors follow the graph's edge order. Empty `signs` means all -1 (the
  /// plain graph polynomial); empty `offsets` means all zero.
  static EdgeProductPolynomial from_graph(const Graph& g, const Field& field,
                                          std::span<const int> signs = {},
                                          std::span<const Element> offsets = {});

  const Field& field() const { return field_; }
  int num_vars() const { return n_; }
  /// Number of factors, which is also the total degree.
  int degree() const { return static_cast<int>(factors_.size()); }
  std::span<const SignedEdgeFactor> factors() const { return factors_; }

  Element evaluate(std::span<const Element> point) const;

 private:
  Field field_;
  int n_;
  std::vector<SignedEdgeFactor> factors_;
};

/// Per-variable evaluation sets for the grid-sum coefficient formula.
class GridSpec {
 public:
  GridSpec(const Field& field, std::vector<std::vector<Element>> point_sets);
  /// P_i = the first target_i + 1 elements in encoding order.
  static GridSpec leading(const Field& field, const ExponentVector& target);

  std::size_t size() const { return sets_.size(); }
  std::span<const Element> points(std::size_t i) const { return sets_[i]; }
  /// |P_i| - 1, the exponent whose coefficient the grid sum recovers.
  ExponentVector exponents() const;
  /// N(p)^{-1} for the point p.
  Element inverse_weight(std::span<const Element> point) const;

 private:
  Field field_;
  std::vector<std::vector<Element>> sets_;
};

struct ExpansionStats {
  std::uint64_t term_updates = 0;
  std::size_t peak_terms = 0;
};

/// Dense-index cap on the expansion table (product of caps_i + 1).
inline constexpr std::uint64_t kDefaultExpansionLimit = std::uint64_t{1} << 26;

/// All monomials with nonzero coefficient and exponents within caps. Partial
/// products whose exponents exceed caps are dropped as they are formed.
std::map<ExponentVector, Element> expand_coefficients(
    const EdgeProductPolynomial& poly, const ExponentVector& caps,
    std::uint64_t limit = kDefaultExpansionLimit, ExpansionStats* stats = nullptr);

/// Top-degree monomials only (sum of exponents = degree). Offsets do not
/// affect these, so they are ignored, and partial products that can no longer
/// reach full degree within caps are pruned.
std::map<ExponentVector, Element> expand_top_coefficients(
    const EdgeProductPolynomial& poly, const ExponentVector& caps,
    std::uint64_t limit = kDefaultExpansionLimit, ExpansionStats* stats = nullptr);

/// Quantitative Nullstellensatz: sum over p in the grid of N(p)^{-1} poly(p).
/// Equals the coefficient of prod x_i^{|P_i|-1} whenever the total degree of
/// poly is at most the sum of |P_i| - 1.
Element grid_coefficient(const EdgeProductPolynomial& poly, const GridSpec& grid,
                         std::uint64_t* points_visited = nullptr);

enum class CoefficientMethod { Expand, Grid, Both };

/// Coefficient of the target monomial. Grid requires sum(target) = degree and
/// target_i < t; Both computes both ways and throws ConsistencyError if they
/// disagree.
Element coefficient_at(const EdgeProductPolynomial& poly, const ExponentVector& target,
                       CoefficientMethod method);

struct QualifyingMonomial {
  ExponentVector exponents;
  Element coefficient;
};

/// Lexicographically greatest exponent vector with sum = degree, t_i <= caps_i
/// and nonzero coefficient.
std::optional<QualifyingMonomial> find_qualifying_monomial(
    const EdgeProductPolynomial& poly, const ExponentVector& caps,
    std::uint64_t limit = kDefaultExpansionLimit, ExpansionStats* stats = nullptr);

/// |#even - #odd| over circulations (spanning subdigraphs with indegree =
/// outdegree everywhere), by Gray-code walk over edge subsets.
std::uint64_t alon_tarsi_diff(const Orientation& d, Budget budget = {});

}  // namespace dpcert
