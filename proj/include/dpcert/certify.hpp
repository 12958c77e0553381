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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpcert/cover.hpp"
#include "dpcert/error.hpp"
#include "dpcert/ff.hpp"
#include "dpcert/graph.hpp"
#include "dpcert/poly.hpp"

namespace dpcert {

/// Replayable evidence: the polynomial (field, vertex order, signs, offsets),
/// a monomial and its nonzero coefficient, and optionally a checked witness.
struct Certificate {
  std::string kind;
  std::string claim;
  int field_order = 0;
  std::vector<int> vertex_order;  // original vertex at each position; empty = identity
  std::vector<Edge> edges;        // factor i < j pairs in polynomial variables
  std::vector<int> signs;         // per factor, empty when all -1
  std::vector<Element> offsets;   // per factor, empty when all 0
  ExponentVector monomial;
  Element coefficient{};
  std::optional<Transversal> witness;
  bool verified = false;
  std::uint64_t work = 0;
};

/// Coloring certificate for a good cover (every saturation function GoodDiff
/// under its current naming). Returns nullopt when no monomial qualifies.
/// Throws HypothesisError when some edge is not GoodDiff.
std::optional<Certificate> thm_null_certify(const Cover& cover,
                                            std::uint64_t limit = kDefaultExpansionLimit);

/// Order-3 certificate using the signed polynomial: sign -1 on good edges,
/// +1 on bad ones. Throws InputError unless t = 3.
std::optional<Certificate> thm_null3_certify(const Cover& cover,
                                             std::uint64_t limit = kDefaultExpansionLimit);

/// Qualifying monomial for one sign pattern.
struct PatternCertificate {
  std::uint64_t pattern = 0;
  ExponentVector monomial;
  Element coefficient{};
};

struct FailureReport {
  std::vector<std::uint64_t> patterns;  // sorted
  std::uint64_t tested = 0;
};

/// Sign patterns are bitmasks over `free_edges`: bit k set means sign +1 on
/// free_edges[k]. Every other edge is -1.
struct Dp3Report {
  bool pass = false;
  std::vector<int> free_edges;
  std::uint64_t tested = 0;
  std::vector<PatternCertificate> certificates;  // pattern order, when pass
  FailureReport failures;
};

/// Signs per edge of g for a pattern mask.
std::vector<int> pattern_signs(const Graph& g, std::span<const int> free_edges,
                               std::uint64_t pattern);

/// Tests every sign pattern over F_3 with caps 2. With use_spanning_tree only
/// co-tree edges of the breadth-first tree vary.
Dp3Report dp3_certify(const Graph& g, bool use_spanning_tree, int jobs = 1,
                      Budget budget = {});

/// Unique proper P-coloring certificate: every good prime f-cover of order t
/// with f = |P| is colorable.
Certificate unique_list_certify(const Graph& g, std::span<const std::vector<int>> lists, int t);

/// Cone of a connected bipartite graph with |V| = |E| over F_3. Vertices are
/// renumbered so the part containing vertex 0 comes first.
Certificate cone_bipartite_certify(const Graph& g);

/// Cone of a uniquely 3-colorable graph over F_4. `class_order[k]` is the
/// index (into classes ordered by lowest vertex) playing the role of I_{k+1};
/// empty tries all orders.
Certificate cone_unique3_certify(const Graph& g, std::span<const int> class_order = {});

struct DpBounds {
  int lower = 0;
  int upper = 0;
  std::string lower_reason;
  std::string upper_reason;
  bool exact() const { return lower == upper; }
};

/// Bounds on chi_DP, per component and combined by maximum.
DpBounds chi_dp_bounds(const Graph& g, Budget budget = {}, int jobs = 1);

}  // namespace dpcert
