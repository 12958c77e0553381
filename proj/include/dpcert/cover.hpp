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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dpcert/error.hpp"
#include "dpcert/ff.hpp"
#include "dpcert/graph.hpp"

namespace dpcert {

/// Subset of F_t, t <= 16.
class LabelSet {
 public:
  LabelSet() = default;
  static LabelSet range(int m);  // {0, ..., m-1}
  static LabelSet of(std::span<const Element> labels);

  bool contains(Element a) const { return a.value < 16 && (bits_ >> a.value & 1u); }
  void insert(Element a) { bits_ = static_cast<std::uint16_t>(bits_ | (1u << a.value)); }
  int size() const;
  bool empty() const { return bits_ == 0; }
  std::uint16_t bits() const { return bits_; }
  std::vector<Element> elements() const;

  friend bool operator==(LabelSet, LabelSet) = default;

 private:
  std::uint16_t bits_ = 0;
};

/// Partial injective map sigma from labels of the lower endpoint of an edge
/// to labels of the higher endpoint. (u, a)(v, sigma(a)) are the cover edges.
class Matching {
 public:
  Matching();
  /// sigma(a) = a on every element of `domain`.
  static Matching identity(LabelSet domain);

  /// Throws InputError when a or b is already matched.
  void add(Element a, Element b);
  std::optional<Element> image(Element a) const;
  std::optional<Element> preimage(Element b) const;
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  /// Pairs (a, sigma(a)) by increasing a.
  std::vector<std::pair<Element, Element>> pairs() const;

  /// Raw forward table, -1 where unsaturated.
  const std::array<std::int8_t, kMaxFieldOrder>& forward() const { return fwd_; }

  friend bool operator==(const Matching& a, const Matching& b) { return a.fwd_ == b.fwd_; }

 private:
  std::array<std::int8_t, kMaxFieldOrder> fwd_;
  std::array<std::int8_t, kMaxFieldOrder> bwd_;
  int size_ = 0;
};

/// Unvalidated cover description, as read from a file. Vertices 0-based.
struct CoverSpec {
  struct RawMatching {
    int u = 0;
    int v = 0;
    std::vector<std::pair<int, int>> pairs;
  };
  int order = 0;
  std::vector<std::vector<int>> labels;
  std::vector<RawMatching> matchings;
};

struct Violation {
  std::string kind;  // "range", "injective", "locality", ...
  std::string message;
};

/// Checks the cover axioms. With a base graph, matchings on non-edges are
/// locality violations; without one the graph is taken from the matchings.
std::vector<Violation> validate(const CoverSpec& spec, const Graph* base = nullptr);

/// A validated DP-cover (L, H) of a graph with labels drawn from F_t.
class Cover {
 public:
  /// `matchings` is indexed like g.edges(). Throws InputError on violations.
  Cover(Graph g, Field field, std::vector<LabelSet> labels, std::vector<Matching> matchings);

  static Cover from_spec(const CoverSpec& spec, const Graph* base = nullptr);
  /// Matchings listed only for edges with a nonempty matching.
  CoverSpec to_spec() const;

  const Graph& graph() const { return graph_; }
  const Field& field() const { return field_; }
  int order() const { return field_.order(); }
  int num_vertices() const { return graph_.num_vertices(); }
  LabelSet labels(int v) const { return labels_[v]; }
  std::span<const LabelSet> all_labels() const { return labels_; }
  const Matching& matching(int edge) const { return matchings_[edge]; }
  std::span<const Matching> matchings() const { return matchings_; }

  /// Same cover with one matching replaced.
  Cover with_matching(int edge, Matching m) const;

  bool operator==(const Cover&) const = default;

 private:
  Graph graph_;
  Field field_;
  std::vector<LabelSet> labels_;
  std::vector<Matching> matchings_;
};

struct SaturationClass {
  enum class Kind { GoodDiff, BadSum, Bad };
  Kind kind = Kind::GoodDiff;
  Element beta{};  // meaningful for GoodDiff and BadSum

  friend bool operator==(const SaturationClass&, const SaturationClass&) = default;
};

/// GoodDiff(beta) when a - sigma(a) = beta throughout (empty maps give
/// beta = 0); otherwise BadSum(beta) when a + sigma(a) = beta throughout;
/// otherwise Bad.
SaturationClass classify_saturation(const Field& field, const Matching& sigma);
SaturationClass classify_saturation(const Cover& cover, int edge);

/// One label per vertex.
struct Transversal {
  std::vector<Element> labels;
  friend bool operator==(const Transversal&, const Transversal&) = default;
};

/// True iff t picks a label of L(v) for every v and no picked pair is matched.
bool is_h_coloring(const Cover& cover, const Transversal& t);

struct HColoringResult {
  SearchStatus status = SearchStatus::None;
  std::optional<Transversal> coloring;  // lexicographically least
  std::uint64_t nodes = 0;
};

/// Backtracking over vertices in index order and labels in increasing order.
HColoringResult h_coloring_search(const Cover& cover, Budget budget = {});

/// Exact number of H-colorings.
std::uint64_t count_h_colorings(const Cover& cover);

/// Cover whose H-colorings are the proper list colorings: sigma is the
/// identity on L(u) and L(v)'s common labels.
Cover cover_from_lists(const Graph& g, const Field& field,
                       std::span<const std::vector<int>> lists);

/// Full-label cover realizing a sign/offset description: sign -1 gives
/// sigma(a) = a - beta, sign +1 (order 3 only) gives sigma(a) = beta - a.
Cover cover_from_pattern(const Graph& g, const Field& field, std::span<const int> signs,
                         std::span<const Element> offsets = {});

/// Per-vertex renaming of labels: map[a] is the new name of label a, -1 if unused.
using LabelMap = std::array<std::int8_t, kMaxFieldOrder>;

/// Applies per-vertex renamings (each injective on L(v)).
Cover relabel_cover(const Cover& cover, std::span<const LabelMap> maps);

struct TreeNormalization {
  Cover cover;
  std::vector<LabelMap> maps;
};

/// Renames labels outward from each component root so every matching on the
/// breadth-first spanning forest becomes the identity.
TreeNormalization tree_normalize(const Cover& cover);

struct GoodCoverResult {
  SearchStatus status = SearchStatus::None;  // Found = good
  std::optional<std::vector<LabelMap>> relabeling;
  std::uint64_t nodes = 0;
};

/// Searches for a renaming under which every saturation function is GoodDiff.
GoodCoverResult is_good_cover(const Cover& cover, Budget budget = {});

/// The uncolorable 3-fold cover of C_{3k}^2: identity matchings except on
/// edges v_{3k-2}v_{3k} and v_{3k-1}v_{3k}, which map a to a + 1.
Cover bad_cover_c3k(int k);

/// 2-fold cover with no H-coloring built on a shortest cycle of g (identity
/// around the cycle, one crossed matching when the cycle is even; empty
/// matchings off the cycle). Absent for forests.
std::optional<Cover> uncolorable_cycle_cover(const Graph& g);

struct DpChromaticResult {
  enum class Status { Exact, AboveLimit, Unknown };
  Status status = Status::Unknown;
  int value = 0;
  std::uint64_t covers_checked = 0;
  std::string progress;
  /// An uncolorable (value-1)-fold cover when value >= 2, or an uncolorable
  /// mmax-fold cover when AboveLimit.
  std::optional<Cover> counterexample;
};

/// Exhaustive chi_DP: for m = chi(G)..mmax enumerates full-label covers with
/// perfect matchings, spanning-forest matchings pinned to the identity.
/// `budget` bounds the number of covers per component and m.
DpChromaticResult exact_dp_chromatic(const Graph& g, int mmax, Budget budget = {}, int jobs = 1);

struct FDpResult {
  enum class Verdict { AllColorable, Counterexample, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::optional<Cover> counterexample;
  std::uint64_t covers_checked = 0;
  std::string progress;
};

/// Checks every f-cover up to maximal matchings and renaming of the lowest
/// vertex's labels.
FDpResult f_dp_exhaustive(const Graph& g, std::span<const int> f, Budget budget = {},
                          int jobs = 1);

/// Labels a of the universal vertex such that deleting the closed
/// neighborhood of (universal, a) leaves |E(G - universal)| * (m - 1)
/// cross-edges.
std::vector<Element> level_vertices(const Cover& cover, int universal);

}  // namespace dpcert
