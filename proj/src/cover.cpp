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

#include "dpcert/cover.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <thread>

namespace dpcert {

// ---------------------------------------------------------------------------
// Labels and matchings

LabelSet LabelSet::range(int m) {
  LabelSet s;
  for (int a = 0; a < m; ++a) s.insert(Element(a));
  return s;
}

LabelSet LabelSet::of(std::span<const Element> labels) {
  LabelSet s;
  for (Element a : labels) s.insert(a);
  return s;
}

int LabelSet::size() const { return std::popcount(static_cast<unsigned>(bits_)); }

std::vector<Element> LabelSet::elements() const {
  std::vector<Element> out;
  for (int a = 0; a < kMaxFieldOrder; ++a) {
    if (bits_ >> a & 1u) out.emplace_back(a);
  }
  return out;
}

Matching::Matching() {
  fwd_.fill(-1);
  bwd_.fill(-1);
}

Matching Matching::identity(LabelSet domain) {
  Matching m;
  for (Element a : domain.elements()) m.add(a, a);
  return m;
}

void Matching::add(Element a, Element b) {
  if (a.value >= kMaxFieldOrder || b.value >= kMaxFieldOrder) {
    throw InputError("matching label out of range");
  }
  if (fwd_[a.value] >= 0 || bwd_[b.value] >= 0) {
    throw InputError("matching is not injective at " + std::to_string(a.value) + "->" +
                     std::to_string(b.value));
  }
  fwd_[a.value] = static_cast<std::int8_t>(b.value);
  bwd_[b.value] = static_cast<std::int8_t>(a.value);
  ++size_;
}

std::optional<Element> Matching::image(Element a) const {
  if (a.value >= kMaxFieldOrder || fwd_[a.value] < 0) return std::nullopt;
  return Element(fwd_[a.value]);
}

std::optional<Element> Matching::preimage(Element b) const {
  if (b.value >= kMaxFieldOrder || bwd_[b.value] < 0) return std::nullopt;
  return Element(bwd_[b.value]);
}

std::vector<std::pair<Element, Element>> Matching::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (int a = 0; a < kMaxFieldOrder; ++a) {
    if (fwd_[a] >= 0) out.emplace_back(Element(a), Element(fwd_[a]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation

std::vector<Violation> validate(const CoverSpec& spec, const Graph* base) {
  std::vector<Violation> out;
  auto report = [&](std::string kind, std::string msg) {
    out.push_back({std::move(kind), std::move(msg)});
  };
  const int n = static_cast<int>(spec.labels.size());
  const int t = spec.order;
  try {
    (void)Field::make(t);
  } catch (const InputError& e) {
    report("order", e.what());
    return out;
  }
  if (base && base->num_vertices() != n) {
    report("vertices", "cover has " + std::to_string(n) + " label sets but the graph has " +
                           std::to_string(base->num_vertices()) + " vertices");
  }
  std::vector<LabelSet> sets(n);
  for (int v = 0; v < n; ++v) {
    const auto& l = spec.labels[v];
    if (l.empty()) report("labels", "L(" + std::to_string(v + 1) + ") is empty");
    for (int a : l) {
      if (a < 0 || a >= t) {
        report("range", "label " + std::to_string(a) + " of vertex " + std::to_string(v + 1) +
                            " is outside F_" + std::to_string(t));
        continue;
      }
      if (sets[v].contains(Element(a))) {
        report("labels", "label " + std::to_string(a) + " repeated at vertex " +
                             std::to_string(v + 1));
      }
      sets[v].insert(Element(a));
    }
  }
  std::vector<Edge> seen;
  for (const auto& m : spec.matchings) {
    const std::string where = "edge " + std::to_string(m.u + 1) + "-" + std::to_string(m.v + 1);
    if (m.u < 0 || m.v < 0 || m.u >= n || m.v >= n) {
      report("range", where + " references a vertex outside 1.." + std::to_string(n));
      continue;
    }
    if (m.u >= m.v) {
      report("order", where + " must be written with i < j");
      continue;
    }
    if (base && !base->adjacent(m.u, m.v)) {
      report("locality", where + " carries a matching but is not an edge of the graph");
    }
    if (std::find(seen.begin(), seen.end(), Edge{m.u, m.v}) != seen.end()) {
      report("duplicate", where + " has more than one matching line");
    }
    seen.push_back({m.u, m.v});
    std::vector<int> dom;
    std::vector<int> img;
    for (auto [a, b] : m.pairs) {
      if (a < 0 || a >= t || !sets[m.u].contains(Element(a))) {
        report("range", where + ": " + std::to_string(a) + " is not a label of vertex " +
                            std::to_string(m.u + 1));
      }
      if (b < 0 || b >= t || !sets[m.v].contains(Element(b))) {
        report("range", where + ": " + std::to_string(b) + " is not a label of vertex " +
                            std::to_string(m.v + 1));
      }
      dom.push_back(a);
      img.push_back(b);
    }
    std::sort(dom.begin(), dom.end());
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(dom.begin(), dom.end()) != dom.end()) {
      report("injective", where + ": a label of vertex " + std::to_string(m.u + 1) +
                              " is matched twice");
    }
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) {
      report("injective", where + ": not injective, two labels map to one label of vertex " +
                              std::to_string(m.v + 1));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cover

Cover::Cover(Graph g, Field field, std::vector<LabelSet> labels, std::vector<Matching> matchings)
    : graph_(std::move(g)), field_(std::move(field)), labels_(std::move(labels)),
      matchings_(std::move(matchings)) {
  const int t = field_.order();
  if (static_cast<int>(labels_.size()) != graph_.num_vertices()) {
    throw InputError("one label set per vertex required");
  }
  if (static_cast<int>(matchings_.size()) != graph_.num_edges()) {
    throw InputError("one matching per edge required");
  }
  for (int v = 0; v < graph_.num_vertices(); ++v) {
    if (labels_[v].empty()) throw InputError("L(" + std::to_string(v + 1) + ") is empty");
    if ((labels_[v].bits() >> t) != 0) {
      throw InputError("L(" + std::to_string(v + 1) + ") has labels outside F_" +
                       std::to_string(t));
    }
  }
  for (int e = 0; e < graph_.num_edges(); ++e) {
    const Edge& edge = graph_.edge(e);
    for (auto [a, b] : matchings_[e].pairs()) {
      if (!labels_[edge.u].contains(a) || !labels_[edge.v].contains(b)) {
        throw InputError("matching on edge " + std::to_string(edge.u + 1) + "-" +
                         std::to_string(edge.v + 1) + " uses a label outside L(v)");
      }
    }
  }
}

Cover Cover::from_spec(const CoverSpec& spec, const Graph* base) {
  const std::vector<Violation> violations = validate(spec, base);
  if (!violations.empty()) {
    std::string msg = "invalid cover:";
    for (const auto& v : violations) msg += "\n  [" + v.kind + "] " + v.message;
    throw InputError(msg);
  }
  const int n = static_cast<int>(spec.labels.size());
  Graph g;
  if (base) {
    g = *base;
  } else {
    std::vector<Edge> edges;
    for (const auto& m : spec.matchings) edges.push_back({m.u, m.v});
    g = Graph(n, std::move(edges));
  }
  std::vector<LabelSet> labels(n);
  for (int v = 0; v < n; ++v) {
    for (int a : spec.labels[v]) labels[v].insert(Element(a));
  }
  std::vector<Matching> matchings(g.num_edges());
  for (const auto& m : spec.matchings) {
    Matching& target = matchings[*g.edge_index(m.u, m.v)];
    for (auto [a, b] : m.pairs) target.add(Element(a), Element(b));
  }
  return Cover(std::move(g), Field::make(spec.order), std::move(labels), std::move(matchings));
}

CoverSpec Cover::to_spec() const {
  CoverSpec spec;
  spec.order = order();
  for (LabelSet l : labels_) {
    std::vector<int> v;
    for (Element a : l.elements()) v.push_back(a.value);
    spec.labels.push_back(std::move(v));
  }
  for (int e = 0; e < graph_.num_edges(); ++e) {
    if (matchings_[e].empty()) continue;
    CoverSpec::RawMatching m{graph_.edge(e).u, graph_.edge(e).v, {}};
    for (auto [a, b] : matchings_[e].pairs()) m.pairs.emplace_back(a.value, b.value);
    spec.matchings.push_back(std::move(m));
  }
  return spec;
}

Cover Cover::with_matching(int edge, Matching m) const {
  std::vector<Matching> ms = matchings_;
  ms.at(edge) = std::move(m);
  return Cover(graph_, field_, labels_, std::move(ms));
}

// ---------------------------------------------------------------------------
// Saturation functions

SaturationClass classify_saturation(const Field& field, const Matching& sigma) {
  const auto pairs = sigma.pairs();
  if (pairs.empty()) return {SaturationClass::Kind::GoodDiff, field.zero()};
  const Element diff = field.sub(pairs[0].first, pairs[0].second);
  const Element sum = field.add(pairs[0].first, pairs[0].second);
  bool good = true;
  bool bad_sum = true;
  for (auto [a, b] : pairs) {
    good = good && field.sub(a, b) == diff;
    bad_sum = bad_sum && field.add(a, b) == sum;
  }
  if (good) return {SaturationClass::Kind::GoodDiff, diff};
  if (bad_sum) return {SaturationClass::Kind::BadSum, sum};
  return {SaturationClass::Kind::Bad, field.zero()};
}

SaturationClass classify_saturation(const Cover& cover, int edge) {
  return classify_saturation(cover.field(), cover.matching(edge));
}

// ---------------------------------------------------------------------------
// H-coloring oracle

namespace {

using Forward = std::array<std::int8_t, kMaxFieldOrder>;

// Flat representation used by the searches: per vertex, the matchings to
// lower-index neighbors.
struct FastCover {
  int n = 0;
  std::vector<std::uint16_t> labels;
  std::vector<std::vector<std::pair<int, int>>> back;  // (edge, lower endpoint)
  std::vector<Forward> fwd;

  explicit FastCover(const Cover& c) : n(c.num_vertices()), back(c.num_vertices()) {
    for (LabelSet l : c.all_labels()) labels.push_back(l.bits());
    for (int e = 0; e < c.graph().num_edges(); ++e) {
      const Edge& edge = c.graph().edge(e);
      back[edge.v].emplace_back(e, edge.u);
      fwd.push_back(c.matching(e).forward());
    }
  }
};

// Depth-first search for the lexicographically least transversal.
SearchStatus fast_search(const FastCover& fc, std::vector<int>& choice, std::uint64_t& nodes,
                         std::uint64_t limit) {
  choice.assign(fc.n, -1);
  if (fc.n == 0) return SearchStatus::Found;
  std::vector<std::uint16_t> avail(fc.n, 0);
  int v = 0;
  auto compute = [&](int w) {
    std::uint16_t forbidden = 0;
    for (auto [e, u] : fc.back[w]) {
      const int b = fc.fwd[e][choice[u]];
      if (b >= 0) forbidden = static_cast<std::uint16_t>(forbidden | (1u << b));
    }
    avail[w] = static_cast<std::uint16_t>(fc.labels[w] & ~forbidden);
  };
  compute(0);
  while (true) {
    if (++nodes > limit) return SearchStatus::BudgetExhausted;
    if (avail[v] == 0) {
      choice[v] = -1;
      if (--v < 0) return SearchStatus::None;
      continue;
    }
    const int a = std::countr_zero(static_cast<unsigned>(avail[v]));
    avail[v] = static_cast<std::uint16_t>(avail[v] & (avail[v] - 1));
    choice[v] = a;
    if (v + 1 == fc.n) return SearchStatus::Found;
    compute(++v);
  }
}

std::uint64_t fast_count(const FastCover& fc) {
  std::vector<int> choice(fc.n, -1);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == fc.n) {
      ++count;
      return;
    }
    std::uint16_t forbidden = 0;
    for (auto [e, u] : fc.back[v]) {
      const int b = fc.fwd[e][choice[u]];
      if (b >= 0) forbidden = static_cast<std::uint16_t>(forbidden | (1u << b));
    }
    for (unsigned m = fc.labels[v] & ~forbidden & 0xFFFFu; m; m &= m - 1) {
      choice[v] = std::countr_zero(m);
      self(self, v + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

bool is_h_coloring(const Cover& cover, const Transversal& t) {
  if (static_cast<int>(t.labels.size()) != cover.num_vertices()) return false;
  for (int v = 0; v < cover.num_vertices(); ++v) {
    if (!cover.labels(v).contains(t.labels[v])) return false;
  }
  for (int e = 0; e < cover.graph().num_edges(); ++e) {
    const Edge& edge = cover.graph().edge(e);
    const auto img = cover.matching(e).image(t.labels[edge.u]);
    if (img && *img == t.labels[edge.v]) return false;
  }
  return true;
}

HColoringResult h_coloring_search(const Cover& cover, Budget budget) {
  HColoringResult r;
  std::vector<int> choice;
  r.status = fast_search(FastCover(cover), choice, r.nodes, budget.limit);
  if (r.status == SearchStatus::Found) {
    Transversal t;
    for (int a : choice) t.labels.emplace_back(a);
    r.coloring = std::move(t);
  }
  return r;
}

std::uint64_t count_h_colorings(const Cover& cover) { return fast_count(FastCover(cover)); }

// ---------------------------------------------------------------------------
// Constructions

Cover cover_from_lists(const Graph& g, const Field& field,
                       std::span<const std::vector<int>> lists) {
  if (static_cast<int>(lists.size()) != g.num_vertices()) {
    throw InputError("one list per vertex required");
  }
  std::vector<LabelSet> labels(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (int a : lists[v]) labels[v].insert(field.element(a));
  }
  std::vector<Matching> matchings;
  for (const Edge& e : g.edges()) {
    LabelSet common;
    for (Element a : labels[e.u].elements()) {
      if (labels[e.v].contains(a)) common.insert(a);
    }
    matchings.push_back(Matching::identity(common));
  }
  return Cover(g, field, std::move(labels), std::move(matchings));
}

Cover cover_from_pattern(const Graph& g, const Field& field, std::span<const int> signs,
                         std::span<const Element> offsets) {
  const std::size_t m = g.edges().size();
  if (signs.size() != m) throw InputError("sign pattern must cover every edge");
  if (!offsets.empty() && offsets.size() != m) throw InputError("offsets must cover every edge");
  std::vector<LabelSet> labels(g.num_vertices(), LabelSet::range(field.order()));
  std::vector<Matching> matchings;
  for (std::size_t e = 0; e < m; ++e) {
    const Element beta = offsets.empty() ? field.zero() : field.element(offsets[e].value);
    Matching sigma;
    if (signs[e] == -1) {
      for (Element a : field.elements()) sigma.add(a, field.sub(a, beta));
    } else if (signs[e] == 1) {
      if (field.order() != 3) {
        throw InputError("sign +1 edges need an order-3 cover, got order " +
                         std::to_string(field.order()));
      }
      for (Element a : field.elements()) sigma.add(a, field.sub(beta, a));
    } else {
      throw InputError("signs must be +1 or -1");
    }
    matchings.push_back(std::move(sigma));
  }
  return Cover(g, field, std::move(labels), std::move(matchings));
}

Cover relabel_cover(const Cover& cover, std::span<const LabelMap> maps) {
  const int n = cover.num_vertices();
  if (static_cast<int>(maps.size()) != n) throw InputError("one label map per vertex required");
  std::vector<LabelSet> labels(n);
  for (int v = 0; v < n; ++v) {
    for (Element a : cover.labels(v).elements()) {
      const int b = maps[v][a.value];
      if (b < 0 || b >= cover.order()) {
        throw InputError("label map of vertex " + std::to_string(v + 1) + " is undefined at " +
                         std::to_string(a.value));
      }
      if (labels[v].contains(Element(b))) {
        throw InputError("label map of vertex " + std::to_string(v + 1) + " is not injective");
      }
      labels[v].insert(Element(b));
    }
  }
  std::vector<Matching> matchings;
  for (int e = 0; e < cover.graph().num_edges(); ++e) {
    const Edge& edge = cover.graph().edge(e);
    Matching m;
    for (auto [a, b] : cover.matching(e).pairs()) {
      m.add(Element(maps[edge.u][a.value]), Element(maps[edge.v][b.value]));
    }
    matchings.push_back(std::move(m));
  }
  return Cover(cover.graph(), cover.field(), std::move(labels), std::move(matchings));
}

TreeNormalization tree_normalize(const Cover& cover) {
  const Graph& g = cover.graph();
  const int n = g.num_vertices();
  const int m = n > 0 ? cover.labels(0).size() : 0;
  for (int v = 0; v < n; ++v) {
    if (cover.labels(v).size() != m) throw InputError("tree normalization needs uniform label sizes");
  }
  if (n > 0 && m < 2) throw InputError("tree normalization needs at least 2 labels per vertex");

  std::vector<LabelMap> maps(n);
  for (auto& map : maps) map.fill(-1);
  std::vector<bool> seen(n, false);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    for (Element a : cover.labels(root).elements()) maps[root][a.value] = static_cast<std::int8_t>(a.value);
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int p = q.front();
      q.pop();
      for (int w : g.neighbors(p)) {
        if (seen[w]) continue;
        seen[w] = true;
        const Matching& sigma = cover.matching(*g.edge_index(p, w));
        if (sigma.size() != m) {
          throw InputError("tree edge " + std::to_string(std::min(p, w) + 1) + "-" +
                           std::to_string(std::max(p, w) + 1) + " has a non-perfect matching");
        }
        for (Element b : cover.labels(w).elements()) {
          const Element partner = p < w ? *sigma.preimage(b) : *sigma.image(b);
          maps[w][b.value] = maps[p][partner.value];
        }
        q.push(w);
      }
    }
  }
  return {relabel_cover(cover, maps), std::move(maps)};
}

GoodCoverResult is_good_cover(const Cover& cover, Budget budget) {
  const Graph& g = cover.graph();
  const Field& F = cover.field();
  const int n = g.num_vertices();
  const int t = F.order();

  // Breadth-first order per component; roots marked.
  std::vector<int> order;
  std::vector<bool> is_root(n, false);
  {
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      is_root[s] = true;
      std::size_t head = order.size();
      order.push_back(s);
      for (; head < order.size(); ++head) {
        for (int w : g.neighbors(order[head])) {
          if (!seen[w]) {
            seen[w] = true;
            order.push_back(w);
          }
        }
      }
    }
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  GoodCoverResult result;
  std::vector<LabelMap> maps(n);
  for (auto& m : maps) m.fill(-1);

  auto edge_good = [&](int e) {
    const Edge& edge = g.edge(e);
    bool first = true;
    Element diff{};
    for (auto [a, b] : cover.matching(e).pairs()) {
      const Element d = F.sub(Element(maps[edge.u][a.value]), Element(maps[edge.v][b.value]));
      if (first) {
        diff = d;
        first = false;
      } else if (d != diff) {
        return false;
      }
    }
    return true;
  };

  bool exhausted = false;
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    if (++result.nodes > budget.limit) {
      exhausted = true;
      return false;
    }
    const int v = order[i];
    const std::vector<Element> own = cover.labels(v).elements();
    const int k = static_cast<int>(own.size());
    // Injective maps own -> F_t in lexicographic order of images. For t <= 3
    // every injection at a root is equivalent under a common affine renaming.
    std::vector<int> img(k);
    std::vector<bool> used(t, false);
    auto place = [&](auto&& again, int slot) -> bool {
      if (exhausted) return false;
      if (slot == k) {
        for (int s = 0; s < k; ++s) maps[v][own[s].value] = static_cast<std::int8_t>(img[s]);
        bool ok = true;
        for (int w : g.neighbors(v)) {
          if (pos[w] < i && !edge_good(*g.edge_index(v, w))) {
            ok = false;
            break;
          }
        }
        return ok && self(self, i + 1);
      }
      for (int b = 0; b < t; ++b) {
        if (used[b]) continue;
        used[b] = true;
        img[slot] = b;
        const bool found = again(again, slot + 1);
        used[b] = false;
        if (found) return true;
        if (is_root[v] && t <= 3) return false;
      }
      return false;
    };
    const bool found = place(place, 0);
    if (!found) maps[v].fill(-1);
    return found;
  };

  if (rec(rec, 0)) {
    result.status = SearchStatus::Found;
    result.relabeling = maps;
  } else {
    result.status = exhausted ? SearchStatus::BudgetExhausted : SearchStatus::None;
  }
  return result;
}

Cover bad_cover_c3k(int k) {
  if (k < 2) throw InputError("bad cover of C_{3k}^2 needs k >= 2");
  const int n = 3 * k;
  Graph g = cycle_power(n, 2);
  Field F = Field::make(3);
  std::vector<LabelSet> labels(n, LabelSet::range(3));
  std::vector<Matching> matchings;
  const int last = n - 1;
  for (const Edge& e : g.edges()) {
    Matching sigma;
    const bool shifted = e.v == last && (e.u == n - 3 || e.u == n - 2);
    for (Element a : F.elements()) sigma.add(a, shifted ? F.add(a, F.one()) : a);
    matchings.push_back(std::move(sigma));
  }
  return Cover(std::move(g), std::move(F), std::move(labels), std::move(matchings));
}

std::optional<Cover> uncolorable_cycle_cover(const Graph& g) {
  const auto cycle = shortest_cycle(g);
  if (!cycle) return std::nullopt;
  Field F = Field::make(2);
  std::vector<LabelSet> labels(g.num_vertices(), LabelSet::range(2));
  std::vector<Matching> matchings(g.num_edges());
  const int len = static_cast<int>(cycle->size());
  for (int i = 0; i < len; ++i) {
    const int a = (*cycle)[i];
    const int b = (*cycle)[(i + 1) % len];
    const int e = *g.edge_index(a, b);
    const bool crossed = len % 2 == 0 && i == len - 1;
    Matching sigma;
    for (int x = 0; x < 2; ++x) sigma.add(Element(x), Element(crossed ? 1 - x : x));
    matchings[e] = sigma;
  }
  return Cover(g, std::move(F), std::move(labels), std::move(matchings));
}

// ---------------------------------------------------------------------------
// Exhaustive cover sweeps

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

// A family of covers sharing labels and fixed matchings; each free edge picks
// one of its options. Covers are ordered lexicographically by option index,
// first free edge most significant.
struct CoverFamily {
  FastCover base;
  std::vector<int> free_edges;
  std::vector<std::vector<Forward>> options;

  std::uint64_t size() const {
    std::uint64_t s = 1;
    for (const auto& o : options) s = saturating_mul(s, o.size());
    return s;
  }

  std::vector<std::size_t> digits(std::uint64_t index) const {
    std::vector<std::size_t> d(options.size());
    for (std::size_t i = options.size(); i-- > 0;) {
      d[i] = index % options[i].size();
      index /= options[i].size();
    }
    return d;
  }
};

struct SweepResult {
  std::optional<std::uint64_t> first_uncolorable;
  std::uint64_t examined = 0;  // covers in order up to and including the answer
};

SweepResult sweep(const CoverFamily& family, int jobs) {
  const std::uint64_t total = family.size();
  std::atomic<std::uint64_t> best{UINT64_MAX};
  const int workers = static_cast<int>(std::max<std::uint64_t>(
      1, std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(jobs, 1)), total)));

  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    if (lo >= hi) return;
    FastCover fc = family.base;
    std::vector<std::size_t> d = family.digits(lo);
    for (std::size_t i = 0; i < d.size(); ++i) fc.fwd[family.free_edges[i]] = family.options[i][d[i]];
    std::vector<int> choice;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      if (idx >= best.load(std::memory_order_relaxed)) return;
      std::uint64_t nodes = 0;
      if (fast_search(fc, choice, nodes, UINT64_MAX) == SearchStatus::None) {
        std::uint64_t cur = best.load();
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
        return;
      }
      for (std::size_t i = d.size(); i-- > 0;) {
        if (++d[i] < family.options[i].size()) {
          fc.fwd[family.free_edges[i]] = family.options[i][d[i]];
          break;
        }
        d[i] = 0;
        fc.fwd[family.free_edges[i]] = family.options[i][0];
      }
    }
  };

  if (workers == 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = chunk * w;
      pool.emplace_back(work, lo, std::min(total, lo + chunk));
    }
    for (auto& th : pool) th.join();
  }
  SweepResult r;
  if (best.load() != UINT64_MAX) {
    r.first_uncolorable = best.load();
    r.examined = best.load() + 1;
  } else {
    r.examined = total;
  }
  return r;
}

Cover materialize(const Cover& base, const CoverFamily& family, std::uint64_t index) {
  const std::vector<std::size_t> d = family.digits(index);
  std::vector<Matching> ms(base.matchings().begin(), base.matchings().end());
  for (std::size_t i = 0; i < d.size(); ++i) {
    Matching m;
    const Forward& f = family.options[i][d[i]];
    for (int a = 0; a < kMaxFieldOrder; ++a) {
      if (f[a] >= 0) m.add(Element(a), Element(f[a]));
    }
    ms[family.free_edges[i]] = std::move(m);
  }
  return Cover(base.graph(), base.field(), std::vector<LabelSet>(base.all_labels().begin(),
                                                                 base.all_labels().end()),
               std::move(ms));
}

// Embeds a cover of an induced component into the whole graph, giving other
// vertices `fill[v]` labels and empty matchings.
Cover lift(const Graph& g, std::span<const int> comp, const Cover& part,
           std::span<const int> fill) {
  std::vector<int> pos(g.num_vertices(), -1);
  for (std::size_t i = 0; i < comp.size(); ++i) pos[comp[i]] = static_cast<int>(i);
  std::vector<LabelSet> labels(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    labels[v] = pos[v] >= 0 ? part.labels(pos[v]) : LabelSet::range(fill[v]);
  }
  std::vector<Matching> ms(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    if (pos[edge.u] >= 0 && pos[edge.v] >= 0) {
      ms[e] = part.matching(*part.graph().edge_index(pos[edge.u], pos[edge.v]));
    }
  }
  return Cover(g, part.field(), std::move(labels), std::move(ms));
}

Cover identity_cover(const Graph& g, int m) {
  Field F = Field::make(smallest_prime_power_at_least(std::max(m, 2)));
  std::vector<Matching> ms(g.num_edges(), Matching::identity(LabelSet::range(m)));
  return Cover(g, std::move(F), std::vector<LabelSet>(g.num_vertices(), LabelSet::range(m)),
               std::move(ms));
}

void verify_uncolorable(const Cover& c) {
  if (h_coloring_search(c).status != SearchStatus::None) {
    throw ConsistencyError("reported counterexample cover is colorable");
  }
}

// Injective sequences of length len drawn from {0..range-1}, lexicographic.
std::vector<std::vector<int>> injective_sequences(int len, int range) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(range, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x < range; ++x) {
      if (used[x]) continue;
      used[x] = true;
      cur.push_back(x);
      self(self);
      cur.pop_back();
      used[x] = false;
    }
  };
  rec(rec);
  return out;
}

struct ComponentOutcome {
  DpChromaticResult::Status status = DpChromaticResult::Status::Unknown;
  int value = 0;
  std::optional<Cover> counterexample;  // on the component graph
  int counterexample_m = 0;
  std::uint64_t covers = 0;
  std::string progress;
};

ComponentOutcome component_dp(const Graph& h, int mmax, Budget budget, int jobs) {
  ComponentOutcome out;
  if (h.num_edges() == 0) {
    out.status = DpChromaticResult::Status::Exact;
    out.value = 1;
    return out;
  }
  const ChromaticResult chi = chromatic_number(h, mmax, budget);
  if (chi.status == ChromaticResult::Status::Unknown) {
    out.progress = "chromatic number search exhausted its budget";
    return out;
  }
  if (chi.status == ChromaticResult::Status::AboveLimit) {
    out.status = DpChromaticResult::Status::AboveLimit;
    out.counterexample = identity_cover(h, mmax);
    out.counterexample_m = mmax;
    out.progress = "chromatic number exceeds " + std::to_string(mmax);
    return out;
  }
  if (chi.value >= 2) {
    out.counterexample = identity_cover(h, chi.value - 1);
    out.counterexample_m = chi.value - 1;
  }
  const std::vector<int> tree = spanning_tree(h);
  std::vector<bool> in_tree(h.num_edges(), false);
  for (int e : tree) in_tree[e] = true;

  for (int m = chi.value; m <= mmax; ++m) {
    const Cover base = identity_cover(h, m);
    CoverFamily family{FastCover(base), {}, {}};
    std::vector<Forward> perms;
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
      Forward f;
      f.fill(-1);
      for (int a = 0; a < m; ++a) f[a] = static_cast<std::int8_t>(p[a]);
      perms.push_back(f);
    } while (std::next_permutation(p.begin(), p.end()));
    for (int e = 0; e < h.num_edges(); ++e) {
      if (in_tree[e]) continue;
      family.free_edges.push_back(e);
      family.options.push_back(perms);
    }
    const std::uint64_t total = family.size();
    if (total > budget.limit) {
      out.status = DpChromaticResult::Status::Unknown;
      out.progress = "m = " + std::to_string(m) + ": " +
                     (total == UINT64_MAX ? std::string("too many") : std::to_string(total)) +
                     " covers exceed the budget of " + std::to_string(budget.limit);
      return out;
    }
    const SweepResult r = sweep(family, jobs);
    out.covers += r.examined;
    if (!r.first_uncolorable) {
      out.status = DpChromaticResult::Status::Exact;
      out.value = m;
      return out;
    }
    out.counterexample = materialize(base, family, *r.first_uncolorable);
    out.counterexample_m = m;
  }
  out.status = DpChromaticResult::Status::AboveLimit;
  out.value = mmax;
  return out;
}

}  // namespace

DpChromaticResult exact_dp_chromatic(const Graph& g, int mmax, Budget budget, int jobs) {
  DpChromaticResult result;
  if (mmax < 1 || mmax > kMaxFieldOrder) throw InputError("mmax must lie in [1, 16]");
  if (g.num_vertices() == 0) {
    result.status = DpChromaticResult::Status::Exact;
    return result;
  }
  bool unknown = false;
  int best = 0;
  for (const auto& comp : connected_components(g)) {
    const Graph h = induced_subgraph(g, comp);
    ComponentOutcome c = component_dp(h, mmax, budget, jobs);
    result.covers_checked += c.covers;
    auto lifted = [&] {
      std::vector<int> fill(g.num_vertices(), c.counterexample_m);
      Cover full = lift(g, comp, *c.counterexample, fill);
      verify_uncolorable(full);
      return full;
    };
    if (c.status == DpChromaticResult::Status::AboveLimit) {
      result.status = c.status;
      result.value = mmax;
      result.counterexample = lifted();
      result.progress = c.progress;
      return result;
    }
    if (c.status == DpChromaticResult::Status::Unknown) {
      unknown = true;
      if (!result.progress.empty()) result.progress += "; ";
      result.progress += c.progress;
      continue;
    }
    if (c.value > best) {
      best = c.value;
      result.counterexample.reset();
      if (c.counterexample) result.counterexample = lifted();
    }
  }
  result.status = unknown ? DpChromaticResult::Status::Unknown : DpChromaticResult::Status::Exact;
  result.value = best;
  return result;
}

FDpResult f_dp_exhaustive(const Graph& g, std::span<const int> f, Budget budget, int jobs) {
  const int n = g.num_vertices();
  if (static_cast<int>(f.size()) != n) throw InputError("size function needs one value per vertex");
  int fmax = 1;
  for (int v = 0; v < n; ++v) {
    if (f[v] < 1) throw InputError("size function values must be positive");
    fmax = std::max(fmax, f[v]);
  }
  const Field F = Field::make(smallest_prime_power_at_least(std::max(fmax, 2)));

  FDpResult result;
  for (const auto& comp : connected_components(g)) {
    const Graph h = induced_subgraph(g, comp);
    std::vector<int> fh;
    for (int v : comp) fh.push_back(f[v]);
    std::vector<LabelSet> labels;
    for (int s : fh) labels.push_back(LabelSet::range(s));
    const Cover base(h, F, labels, std::vector<Matching>(h.num_edges()));
    CoverFamily family{FastCover(base), {}, {}};

    // The first edge at the component's lowest vertex is reduced modulo
    // renaming that vertex's labels.
    int reduced_edge = -1;
    for (int e = 0; e < h.num_edges(); ++e) {
      if (h.edge(e).u == 0) {
        reduced_edge = e;
        break;
      }
    }
    for (int e = 0; e < h.num_edges(); ++e) {
      const int a = fh[h.edge(e).u];
      const int b = fh[h.edge(e).v];
      std::vector<Forward> opts;
      if (a <= b) {
        for (const auto& sel : injective_sequences(a, b)) {
          if (e == reduced_edge && !std::is_sorted(sel.begin(), sel.end())) continue;
          Forward fw;
          fw.fill(-1);
          for (int x = 0; x < a; ++x) fw[x] = static_cast<std::int8_t>(sel[x]);
          opts.push_back(fw);
        }
      } else {
        for (const auto& src : injective_sequences(b, a)) {
          if (e == reduced_edge) {
            bool canonical = true;
            for (int y = 0; y < b; ++y) canonical = canonical && src[y] == y;
            if (!canonical) continue;
          }
          Forward fw;
          fw.fill(-1);
          for (int y = 0; y < b; ++y) fw[src[y]] = static_cast<std::int8_t>(y);
          opts.push_back(fw);
        }
      }
      family.free_edges.push_back(e);
      family.options.push_back(std::move(opts));
    }
    const std::uint64_t total = family.size();
    if (total > budget.limit) {
      result.verdict = FDpResult::Verdict::Unknown;
      result.progress = (total == UINT64_MAX ? std::string("too many") : std::to_string(total)) +
                        " covers exceed the budget of " + std::to_string(budget.limit);
      return result;
    }
    const SweepResult r = sweep(family, jobs);
    result.covers_checked += r.examined;
    if (r.first_uncolorable) {
      const Cover part = materialize(base, family, *r.first_uncolorable);
      Cover full = lift(g, comp, part, f);
      verify_uncolorable(full);
      result.verdict = FDpResult::Verdict::Counterexample;
      result.counterexample = std::move(full);
      return result;
    }
  }
  result.verdict = FDpResult::Verdict::AllColorable;
  return result;
}

std::vector<Element> level_vertices(const Cover& cover, int universal) {
  const Graph& g = cover.graph();
  const int n = g.num_vertices();
  if (universal < 0 || universal >= n) throw InputError("universal vertex out of range");
  const LabelSet top = cover.labels(universal);
  const int l = top.size();
  int m = -1;
  for (int v = 0; v < n; ++v) {
    if (v == universal) continue;
    const auto e = g.edge_index(universal, v);
    if (!e) {
      throw InputError("vertex " + std::to_string(universal + 1) + " is not adjacent to " +
                       std::to_string(v + 1));
    }
    if (cover.matching(*e).size() != l) {
      throw InputError("matching between " + std::to_string(universal + 1) + " and " +
                       std::to_string(v + 1) + " is not maximal");
    }
    if (m < 0) m = cover.labels(v).size();
    if (cover.labels(v).size() != m || m < l) {
      throw InputError("non-universal vertices need a common label count m >= |L(universal)|");
    }
  }
  int base_edges = 0;
  for (const Edge& e : g.edges()) {
    if (e.u != universal && e.v != universal) ++base_edges;
  }
  std::vector<Element> level;
  for (Element a : top.elements()) {
    std::vector<int> removed(n, -1);
    for (int v = 0; v < n; ++v) {
      if (v == universal) continue;
      const Matching& sigma = cover.matching(*g.edge_index(universal, v));
      removed[v] = (universal < v ? sigma.image(a) : sigma.preimage(a))->value;
    }
    int cross = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
      const Edge& edge = g.edge(e);
      if (edge.u == universal || edge.v == universal) continue;
      for (auto [x, y] : cover.matching(e).pairs()) {
        if (x.value != removed[edge.u] && y.value != removed[edge.v]) ++cross;
      }
    }
    if (cross == base_edges * (m - 1)) level.push_back(a);
  }
  return level;
}

}  // namespace dpcert
