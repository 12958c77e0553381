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

#include "dpcert/certify.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <thread>

namespace dpcert {

namespace {

Element factor_value(const Field& F, const SignedEdgeFactor& f, std::span<const Element> x) {
  const Element s = f.sign < 0 ? F.sub(x[f.i], x[f.j]) : F.add(x[f.i], x[f.j]);
  return F.sub(s, f.offset);
}

// First grid point (lexicographic, vertices in index order) where every
// factor is nonzero.
std::optional<std::vector<Element>> first_nonzero_point(const EdgeProductPolynomial& poly,
                                                        std::span<const LabelSet> sets,
                                                        std::uint64_t& nodes) {
  const int n = poly.num_vars();
  std::vector<std::vector<const SignedEdgeFactor*>> closing(n);
  for (const auto& f : poly.factors()) closing[f.j].push_back(&f);
  std::vector<Element> x(n);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (Element a : sets[v].elements()) {
      ++nodes;
      x[v] = a;
      bool ok = true;
      for (const auto* f : closing[v]) {
        if (factor_value(poly.field(), *f, x).is_zero()) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, v + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return x;
}

std::optional<Certificate> certify_with(const Cover& cover, std::vector<int> signs,
                                        std::vector<Element> offsets, std::string kind,
                                        std::uint64_t limit) {
  const Graph& g = cover.graph();
  const Field& F = cover.field();
  const auto poly = EdgeProductPolynomial::from_graph(g, F, signs, offsets);
  std::vector<int> caps;
  for (LabelSet l : cover.all_labels()) caps.push_back(l.size() - 1);
  ExpansionStats stats;
  const auto q = find_qualifying_monomial(poly, ExponentVector(caps), limit, &stats);
  if (!q) return std::nullopt;

  Certificate c;
  c.kind = std::move(kind);
  c.claim = "the cover has an H-coloring";
  c.field_order = F.order();
  c.edges.assign(g.edges().begin(), g.edges().end());
  c.signs = std::move(signs);
  c.offsets = std::move(offsets);
  c.monomial = q->exponents;
  c.coefficient = q->coefficient;
  c.work = stats.term_updates;

  std::uint64_t nodes = 0;
  const auto point = first_nonzero_point(poly, cover.all_labels(), nodes);
  c.work += nodes;
  if (!point) {
    throw ConsistencyError("nonzero qualifying coefficient but no nonvanishing grid point");
  }
  Transversal t{*point};
  if (!is_h_coloring(cover, t)) {
    throw ConsistencyError("nonvanishing point is not an H-coloring");
  }
  c.witness = std::move(t);
  c.verified = true;
  return c;
}

}  // namespace

std::optional<Certificate> thm_null_certify(const Cover& cover, std::uint64_t limit) {
  const Graph& g = cover.graph();
  std::vector<Element> offsets;
  for (int e = 0; e < g.num_edges(); ++e) {
    const SaturationClass cls = classify_saturation(cover, e);
    if (cls.kind != SaturationClass::Kind::GoodDiff) {
      throw HypothesisError("edge " + std::to_string(g.edge(e).u + 1) + "-" +
                            std::to_string(g.edge(e).v + 1) +
                            " is not good under the current naming; rename with a good-cover "
                            "search or use order-3 mode");
    }
    offsets.push_back(cls.beta);
  }
  return certify_with(cover, std::vector<int>(g.num_edges(), -1), std::move(offsets),
                      "good-cover", limit);
}

std::optional<Certificate> thm_null3_certify(const Cover& cover, std::uint64_t limit) {
  if (cover.order() != 3) {
    throw InputError("order-3 certification needs t = 3, got t = " +
                     std::to_string(cover.order()));
  }
  std::vector<int> signs;
  std::vector<Element> offsets;
  for (int e = 0; e < cover.graph().num_edges(); ++e) {
    const SaturationClass cls = classify_saturation(cover, e);
    if (cls.kind == SaturationClass::Kind::Bad) {
      throw ConsistencyError("order-3 matching classified as neither good nor bad-sum");
    }
    signs.push_back(cls.kind == SaturationClass::Kind::GoodDiff ? -1 : 1);
    offsets.push_back(cls.beta);
  }
  return certify_with(cover, std::move(signs), std::move(offsets), "order3-cover", limit);
}

std::vector<int> pattern_signs(const Graph& g, std::span<const int> free_edges,
                               std::uint64_t pattern) {
  std::vector<int> signs(g.num_edges(), -1);
  for (std::size_t k = 0; k < free_edges.size(); ++k) {
    if (pattern >> k & 1u) signs[free_edges[k]] = 1;
  }
  return signs;
}

Dp3Report dp3_certify(const Graph& g, bool use_spanning_tree, int jobs, Budget budget) {
  if (g.num_edges() == 0) throw HypothesisError("graph has no edges");
  Dp3Report report;
  if (use_spanning_tree) {
    if (!is_connected(g)) throw HypothesisError("spanning-tree mode needs a connected graph");
    if (g.num_edges() < g.num_vertices()) {
      throw HypothesisError("spanning-tree mode needs a graph containing a cycle");
    }
    std::vector<bool> in_tree(g.num_edges(), false);
    for (int e : spanning_tree(g)) in_tree[e] = true;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (!in_tree[e]) report.free_edges.push_back(e);
    }
  } else {
    report.free_edges.resize(g.num_edges());
    std::iota(report.free_edges.begin(), report.free_edges.end(), 0);
  }
  if (report.free_edges.size() >= 63 ||
      (std::uint64_t{1} << report.free_edges.size()) > budget.limit) {
    throw BudgetExceeded("2^" + std::to_string(report.free_edges.size()) +
                         " sign patterns exceed the budget of " + std::to_string(budget.limit));
  }
  const std::uint64_t total = std::uint64_t{1} << report.free_edges.size();
  const Field F = Field::make(3);
  const ExponentVector caps(std::vector<int>(g.num_vertices(), 2));

  const int workers =
      static_cast<int>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(jobs), 1, total));
  std::vector<std::vector<PatternCertificate>> certs(workers);
  std::vector<std::vector<std::uint64_t>> fails(workers);
  std::mutex error_lock;
  std::exception_ptr error;
  auto work = [&](int w, std::uint64_t lo, std::uint64_t hi) {
    try {
      for (std::uint64_t p = lo; p < hi; ++p) {
        const auto signs = pattern_signs(g, report.free_edges, p);
        const auto poly = EdgeProductPolynomial::from_graph(g, F, signs);
        const auto q = find_qualifying_monomial(poly, caps);
        if (q) {
          certs[w].push_back({p, q->exponents, q->coefficient});
        } else {
          fails[w].push_back(p);
        }
      }
    } catch (...) {
      std::lock_guard lock(error_lock);
      if (!error) error = std::current_exception();
    }
  };
  const std::uint64_t chunk = (total + workers - 1) / workers;
  if (workers == 1) {
    work(0, 0, total);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back(work, w, chunk * w, std::min(total, chunk * (w + 1)));
    }
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  for (int w = 0; w < workers; ++w) {
    report.failures.patterns.insert(report.failures.patterns.end(), fails[w].begin(),
                                    fails[w].end());
    for (auto& c : certs[w]) report.certificates.push_back(std::move(c));
  }
  std::sort(report.failures.patterns.begin(), report.failures.patterns.end());
  std::sort(report.certificates.begin(), report.certificates.end(),
            [](const auto& a, const auto& b) { return a.pattern < b.pattern; });
  report.tested = total;
  report.failures.tested = total;
  report.pass = report.failures.patterns.empty();
  if (!report.pass) report.certificates.clear();
  return report;
}

Certificate unique_list_certify(const Graph& g, std::span<const std::vector<int>> lists, int t) {
  const Field F = Field::make(t);
  const int n = g.num_vertices();
  if (static_cast<int>(lists.size()) != n) throw InputError("one list per vertex required");
  std::vector<std::vector<Element>> sets;
  std::size_t total = 0;
  for (int v = 0; v < n; ++v) {
    std::vector<Element> s;
    for (int a : lists[v]) s.push_back(F.element(a));
    total += s.size();
    sets.push_back(std::move(s));
  }
  if (total != static_cast<std::size_t>(n + g.num_edges())) {
    throw HypothesisError("list sizes sum to " + std::to_string(total) + ", need |V| + |E| = " +
                          std::to_string(n + g.num_edges()));
  }
  const GridSpec grid(F, sets);  // rejects repeated or empty lists
  const ListColoringCount count = count_list_colorings(g, lists, 2);
  if (count.count != 1) {
    throw HypothesisError(count.count == 0 ? "no proper list coloring exists"
                                           : "more than one proper list coloring exists");
  }
  const auto poly = EdgeProductPolynomial::from_graph(g, F);
  std::vector<Element> a;
  for (int c : *count.first) a.push_back(F.element(c));
  const Element single = F.mul(grid.inverse_weight(a), poly.evaluate(a));
  std::uint64_t visited = 0;
  const Element summed = grid_coefficient(poly, grid, &visited);
  if (single != summed) {
    throw ConsistencyError("grid sum disagrees with its single nonzero term");
  }
  if (single.is_zero()) throw ConsistencyError("unique coloring gives a zero grid term");

  Certificate c;
  c.kind = "unique-list";
  c.claim = "every good prime f-cover of order " + std::to_string(t) +
            " with f(v) = |P(v)| has an H-coloring";
  c.field_order = t;
  c.edges.assign(g.edges().begin(), g.edges().end());
  c.monomial = grid.exponents();
  c.coefficient = single;
  c.work = visited;
  Transversal w{a};
  if (!is_h_coloring(cover_from_lists(g, F, lists), w)) {
    throw ConsistencyError("unique list coloring fails transversal validation");
  }
  c.witness = std::move(w);
  c.verified = true;
  return c;
}

Certificate cone_bipartite_certify(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0 || !is_connected(g)) throw HypothesisError("graph must be connected");
  const auto side = bipartition(g);
  if (!side) throw HypothesisError("graph is not bipartite");
  if (g.num_edges() != n) {
    throw HypothesisError("need |V| = |E|, got " + std::to_string(n) + " vertices and " +
                          std::to_string(g.num_edges()) + " edges");
  }
  std::vector<int> order;
  for (int pass = 0; pass < 2; ++pass) {
    for (int v = 0; v < n; ++v) {
      if (((*side)[v] == (*side)[0]) == (pass == 0)) order.push_back(v);
    }
  }
  const int first_part = static_cast<int>(
      std::count(side->begin(), side->end(), (*side)[0]));
  const Graph cg = cone(relabel(g, order));
  const Field F = Field::make(3);
  const auto poly = EdgeProductPolynomial::from_graph(cg, F);
  std::vector<int> target(n + 1, 2);
  target[0] = 0;
  const ExponentVector tv(target);
  const Element value = coefficient_at(poly, tv, CoefficientMethod::Both);
  const Element expected = first_part % 2 == 0 ? F.from_int(2) : F.from_int(-2);
  if (value != expected) {
    throw ConsistencyError("cone coefficient " + std::to_string(value.value) +
                           " differs from 2(-1)^m = " + std::to_string(expected.value));
  }

  Certificate c;
  c.kind = "cone-bipartite";
  c.claim = "every good prime f-cover of order 3 of the cone with f = 1 at the apex and 3 "
            "elsewhere has an H-coloring";
  c.field_order = 3;
  c.vertex_order = order;
  c.edges.assign(cg.edges().begin(), cg.edges().end());
  c.monomial = tv;
  c.coefficient = value;
  c.verified = true;
  return c;
}

Certificate cone_unique3_certify(const Graph& g, std::span<const int> class_order) {
  const UniqueColoringResult u = unique_k_analysis(g, 3);
  if (!u.stats) throw HypothesisError("not uniquely 3-colorable: " + u.reason);
  const ColorClassStats& s = *u.stats;
  const int n = g.num_vertices();
  if (2 * n != g.num_edges()) {
    throw HypothesisError("need 2(n1 + n2 + n3) = |E|, got " + std::to_string(2 * n) + " and " +
                          std::to_string(g.num_edges()));
  }
  std::vector<std::array<int, 3>> orders;
  if (class_order.empty()) {
    std::array<int, 3> p{0, 1, 2};
    do {
      orders.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  } else {
    if (class_order.size() != 3) throw InputError("class order needs three indices");
    std::array<int, 3> p{class_order[0], class_order[1], class_order[2]};
    std::array<int, 3> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{0, 1, 2}) {
      throw InputError("class order must be a permutation of 0, 1, 2");
    }
    orders.push_back(p);
  }
  std::optional<std::array<int, 3>> chosen;
  std::string failures;
  for (const auto& p : orders) {
    auto nn = [&](int i) { return s.sizes[p[i - 1]]; };
    auto mm = [&](int i, int j) { return s.cross_edges[p[i - 1]][p[j - 1]]; };
    std::vector<std::string> bad;
    if ((nn(2) + mm(1, 3)) % 3 != 0) bad.push_back("n2 + m13 = 0");
    if ((nn(3) + mm(1, 2)) % 3 != 1) bad.push_back("n3 + m12 = 1");
    if ((nn(1) + mm(2, 3)) % 3 != 2) bad.push_back("n1 + m23 = 2");
    if (bad.empty()) {
      chosen = p;
      break;
    }
    failures += "\n  order (" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
                std::to_string(p[2]) + ") fails:";
    for (const auto& b : bad) failures += " " + b + " (mod 3);";
  }
  if (!chosen) throw HypothesisError("congruences fail for every class order:" + failures);

  const Graph cg = cone(g);
  const Field F = Field::make(4);
  const auto poly = EdgeProductPolynomial::from_graph(cg, F);
  std::vector<int> target(n + 1, 3);
  target[0] = 0;
  const ExponentVector tv(target);
  const Element value = coefficient_at(poly, tv, CoefficientMethod::Both);
  if (value != F.one()) {
    throw ConsistencyError("cone coefficient over F_4 is " + std::to_string(value.value) +
                           ", expected 1");
  }
  Certificate c;
  c.kind = "cone-unique3";
  c.claim = "every good prime f-cover of order 4 of the cone with f = 1 at the apex and 4 "
            "elsewhere has an H-coloring; classes I1, I2, I3 = " +
            std::to_string((*chosen)[0]) + ", " + std::to_string((*chosen)[1]) + ", " +
            std::to_string((*chosen)[2]);
  c.field_order = 4;
  c.edges.assign(cg.edges().begin(), cg.edges().end());
  c.monomial = tv;
  c.coefficient = value;
  c.verified = true;
  return c;
}

namespace {

DpBounds component_bounds(const Graph& h, Budget budget, int jobs) {
  DpBounds b;
  const int n = h.num_vertices();
  if (h.num_edges() == 0) {
    b.lower = b.upper = 1;
    b.lower_reason = b.upper_reason = "no edges";
    return b;
  }
  const ChromaticResult chi = chromatic_number(h, n, budget);
  if (chi.status == ChromaticResult::Status::Exact) {
    b.lower = chi.value;
    b.lower_reason = "chromatic number";
  } else {
    b.lower = 2;
    b.lower_reason = "has an edge";
  }
  if (b.lower < 3) {
    if (auto c = uncolorable_cycle_cover(h); c && h_coloring_search(*c, budget).status ==
                                                      SearchStatus::None) {
      b.lower = 3;
      b.lower_reason = "uncolorable 2-fold cover on a shortest cycle";
    }
  }
  if (b.lower < 4 && n % 3 == 0 && n >= 6 && h == cycle_power(n, 2)) {
    const Cover c = bad_cover_c3k(n / 3);
    if (h_coloring_search(c, budget).status == SearchStatus::None) {
      b.lower = 4;
      b.lower_reason = "uncolorable 3-fold cover of the cycle square";
    }
  }

  if (is_complete(h)) {
    b.upper = n;
    b.upper_reason = "complete graph";
  } else if (is_cycle(h)) {
    b.upper = 3;
    b.upper_reason = "cycle";
  } else {
    const int col = coloring_number(h);
    const int delta = h.max_degree();
    if (delta <= col) {
      b.upper = delta;
      b.upper_reason = "maximum degree";
    } else {
      b.upper = col;
      b.upper_reason = "coloring number";
    }
  }
  if (b.upper > 3 && b.lower <= 3 && h.num_edges() >= n) {
    const std::uint64_t patterns_log = static_cast<std::uint64_t>(h.num_edges() - n + 1);
    if (patterns_log < 20 && (std::uint64_t{1} << patterns_log) <= budget.limit) {
      try {
        if (dp3_certify(h, true, jobs, budget).pass) {
          b.upper = 3;
          b.upper_reason = "every sign pattern over F_3 has a nonzero coefficient";
        }
      } catch (const BudgetExceeded&) {
      }
    }
  }
  if (b.lower < b.upper) {
    const DpChromaticResult r = exact_dp_chromatic(h, b.upper, budget, jobs);
    if (r.status == DpChromaticResult::Status::Exact) {
      b.lower = b.upper = r.value;
      b.lower_reason = b.upper_reason = "exhaustive cover search";
    }
  }
  return b;
}

}  // namespace

DpBounds chi_dp_bounds(const Graph& g, Budget budget, int jobs) {
  DpBounds out;
  for (const auto& comp : connected_components(g)) {
    const DpBounds b = component_bounds(induced_subgraph(g, comp), budget, jobs);
    if (b.lower > out.lower) {
      out.lower = b.lower;
      out.lower_reason = b.lower_reason;
    }
    if (b.upper > out.upper) {
      out.upper = b.upper;
      out.upper_reason = b.upper_reason;
    }
  }
  return out;
}

}  // namespace dpcert
