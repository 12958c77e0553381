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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "dpcert/certify.hpp"
#include "support/oracles.hpp"

using namespace dpcert;

namespace {

std::vector<std::array<int, 3>> perms3() {
  std::vector<std::array<int, 3>> out;
  std::array<int, 3> p{0, 1, 2};
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Matching from_perm(const std::array<int, 3>& p) {
  Matching m;
  for (int a = 0; a < 3; ++a) m.add(Element(a), Element(p[a]));
  return m;
}

Cover random_full_cover(std::mt19937& rng, const Graph& g, int t) {
  std::vector<Matching> ms;
  for (int e = 0; e < g.num_edges(); ++e) {
    std::vector<int> p(t);
    for (int a = 0; a < t; ++a) p[a] = a;
    std::shuffle(p.begin(), p.end(), rng);
    Matching m;
    for (int a = 0; a < t; ++a) m.add(Element(a), Element(p[a]));
    ms.push_back(m);
  }
  return Cover(g, Field::make(t), std::vector<LabelSet>(g.num_vertices(), LabelSet::range(t)), ms);
}

// Integer factors of a certificate's polynomial, in its own variables.
std::vector<std::tuple<int, int, int, int>> certificate_factors(const Certificate& c) {
  std::vector<std::tuple<int, int, int, int>> f;
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    const int sign = c.signs.empty() ? -1 : c.signs[e];
    const int off = c.offsets.empty() ? 0 : c.offsets[e].value;
    f.emplace_back(c.edges[e].u, c.edges[e].v, sign, off);
  }
  return f;
}

void check_witness(const Cover& cover, const Certificate& c) {
  REQUIRE(c.witness.has_value());
  CHECK(c.verified);
  std::vector<int> labels;
  for (Element a : c.witness->labels) labels.push_back(a.value);
  CHECK(oracle::valid_transversal(cover.to_spec(), labels));
}

}  // namespace

TEST_CASE("good-cover certificates on trees") {
  std::mt19937 rng(21);
  for (const Graph& t : {path_graph(4), complete_bipartite(1, 4), path_graph(7)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Cover c = random_full_cover(rng, t, 2);
      const auto cert = thm_null_certify(c);
      REQUIRE(cert.has_value());
      CHECK(cert->coefficient == Element(1));
      CHECK(cert->monomial.degree() == t.num_edges());
      for (int v = 0; v < t.num_vertices(); ++v) CHECK(cert->monomial[v] <= 1);
      check_witness(c, *cert);
    }
  }
}

TEST_CASE("no certificate where every qualifying coefficient vanishes") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    CHECK_FALSE(thm_null_certify(random_full_cover(rng, cycle_graph(6), 2)).has_value());
  }
  const Graph k35 = complete_bipartite(3, 5);
  const std::vector<int> minus(k35.num_edges(), -1);
  const Cover id = cover_from_pattern(k35, Field::make(3), minus);
  CHECK_FALSE(thm_null_certify(id).has_value());
  // The converse fails: this cover is still colorable.
  CHECK(h_coloring_search(id).status == SearchStatus::Found);
}

TEST_CASE("order-3 certificates on the square of C_6") {
  const Graph g = cycle_power(6, 2);
  const Field F = Field::make(3);
  std::vector<int> signs(g.num_edges(), -1);
  CHECK_FALSE(thm_null3_certify(cover_from_pattern(g, F, signs)).has_value());
  signs[*g.edge_index(0, 1)] = 1;
  signs[*g.edge_index(0, 2)] = 1;
  const Cover c = cover_from_pattern(g, F, signs);
  const auto cert = thm_null3_certify(c);
  REQUIRE(cert.has_value());
  check_witness(c, *cert);
  const auto ref = oracle::int_expand(6, certificate_factors(*cert), std::vector<int>(6, 2));
  CHECK(oracle::mod(oracle::coefficient(ref, cert->monomial.values()), 3) ==
        cert->coefficient.value);
  CHECK_FALSE(cert->coefficient.is_zero());

  const std::vector<int> c4(4, -1);
  const Cover id = cover_from_pattern(cycle_graph(4), F, c4);
  const auto c4cert = thm_null3_certify(id);
  REQUIRE(c4cert.has_value());
  check_witness(id, *c4cert);
}

TEST_CASE("certifier preconditions") {
  const Field F = Field::make(3);
  const std::vector<int> plus{1};
  const Cover bad = cover_from_pattern(path_graph(2), F, plus);
  CHECK_THROWS_AS(thm_null_certify(bad), HypothesisError);
  const std::vector<int> minus{-1};
  CHECK_THROWS_AS(thm_null3_certify(cover_from_pattern(path_graph(2), Field::make(5), minus)),
                  InputError);
  CHECK_THROWS_AS(dp3_certify(empty_graph(3), false), HypothesisError);
  CHECK_THROWS_AS(dp3_certify(path_graph(4), true), HypothesisError);
  CHECK_THROWS_AS(dp3_certify(complete_graph(7), false, 1, Budget{1000}), BudgetExceeded);
}

TEST_CASE("order-3 certificates are sound on every full 3-fold cover of tiny graphs") {
  const auto ps = perms3();
  for (const Graph& g : {path_graph(3), cycle_graph(3), cycle_graph(4), cycle_graph(5)}) {
    const int m = g.num_edges();
    std::vector<int> idx(m, 0);
    int certified = 0;
    while (true) {
      std::vector<Matching> ms;
      for (int e = 0; e < m; ++e) ms.push_back(from_perm(ps[idx[e]]));
      const Cover c(g, Field::make(3), std::vector<LabelSet>(g.num_vertices(), LabelSet::range(3)),
                    ms);
      if (const auto cert = thm_null3_certify(c)) {
        ++certified;
        CHECK(oracle::count_transversals(c.to_spec()) > 0);
        check_witness(c, *cert);
      }
      int e = m - 1;
      while (e >= 0 && ++idx[e] == 6) idx[e--] = 0;
      if (e < 0) break;
    }
    CHECK(certified > 0);
  }
}

TEST_CASE("sign-pattern sweep on K_{4,4} minus a 2-matching") {
  const Graph g = complete_bipartite_minus_matching(4, 4, 2);
  const Dp3Report all = dp3_certify(g, false);
  CHECK(all.pass);
  CHECK(all.tested == 16384);
  CHECK(all.certificates.size() == 16384);
  const Dp3Report tree = dp3_certify(g, true);
  CHECK(tree.pass);
  CHECK(tree.tested == 128);
  CHECK(tree.free_edges.size() == 7);

  // Pattern certificates replay against the integer expansion.
  for (std::size_t k = 0; k < tree.certificates.size(); k += 17) {
    const PatternCertificate& pc = tree.certificates[k];
    const auto signs = pattern_signs(g, tree.free_edges, pc.pattern);
    std::vector<std::tuple<int, int, int, int>> f;
    for (int e = 0; e < g.num_edges(); ++e) f.emplace_back(g.edge(e).u, g.edge(e).v, signs[e], 0);
    const auto ref = oracle::int_expand(8, f, std::vector<int>(8, 2));
    CHECK(oracle::mod(oracle::coefficient(ref, pc.monomial.values()), 3) == pc.coefficient.value);
    CHECK_FALSE(pc.coefficient.is_zero());
  }

  std::mt19937 rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const Cover c = random_full_cover(rng, g, 3);
    CHECK(h_coloring_search(c).status == SearchStatus::Found);
  }
}

TEST_CASE("K_{3,5} fails the sweep, including the all-minus pattern") {
  const Graph g = complete_bipartite(3, 5);
  const Dp3Report r = dp3_certify(g, true);
  CHECK_FALSE(r.pass);
  CHECK(r.certificates.empty());
  REQUIRE_FALSE(r.failures.patterns.empty());
  CHECK(r.failures.patterns.front() == 0);
  CHECK(std::is_sorted(r.failures.patterns.begin(), r.failures.patterns.end()));
  // Each listed failure re-verifies: no qualifying monomial for that pattern.
  const Field F = Field::make(3);
  for (std::size_t k = 0; k < r.failures.patterns.size(); k += 13) {
    const auto signs = pattern_signs(g, r.free_edges, r.failures.patterns[k]);
    const auto poly = EdgeProductPolynomial::from_graph(g, F, signs);
    CHECK_FALSE(find_qualifying_monomial(poly, ExponentVector(std::vector<int>(8, 2))).has_value());
  }
}

TEST_CASE("sweeps are independent of the worker count") {
  const Graph g = complete_bipartite(3, 5);
  const Dp3Report one = dp3_certify(g, true, 1);
  const Dp3Report three = dp3_certify(g, true, 3);
  CHECK(one.failures.patterns == three.failures.patterns);
  CHECK(one.tested == three.tested);
  const Graph k = complete_bipartite_minus_matching(4, 4, 2);
  const Dp3Report a = dp3_certify(k, true, 1);
  const Dp3Report b = dp3_certify(k, true, 4);
  REQUIRE(a.certificates.size() == b.certificates.size());
  for (std::size_t i = 0; i < a.certificates.size(); ++i) {
    CHECK(a.certificates[i].pattern == b.certificates[i].pattern);
    CHECK(a.certificates[i].monomial == b.certificates[i].monomial);
  }
}

TEST_CASE("co-tree sweep agrees with the full sweep on connected cyclic graphs") {
  for (const auto& [name, g] : oracle::small_regression_set()) {
    if (!shortest_cycle(g)) continue;
    CAPTURE(name);
    CHECK(dp3_certify(g, false).pass == dp3_certify(g, true).pass);
  }
}

TEST_CASE("unique list coloring certificates") {
  const Graph p3 = path_graph(3);
  const std::vector<std::vector<int>> tree_lists{{0}, {0, 1}, {0, 1}};
  const Certificate c = unique_list_certify(p3, tree_lists, 2);
  CHECK_FALSE(c.coefficient.is_zero());
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->labels == std::vector<Element>{Element(0), Element(1), Element(0)});

  const std::vector<std::vector<int>> k3{{0}, {0, 1}, {0, 1, 2}};
  const Certificate t = unique_list_certify(complete_graph(3), k3, 3);
  CHECK(t.witness->labels == std::vector<Element>{Element(0), Element(1), Element(2)});
  // Cross-check the coefficient with the integer expansion.
  const auto ref = oracle::int_expand(3, oracle::graph_factors(complete_graph(3)));
  CHECK(oracle::mod(oracle::coefficient(ref, t.monomial.values()), 3) == t.coefficient.value);

  const std::vector<std::vector<int>> c4(4, {0, 1});
  CHECK_THROWS_WITH_AS(unique_list_certify(cycle_graph(4), c4, 2),
                       doctest::Contains("more than one"), HypothesisError);
  const std::vector<std::vector<int>> heavy(3, {0, 1});
  CHECK_THROWS_WITH_AS(unique_list_certify(p3, heavy, 2), doctest::Contains("sum"),
                       HypothesisError);
}

TEST_CASE("cones of bipartite unicyclic graphs") {
  const Graph c4_pendant(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}});
  for (const Graph& g : {cycle_graph(4), cycle_graph(6), c4_pendant}) {
    const Certificate c = cone_bipartite_certify(g);
    REQUIRE(c.vertex_order.size() == static_cast<std::size_t>(g.num_vertices()));
    const int n = g.num_vertices() + 1;
    std::vector<int> caps(n, 2);
    caps[0] = 0;
    const auto ref = oracle::int_expand(n, certificate_factors(c), caps);
    const long long integer = oracle::coefficient(ref, c.monomial.values());
    CHECK(oracle::mod(integer, 3) == c.coefficient.value);
    // Part of vertex 0 comes first; its size decides the sign.
    const auto side = *bipartition(g);
    int first = 0;
    for (int v = 0; v < g.num_vertices(); ++v) first += side[v] == side[0];
    CHECK(integer == (first % 2 == 0 ? 2 : -2));
  }
  CHECK(cone_bipartite_certify(cycle_graph(6)).coefficient == Element(1));
  CHECK_THROWS_AS(cone_bipartite_certify(cycle_graph(5)), HypothesisError);
  CHECK_THROWS_AS(cone_bipartite_certify(complete_bipartite(2, 3)), HypothesisError);
  CHECK_THROWS_AS(cone_bipartite_certify(Graph(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3},
                                                   {4, 5}, {5, 6}, {6, 7}, {4, 7}})),
                  HypothesisError);
}

TEST_CASE("cone of the join of two isolated vertices with P_5 over F_4") {
  const Graph g = join(empty_graph(2), path_graph(5));
  const std::vector<int> order{2, 0, 1};
  const Certificate c = cone_unique3_certify(g, order);
  CHECK(c.field_order == 4);
  CHECK(c.coefficient == Element(1));
  const int n = g.num_vertices() + 1;
  std::vector<int> caps(n, 3);
  caps[0] = 0;
  const auto ref = oracle::int_expand(n, certificate_factors(c), caps);
  CHECK(c.offsets.empty());
  CHECK(oracle::mod(oracle::coefficient(ref, c.monomial.values()), 2) == 1);
  CHECK(cone_unique3_certify(g).coefficient == Element(1));
  const std::vector<int> identity{0, 1, 2};
  CHECK_THROWS_AS(cone_unique3_certify(g, identity), HypothesisError);
  CHECK_THROWS_WITH_AS(cone_unique3_certify(cycle_graph(6)),
                       doctest::Contains("not uniquely 3-colorable"), HypothesisError);
}

TEST_CASE("DP-chromatic bounds") {
  auto exact = [](const Graph& g) {
    const DpBounds b = chi_dp_bounds(g);
    CHECK(b.exact());
    return b.lower;
  };
  CHECK(exact(complete_graph(5)) == 5);
  CHECK(exact(cycle_power(6, 2)) == 4);
  CHECK(exact(cycle_power(9, 2)) == 4);
  CHECK(exact(path_graph(6)) == 2);
  CHECK(exact(cycle_graph(5)) == 3);
  CHECK(exact(complete_bipartite_minus_matching(4, 4, 2)) == 3);
  CHECK(exact(empty_graph(3)) == 1);
  const Graph parts(9, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                        {4, 5}, {5, 6}, {6, 7}, {7, 8}, {4, 8}});
  CHECK(exact(parts) == 4);
}
