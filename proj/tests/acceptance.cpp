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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "dpcert/certify.hpp"
#include "support/oracles.hpp"

using namespace dpcert;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Gate {
  int failures = 0;
  void report(int id, bool ok, const std::string& detail) {
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " - " << detail
              << std::endl;
    failures += !ok;
  }
};

// Runs `body`, turning an escaped exception into a failure line.
template <typename F>
void criterion(Gate& gate, int id, F body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail += std::string(" exception: ") + e.what();
  }
  gate.report(id, ok, detail);
}

std::vector<int> to_ints(const Transversal& t) {
  std::vector<int> out;
  for (Element a : t.labels) out.push_back(a.value);
  return out;
}

// Independent integer-expansion value of a certificate's coefficient.
int replay(const Certificate& c, int n, const std::vector<int>& caps, int p) {
  std::vector<std::tuple<int, int, int, int>> f;
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    f.emplace_back(c.edges[e].u, c.edges[e].v, c.signs.empty() ? -1 : c.signs[e],
                   c.offsets.empty() ? 0 : c.offsets[e].value);
  }
  return oracle::mod(oracle::coefficient(oracle::int_expand(n, f, caps), c.monomial.values()), p);
}

}  // namespace

int main() {
  Gate gate;

  criterion(gate, 1, [](std::string& d) {
    const auto start = Clock::now();
    const Graph g = complete_bipartite_minus_matching(4, 4, 2);
    const Dp3Report all = dp3_certify(g, false);
    const Dp3Report tree = dp3_certify(g, true);
    const auto lower = uncolorable_cycle_cover(g);
    const bool lower_ok =
        lower && oracle::count_transversals(lower->to_spec()) == 0;
    const double secs = seconds_since(start);
    std::ostringstream s;
    s << "K_{4,4} minus 2-matching: all-edges " << all.tested << (all.pass ? " pass" : " fail")
      << ", co-tree " << tree.tested << (tree.pass ? " pass" : " fail")
      << ", 2-fold lower bound " << (lower_ok ? "ok" : "missing") << ", " << secs << " s";
    d = s.str();
    return all.pass && all.tested == 16384 && tree.pass && tree.tested == 128 && lower_ok &&
           secs < 120;
  });

  criterion(gate, 2, [](std::string& d) {
    const auto start = Clock::now();
    const Graph g = complete_bipartite(3, 5);
    const auto ref = oracle::int_expand(8, oracle::graph_factors(g), std::vector<int>(8, 2));
    int vectors = 0;
    bool all_zero = true;
    for (const auto& [m, c] : ref) {
      int sum = 0;
      for (int e : m) sum += e;
      if (sum != 15) continue;
      ++vectors;
      const Element lib = coefficient_at(EdgeProductPolynomial::from_graph(g, Field::make(3)),
                                         ExponentVector(m), CoefficientMethod::Both);
      all_zero = all_zero && oracle::mod(c, 3) == 0 && lib.is_zero();
    }
    const Dp3Report r = dp3_certify(g, true);
    const bool has_all_minus =
        !r.failures.patterns.empty() && r.failures.patterns.front() == 0;
    const double secs = seconds_since(start);
    std::ostringstream s;
    s << vectors << " top vectors, all zero: " << (all_zero ? "yes" : "no")
      << ", failing patterns " << r.failures.patterns.size() << "/" << r.tested
      << ", all-minus listed: " << (has_all_minus ? "yes" : "no") << ", " << secs << " s";
    d = s.str();
    return vectors == 8 && all_zero && !r.pass && has_all_minus && secs < 10;
  });

  criterion(gate, 3, [](std::string& d) {
    const Graph g = cycle_power(6, 2);
    const Field F = Field::make(3);
    const ExponentVector target(std::vector<int>(6, 2));
    std::vector<int> signs(g.num_edges(), -1);
    const Element f1 =
        coefficient_at(EdgeProductPolynomial::from_graph(g, F, signs), target, CoefficientMethod::Both);
    signs[*g.edge_index(0, 1)] = 1;
    signs[*g.edge_index(0, 2)] = 1;
    const Element f2 =
        coefficient_at(EdgeProductPolynomial::from_graph(g, F, signs), target, CoefficientMethod::Both);
    d = "square of C_6: f1 = " + std::to_string(f1.value) + ", f2 = " + std::to_string(f2.value);
    return f1.value == 0 && f2.value == 1;
  });

  criterion(gate, 4, [](std::string& d) {
    const auto start = Clock::now();
    bool ok = true;
    for (int k : {2, 3}) {
      const Cover c = bad_cover_c3k(k);
      const bool valid = validate(c.to_spec(), &c.graph()).empty();
      bool good = true;
      for (int e = 0; e < c.graph().num_edges(); ++e) {
        good = good && classify_saturation(c, e).kind == SaturationClass::Kind::GoodDiff;
      }
      const bool none = oracle::count_transversals(c.to_spec()) == 0 &&
                        h_coloring_search(c).status == SearchStatus::None;
      d += "k=" + std::to_string(k) + (valid ? " valid" : " invalid") + (good ? " good" : " not-good") +
           (none ? " uncolorable; " : " colorable; ");
      ok = ok && valid && good && none;
    }
    const double secs = seconds_since(start);
    d += std::to_string(secs) + " s";
    return ok && secs < 60;
  });

  criterion(gate, 5, [](std::string& d) {
    const int expected[] = {3, 4, 5, 4, 4, 4, 4, 4, 4, 4};
    bool ok = true;
    for (int n = 3; n <= 12; ++n) {
      const DpBounds b = chi_dp_bounds(cycle_power(n, 2));
      const bool hit = b.exact() && b.lower == expected[n - 3];
      d += (n > 3 ? " " : "") + std::to_string(n) + ":" +
           (b.exact() ? std::to_string(b.lower) : "?");
      ok = ok && hit;
    }
    return ok;
  });

  criterion(gate, 6, [](std::string& d) {
    bool ok = true;
    for (int n : {4, 6}) {
      const Certificate c = cone_bipartite_certify(cycle_graph(n));
      std::vector<int> caps(n + 1, 2);
      caps[0] = 0;
      const int want = n / 2 % 2 == 0 ? 2 : 1;  // 2(-1)^m mod 3
      const bool hit = c.coefficient.value == want && replay(c, n + 1, caps, 3) == want;
      d += "cone C_" + std::to_string(n) + " = " + std::to_string(c.coefficient.value) + "; ";
      ok = ok && hit;
    }
    const Graph g = join(empty_graph(2), path_graph(5));
    const std::vector<int> order{2, 0, 1};
    const Certificate c = cone_unique3_certify(g, order);
    std::vector<int> caps(8, 3);
    caps[0] = 0;
    const bool hit = c.coefficient == Element(1) && replay(c, 8, caps, 2) == 1;
    d += "cone of K2bar+P5 over F_4 = " + std::to_string(c.coefficient.value);
    return ok && hit;
  });

  criterion(gate, 7, [](std::string& d) {
    const auto start = Clock::now();
    const std::vector<int> f{2, 3, 3, 3, 3};
    const FDpResult r = f_dp_exhaustive(cone(cycle_graph(4)), f);
    const double secs = seconds_since(start);
    d = "cone of C_4, f = (2,3,3,3,3): " + std::to_string(r.covers_checked) + " covers, " +
        (r.verdict == FDpResult::Verdict::AllColorable ? "all colorable" : "not all colorable") +
        ", " + std::to_string(secs) + " s";
    return r.verdict == FDpResult::Verdict::AllColorable && secs < 300;
  });

  criterion(gate, 8, [](std::string& d) {
    const auto trees = oracle::tree_catalog(10);
    int dp2 = 0;
    int listed = 0;
    int nontrivial = 0;
    for (const Graph& t : trees) {
      if (t.num_edges() == 0) continue;
      ++nontrivial;
      const auto r = exact_dp_chromatic(t, 3);
      dp2 += r.status == DpChromaticResult::Status::Exact && r.value == 2;
      std::vector<std::vector<int>> lists(t.num_vertices(), {0, 1});
      lists[0] = {0};
      const Certificate c = unique_list_certify(t, lists, 2);
      listed += c.witness && c.verified;
    }
    d = std::to_string(trees.size()) + " trees on <= 10 vertices; " + std::to_string(dp2) + "/" +
        std::to_string(nontrivial) + " with DP-chromatic number 2, " + std::to_string(listed) +
        " unique-list certificates";
    return trees.size() == 201 && dp2 == nontrivial && listed == nontrivial;
  });

  criterion(gate, 9, [](std::string& d) {
    bool ok = true;
    for (int n : {4, 6}) {
      const Graph c = cycle_graph(n);
      std::vector<bool> forward;
      for (const Edge& e : c.edges()) forward.push_back(e.v == e.u + 1);
      ok = ok && alon_tarsi_diff(Orientation(c, forward)) == 2 &&
           oracle::circulation_diff(c, forward) == 2;
    }
    for (int k = 1; k <= 3; ++k) {
      const int n = 2 * k + 2;
      const auto poly = EdgeProductPolynomial::from_graph(cycle_graph(n), Field::make(2));
      ok = ok && coefficient_at(poly, ExponentVector(std::vector<int>(n, 1)),
                                CoefficientMethod::Both)
                     .is_zero();
    }
    int orientations = 0;
    for (const auto& [name, g] : oracle::small_regression_set()) {
      const int m = g.num_edges();
      const auto ref = oracle::int_expand(g.num_vertices(), oracle::graph_factors(g));
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<bool> forward(m);
        for (int e = 0; e < m; ++e) forward[e] = mask >> e & 1;
        const Orientation o(g, forward);
        std::vector<int> out(g.num_vertices(), 0);
        for (int e = 0; e < m; ++e) ++out[o.tail(e)];
        const long long c = oracle::coefficient(ref, out);
        const std::uint64_t diff = alon_tarsi_diff(o);
        ok = ok && static_cast<std::uint64_t>(c < 0 ? -c : c) == diff &&
             diff == oracle::circulation_diff(g, forward);
        ++orientations;
      }
    }
    d = "cyclic diff 2, F_2 coefficients 0, identity on " + std::to_string(orientations) +
        " orientations";
    return ok;
  });

  criterion(gate, 10, [](std::string& d) {
    bool ok = true;
    // Field axioms, t <= 9.
    for (int t : {2, 3, 4, 5, 7, 8, 9}) {
      const Field F = Field::make(t);
      const oracle::RefField R(t);
      for (int a = 0; a < t; ++a) {
        ok = ok && F.pow(Element(a), t) == Element(a);
        for (int b = 0; b < t; ++b) {
          ok = ok && F.mul(Element(a), Element(b)).value == R.mul(a, b) &&
               F.add(Element(a), Element(b)).value == R.add(a, b);
          for (int c = 0; c < t; ++c) {
            const Element x(a), y(b), z(c);
            ok = ok && F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)) &&
                 F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)) &&
                 F.add(F.add(x, y), z) == F.add(x, F.add(y, z));
          }
        }
      }
    }
    const bool fields = ok;

    // Expand versus grid, 200 seeded instances.
    std::mt19937 rng(2024);
    const int orders[] = {2, 3, 4, 5, 7, 8, 9};
    int instances = 0;
    while (instances < 200) {
      const int n = 2 + static_cast<int>(rng() % 5);
      const int t = orders[rng() % 7];
      std::vector<Edge> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng() % 2) edges.push_back({i, j});
      const int m = static_cast<int>(edges.size());
      if (m > n * (t - 1)) continue;
      const Field F = Field::make(t);
      std::vector<int> signs;
      std::vector<Element> offsets;
      for (int e = 0; e < m; ++e) {
        signs.push_back(rng() % 2 ? 1 : -1);
        offsets.push_back(Element(static_cast<int>(rng() % t)));
      }
      std::vector<int> target(n, 0);
      for (int k = 0; k < m;) {
        const int i = static_cast<int>(rng() % n);
        if (target[i] < t - 1) ++target[i], ++k;
      }
      const auto poly = EdgeProductPolynomial::from_graph(Graph(n, edges), F, signs, offsets);
      ok = ok && coefficient_at(poly, ExponentVector(target), CoefficientMethod::Expand) ==
                     coefficient_at(poly, ExponentVector(target), CoefficientMethod::Grid);
      ++instances;
    }
    const bool methods = ok;

    // Order-3 partial injective maps are never Bad.
    const Field F3 = Field::make(3);
    int maps = 0;
    for (int code = 0; code < 64; ++code) {
      const int img[3] = {code % 4, code / 4 % 4, code / 16 % 4};
      Matching m;
      bool injective = true;
      std::set<int> used;
      for (int a = 0; a < 3 && injective; ++a) {
        if (img[a] == 0) continue;
        injective = used.insert(img[a]).second;
        if (injective) m.add(Element(a), Element(img[a] - 1));
      }
      if (!injective) continue;
      ++maps;
      ok = ok && classify_saturation(F3, m).kind != SaturationClass::Kind::Bad;
    }
    ok = ok && maps == 34;
    const bool classes = ok;

    // Tree normalization on every full 3-fold cover of P_3 and P_4.
    int normalized = 0;
    for (int len : {3, 4}) {
      const Graph g = path_graph(len);
      const int m = g.num_edges();
      std::vector<std::array<int, 3>> ps;
      std::array<int, 3> p{0, 1, 2};
      do ps.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      std::vector<int> idx(m, 0);
      while (true) {
        std::vector<Matching> ms;
        for (int e = 0; e < m; ++e) {
          Matching mt;
          for (int a = 0; a < 3; ++a) mt.add(Element(a), Element(ps[idx[e]][a]));
          ms.push_back(mt);
        }
        const Cover c(g, F3, std::vector<LabelSet>(len, LabelSet::range(3)), ms);
        ok = ok && oracle::count_transversals(tree_normalize(c).cover.to_spec()) ==
                       oracle::count_transversals(c.to_spec());
        ++normalized;
        int e = m - 1;
        while (e >= 0 && ++idx[e] == 6) idx[e--] = 0;
        if (e < 0) break;
      }
    }
    const bool trees = ok;

    // Emitted witnesses validate against the raw cover description.
    int witnesses = 0;
    std::mt19937 wrng(77);
    const Graph targets[] = {cycle_graph(4), cycle_power(6, 2), complete_bipartite(2, 3)};
    for (const Graph& g : targets) {
      for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> signs;
        std::vector<Element> offsets;
        for (int e = 0; e < g.num_edges(); ++e) {
          signs.push_back(wrng() % 2 ? 1 : -1);
          offsets.push_back(Element(static_cast<int>(wrng() % 3)));
        }
        const Cover c = cover_from_pattern(g, F3, signs, offsets);
        if (const auto cert = thm_null3_certify(c)) {
          ok = ok && cert->witness && cert->verified &&
               oracle::valid_transversal(c.to_spec(), to_ints(*cert->witness));
          ++witnesses;
        }
      }
    }
    ok = ok && witnesses > 0;

    std::ostringstream s;
    s << "field axioms " << (fields ? "ok" : "broken") << ", expand=grid on " << instances
      << (methods ? " ok" : " mismatch") << ", " << maps << " order-3 maps"
      << (classes ? " never Bad" : " Bad seen") << ", " << normalized << " normalized covers"
      << (trees ? " count-preserving" : " mismatch") << ", " << witnesses << " witnesses checked";
    d = s.str();
    return ok;
  });

  return gate.failures == 0 ? 0 : 1;
}
