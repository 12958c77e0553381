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

#include "dpcert/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>

#include "dpcert/certify.hpp"
#include "dpcert/cover.hpp"
#include "dpcert/io.hpp"
#include "dpcert/poly.hpp"
#include "dpcert/scenarios.hpp"

namespace dpcert {

namespace {

Graph load_graph(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return parse_graph(read_file(arg), arg);
  if (is_family_tag(arg)) return graph_from_family(arg);
  throw InputError("'" + arg + "' is neither a readable graph file nor a known family tag");
}

Cover load_cover(const std::string& path, const std::string& graph_arg) {
  const CoverSpec spec = parse_cover(read_file(path), path);
  if (graph_arg.empty()) return Cover::from_spec(spec);
  const Graph g = load_graph(graph_arg);
  return Cover::from_spec(spec, &g);
}

std::string labels_line(const Transversal& t) {
  std::string s;
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(t.labels[i].value);
  }
  return s;
}

struct Options {
  std::uint64_t seed = ScenarioContext{}.seed;
  int jobs = 1;
  std::uint64_t budget = Budget{}.limit;

  std::string graph;
  std::string cover;
  std::string cover_graph;
  std::string signs;
  std::string target;
  int field = 3;
  std::string method = "both";
  std::string mode = "good";
  bool spanning_tree = false;
  bool list_certificates = false;
  int show = 10;
  int max_m = 0;
  std::string pattern;
  std::string offsets;
  int bad_k = 0;
  std::string lists;
  std::string output;
  std::string scenario;
};

int cmd_coeff(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const Field F = Field::make(o.field);
  const std::vector<int> signs =
      o.signs.empty() ? std::vector<int>{} : parse_sign_spec(o.signs, g);
  const auto poly = EdgeProductPolynomial::from_graph(g, F, signs);
  if (o.target.empty()) {
    const auto q = find_qualifying_monomial(
        poly, ExponentVector(std::vector<int>(g.num_vertices(), o.field - 1)));
    if (!q) {
      out << "coefficient: none\n";
      return kExitNegative;
    }
    out << "monomial: " << format_monomial(q->exponents) << '\n';
    out << "coefficient: " << int{q->coefficient.value} << '\n';
    return kExitPass;
  }
  const ExponentVector target(parse_int_list(o.target, "--target"));
  CoefficientMethod method = CoefficientMethod::Both;
  if (o.method == "expand") method = CoefficientMethod::Expand;
  if (o.method == "grid") method = CoefficientMethod::Grid;
  out << "coefficient: " << int{coefficient_at(poly, target, method).value} << '\n';
  return kExitPass;
}

int cmd_certify_cover(const Options& o, std::ostream& out) {
  const Cover cover = load_cover(o.cover, o.cover_graph);
  std::optional<Certificate> cert;
  if (o.mode == "order3") {
    cert = thm_null3_certify(cover);
  } else {
    bool good = true;
    for (int e = 0; e < cover.graph().num_edges(); ++e) {
      good = good && classify_saturation(cover, e).kind == SaturationClass::Kind::GoodDiff;
    }
    if (good) {
      cert = thm_null_certify(cover);
    } else {
      const GoodCoverResult r = is_good_cover(cover, Budget{o.budget});
      if (r.status == SearchStatus::BudgetExhausted) {
        throw BudgetExceeded("good-cover search exhausted its budget");
      }
      if (r.status == SearchStatus::None) {
        out << "certificate: none\nreason: no renaming makes every matching good\n";
        return kExitNegative;
      }
      const Cover renamed = relabel_cover(cover, *r.relabeling);
      cert = thm_null_certify(renamed);
      if (cert && cert->witness) {
        // Report the witness in the file's own labels.
        Transversal original;
        for (int v = 0; v < cover.num_vertices(); ++v) {
          for (Element a : cover.labels(v).elements()) {
            if ((*r.relabeling)[v][a.value] == cert->witness->labels[v].value) {
              original.labels.push_back(a);
            }
          }
        }
        if (!is_h_coloring(cover, original)) {
          throw ConsistencyError("renamed witness does not color the original cover");
        }
        cert->witness = original;
        cert->claim += " (after renaming labels)";
      }
    }
  }
  if (!cert) {
    out << "certificate: none\nreason: no qualifying monomial has a nonzero coefficient\n";
    return kExitNegative;
  }
  write_certificate(out, *cert);
  return kExitPass;
}

int cmd_certify_dp3(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const Dp3Report r = dp3_certify(g, o.spanning_tree, o.jobs, Budget{o.budget});
  out << "graph: n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
  out << "mode: " << (o.spanning_tree ? "co-tree edges" : "all edges") << '\n';
  out << "patterns-tested: " << r.tested << '\n';
  out << "failing-patterns: " << r.failures.patterns.size() << '\n';
  const auto show = [&](std::uint64_t p) {
    return format_signs(g.edges(), pattern_signs(g, r.free_edges, p));
  };
  if (r.pass) {
    out << "verdict: pass, chi_DP <= 3\n";
    if (o.list_certificates) {
      for (const auto& c : r.certificates) {
        out << '\n'
            << "pattern: " << show(c.pattern) << '\n'
            << "monomial: " << format_monomial(c.monomial) << '\n'
            << "coefficient: " << int{c.coefficient.value} << '\n';
      }
    }
    return kExitPass;
  }
  out << "verdict: fail\n";
  const std::size_t limit = o.show < 0 ? r.failures.patterns.size()
                                       : std::min<std::size_t>(o.show, r.failures.patterns.size());
  for (std::size_t i = 0; i < limit; ++i) out << "failing: " << show(r.failures.patterns[i]) << '\n';
  if (limit < r.failures.patterns.size()) {
    out << "failing: ... " << r.failures.patterns.size() - limit << " more\n";
  }
  return kExitNegative;
}

int cmd_chi_dp(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  DpBounds b = chi_dp_bounds(g, Budget{o.budget}, o.jobs);
  if (!b.exact() && o.max_m > 0) {
    const auto r = exact_dp_chromatic(g, o.max_m, Budget{o.budget}, o.jobs);
    if (r.status == DpChromaticResult::Status::Exact) {
      b.lower = b.upper = r.value;
      b.lower_reason = b.upper_reason = "exhaustive cover search";
    } else if (r.status == DpChromaticResult::Status::AboveLimit && o.max_m + 1 > b.lower) {
      b.lower = o.max_m + 1;
      b.lower_reason = "exhaustive cover search";
    }
  }
  out << "lower: " << b.lower << " (" << b.lower_reason << ")\n";
  out << "upper: " << b.upper << " (" << b.upper_reason << ")\n";
  if (b.exact()) {
    out << "chi_DP: " << b.lower << '\n';
    return kExitPass;
  }
  out << "chi_DP: unresolved\n";
  return kExitBudget;
}

int cmd_make_cover(const Options& o, std::ostream& out) {
  const int sources = !o.pattern.empty() + (o.bad_k > 0) + !o.lists.empty();
  if (sources != 1) throw InputError("give exactly one of --pattern, --bad-c3k, --lists");
  std::optional<Cover> cover;
  if (o.bad_k > 0) {
    cover = bad_cover_c3k(o.bad_k);
  } else {
    if (o.graph.empty()) throw InputError("a graph argument is required");
    const Graph g = load_graph(o.graph);
    if (!o.pattern.empty()) {
      const Field F = Field::make(o.field);
      std::vector<Element> offsets;
      if (!o.offsets.empty()) {
        for (int b : parse_int_list(o.offsets, "--offsets")) offsets.push_back(F.element(b));
      }
      cover = cover_from_pattern(g, F, parse_sign_spec(o.pattern, g), offsets);
    } else {
      const ListAssignment la = parse_lists(read_file(o.lists), o.lists);
      cover = cover_from_lists(g, Field::make(la.order), la.lists);
    }
  }
  const std::string text = format_cover(cover->to_spec());
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw InputError("cannot write '" + o.output + "'");
    f << text;
  }
  return kExitPass;
}

int cmd_check_cover(const Options& o, std::ostream& out, std::ostream& err) {
  const CoverSpec spec = parse_cover(read_file(o.cover), o.cover);
  std::optional<Graph> base;
  if (!o.cover_graph.empty()) base = load_graph(o.cover_graph);
  const auto violations = validate(spec, base ? &*base : nullptr);
  if (!violations.empty()) {
    for (const auto& v : violations) err << "violation [" << v.kind << "] " << v.message << '\n';
    return kExitInput;
  }
  const Cover cover = Cover::from_spec(spec, base ? &*base : nullptr);
  const HColoringResult r = h_coloring_search(cover, Budget{o.budget});
  if (r.status == SearchStatus::BudgetExhausted) {
    throw BudgetExceeded("coloring search exhausted its budget after " + std::to_string(r.nodes) +
                         " nodes");
  }
  if (r.status == SearchStatus::None) {
    out << "none\n";
    return kExitNegative;
  }
  out << "coloring: " << labels_line(*r.coloring) << '\n';
  return kExitPass;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  const ScenarioContext ctx{o.jobs, o.seed};
  bool found = false;
  int passed = 0;
  int total = 0;
  for (const Scenario& s : scenario_registry()) {
    if (o.scenario != "all" && o.scenario != s.name) continue;
    found = true;
    for (const ScenarioResult& r : s.run(ctx)) {
      ++total;
      passed += r.pass;
      out << (r.pass ? "PASS " : "FAIL ") << r.name << '\n'
          << "  claim: " << r.claim << '\n'
          << "  expected: " << r.expected << '\n'
          << "  computed: " << r.computed << '\n';
      if (r.work) out << "  work: " << r.work << '\n';
    }
  }
  if (!found) {
    std::string names;
    for (const Scenario& s : scenario_registry()) names += " " + s.name;
    throw InputError("unknown scenario '" + o.scenario + "'; known:" + names);
  }
  out << "summary: " << passed << "/" << total << " passed\n";
  return passed == total ? kExitPass : kExitNegative;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"DP-coloring certificates from the Combinatorial Nullstellensatz", "dpcert"};
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "Seed for randomized scenarios");

  auto* coeff = app.add_subcommand("coeff", "Coefficient of a monomial in a signed graph polynomial");
  coeff->add_option("graph", o.graph, "Graph file or family tag")->required();
  coeff->add_option("--signs", o.signs, "Sign pattern, e.g. 1-2:+,1-3:+,default:-");
  coeff->add_option("--target", o.target, "Exponents t1,...,tn");
  coeff->add_option("--field", o.field, "Field order");
  coeff->add_option("--method", o.method, "expand, grid or both")
      ->check(CLI::IsMember({"expand", "grid", "both"}));

  auto* cc = app.add_subcommand("certify-cover", "Certify that a cover has an H-coloring");
  cc->add_option("cover", o.cover, "Cover file")->required();
  cc->add_option("--mode", o.mode, "good or order3")->check(CLI::IsMember({"good", "order3"}));
  cc->add_option("--graph", o.cover_graph, "Base graph (enables locality checks)");
  cc->add_option("--budget", o.budget, "Search node limit");

  auto* dp3 = app.add_subcommand("certify-dp3", "Sign-pattern sweep for chi_DP <= 3");
  dp3->add_option("graph", o.graph, "Graph file or family tag")->required();
  dp3->add_flag("--spanning-tree", o.spanning_tree, "Vary co-tree edges only");
  dp3->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  dp3->add_option("--budget", o.budget, "Pattern limit");
  dp3->add_flag("--certificates", o.list_certificates, "Print every pattern's monomial");
  dp3->add_option("--show", o.show, "Failing patterns to print (-1 = all)");

  auto* chi = app.add_subcommand("chi-dp", "Bounds on the DP-chromatic number");
  chi->add_option("graph", o.graph, "Graph file or family tag")->required();
  chi->add_option("--max-m", o.max_m, "Run the exhaustive search up to this m");
  chi->add_option("--budget", o.budget, "Covers per exhaustive step");
  chi->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* make = app.add_subcommand("make-cover", "Write a cover file");
  make->add_option("graph", o.graph, "Graph file or family tag");
  make->add_option("--pattern", o.pattern, "Sign pattern");
  make->add_option("--offsets", o.offsets, "Per-edge offsets b1,...,bm");
  make->add_option("--field", o.field, "Field order for --pattern");
  make->add_option("--bad-c3k", o.bad_k, "Uncolorable cover of the square of C_3k");
  make->add_option("--lists", o.lists, "List assignment file");
  make->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* check = app.add_subcommand("check-cover", "Validate a cover and search for an H-coloring");
  check->add_option("cover", o.cover, "Cover file")->required();
  check->add_option("--graph", o.cover_graph, "Base graph (enables locality checks)");
  check->add_option("--budget", o.budget, "Search node limit");

  auto* rep = app.add_subcommand("reproduce", "Run registered scenarios");
  rep->add_option("scenario", o.scenario, "Scenario name or 'all'")->required();
  rep->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (coeff->parsed()) return cmd_coeff(o, out);
    if (cc->parsed()) return cmd_certify_cover(o, out);
    if (dp3->parsed()) return cmd_certify_dp3(o, out);
    if (chi->parsed()) return cmd_chi_dp(o, out);
    if (make->parsed()) return cmd_make_cover(o, out);
    if (check->parsed()) return cmd_check_cover(o, out, err);
    if (rep->parsed()) return cmd_reproduce(o, out);
  } catch (const HypothesisError& e) {
    out << "not certified: " << e.what() << '\n';
    return kExitNegative;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitNegative;
  }
  return kExitInput;
}

}  // namespace dpcert
