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

#include "dpcert/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace dpcert {

ParseError::ParseError(std::string source, int line, int column, const std::string& message)
    : InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                 message),
      line_(line), column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

// Non-blank lines with '#' comments removed.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) l.tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

bool to_int(std::string_view s, int& value) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

class Reader {
 public:
  Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const Line& l, const Token& t, const std::string& msg) const {
    throw ParseError(source_, l.number, t.column, msg);
  }
  [[noreturn]] void fail(int line, int column, const std::string& msg) const {
    throw ParseError(source_, line, column, msg);
  }

  int integer(const Line& l, const Token& t, const char* what) const {
    int v = 0;
    if (!to_int(t.text, v)) fail(l, t, std::string("expected ") + what + ", got '" +
                                           std::string(t.text) + "'");
    return v;
  }

  // "key=<int>"
  int keyed(const Line& l, const Token& t, std::string_view key) const {
    if (t.text.substr(0, key.size() + 1) != std::string(key) + "=") {
      fail(l, t, "expected " + std::string(key) + "=<int>");
    }
    Token rest{t.text.substr(key.size() + 1), t.column + static_cast<int>(key.size()) + 1};
    return integer(l, rest, "an integer");
  }

  void arity(const Line& l, std::size_t n, const char* form) const {
    if (l.tokens.size() != n) {
      const Token& t = l.tokens.size() > n ? l.tokens[n] : l.tokens.back();
      fail(l, t, std::string("expected '") + form + "'");
    }
  }

 private:
  std::string source_;
};

}  // namespace

Graph parse_graph(std::string_view text, const std::string& source) {
  const Reader r(source);
  const auto lines = tokenize(text);
  if (lines.empty()) r.fail(1, 1, "missing header 'p <n> <m>'");
  const Line& head = lines[0];
  if (head.tokens[0].text != "p") r.fail(head, head.tokens[0], "expected header 'p <n> <m>'");
  r.arity(head, 3, "p <n> <m>");
  const int n = r.integer(head, head.tokens[1], "vertex count");
  const int m = r.integer(head, head.tokens[2], "edge count");
  if (n < 0) r.fail(head, head.tokens[1], "vertex count must be nonnegative");
  if (m < 0) r.fail(head, head.tokens[2], "edge count must be nonnegative");
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens[0].text != "e") r.fail(l, l.tokens[0], "expected edge line 'e <i> <j>'");
    r.arity(l, 3, "e <i> <j>");
    const int i = r.integer(l, l.tokens[1], "vertex");
    const int j = r.integer(l, l.tokens[2], "vertex");
    if (i < 1 || i > n) r.fail(l, l.tokens[1], "vertex " + std::to_string(i) + " outside 1.." + std::to_string(n));
    if (j < 1 || j > n) r.fail(l, l.tokens[2], "vertex " + std::to_string(j) + " outside 1.." + std::to_string(n));
    if (i >= j) r.fail(l, l.tokens[1], "edge endpoints must satisfy i < j");
    if (!seen.insert({i, j}).second) r.fail(l, l.tokens[0], "duplicate edge");
    edges.push_back({i - 1, j - 1});
  }
  if (static_cast<int>(edges.size()) != m) {
    const int line = lines.back().number + 1;
    r.fail(line, 1, "header declares " + std::to_string(m) + " edges, found " +
                        std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

CoverSpec parse_cover(std::string_view text, const std::string& source) {
  const Reader r(source);
  const auto lines = tokenize(text);
  if (lines.empty()) r.fail(1, 1, "missing header 'cover t=<t>'");
  const Line& head = lines[0];
  if (head.tokens[0].text != "cover") r.fail(head, head.tokens[0], "expected header 'cover t=<t>'");
  r.arity(head, 2, "cover t=<t>");
  CoverSpec spec;
  spec.order = r.keyed(head, head.tokens[1], "t");

  std::vector<std::optional<std::vector<int>>> labels;
  std::vector<std::pair<int, int>> label_lines;  // first label line per vertex for errors
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const std::string_view kind = l.tokens[0].text;
    if (kind == "L") {
      if (l.tokens.size() < 2) r.fail(l, l.tokens[0], "expected 'L <v> <a>...'");
      const int v = r.integer(l, l.tokens[1], "vertex");
      if (v < 1) r.fail(l, l.tokens[1], "vertices are numbered from 1");
      if (static_cast<int>(labels.size()) < v) labels.resize(v);
      if (labels[v - 1]) r.fail(l, l.tokens[1], "labels of vertex " + std::to_string(v) + " given twice");
      std::vector<int> ls;
      for (std::size_t t = 2; t < l.tokens.size(); ++t) ls.push_back(r.integer(l, l.tokens[t], "label"));
      labels[v - 1] = std::move(ls);
    } else if (kind == "M") {
      if (l.tokens.size() < 3) r.fail(l, l.tokens[0], "expected 'M <i> <j> <a>-><b>...'");
      CoverSpec::RawMatching m;
      m.u = r.integer(l, l.tokens[1], "vertex") - 1;
      m.v = r.integer(l, l.tokens[2], "vertex") - 1;
      if (m.u >= m.v) r.fail(l, l.tokens[1], "matching endpoints must satisfy i < j");
      for (std::size_t t = 3; t < l.tokens.size(); ++t) {
        const Token& tok = l.tokens[t];
        const auto arrow = tok.text.find("->");
        if (arrow == std::string_view::npos) r.fail(l, tok, "expected '<a>-><b>'");
        const Token a{tok.text.substr(0, arrow), tok.column};
        const Token b{tok.text.substr(arrow + 2), tok.column + static_cast<int>(arrow) + 2};
        m.pairs.emplace_back(r.integer(l, a, "label"), r.integer(l, b, "label"));
      }
      spec.matchings.push_back(std::move(m));
    } else {
      r.fail(l, l.tokens[0], "expected 'L' or 'M' line");
    }
  }
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (!labels[v]) {
      r.fail(lines.back().number + 1, 1, "missing label line for vertex " + std::to_string(v + 1));
    }
    spec.labels.push_back(*labels[v]);
  }
  return spec;
}

std::string format_cover(const CoverSpec& spec) {
  std::ostringstream out;
  out << "cover t=" << spec.order << '\n';
  for (std::size_t v = 0; v < spec.labels.size(); ++v) {
    out << "L " << v + 1;
    for (int a : spec.labels[v]) out << ' ' << a;
    out << '\n';
  }
  for (const auto& m : spec.matchings) {
    out << "M " << m.u + 1 << ' ' << m.v + 1;
    for (auto [a, b] : m.pairs) out << ' ' << a << "->" << b;
    out << '\n';
  }
  return out.str();
}

ListAssignment parse_lists(std::string_view text, const std::string& source) {
  const Reader r(source);
  const auto lines = tokenize(text);
  if (lines.empty()) r.fail(1, 1, "missing header 'lists t=<t>'");
  const Line& head = lines[0];
  if (head.tokens[0].text != "lists") r.fail(head, head.tokens[0], "expected header 'lists t=<t>'");
  r.arity(head, 2, "lists t=<t>");
  ListAssignment la;
  la.order = r.keyed(head, head.tokens[1], "t");
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens[0].text != "P" || l.tokens.size() < 2) r.fail(l, l.tokens[0], "expected 'P <v> <a>...'");
    const int v = r.integer(l, l.tokens[1], "vertex");
    if (v != static_cast<int>(la.lists.size()) + 1) {
      r.fail(l, l.tokens[1], "expected vertex " + std::to_string(la.lists.size() + 1));
    }
    std::vector<int> ls;
    for (std::size_t t = 2; t < l.tokens.size(); ++t) ls.push_back(r.integer(l, l.tokens[t], "color"));
    la.lists.push_back(std::move(ls));
  }
  return la;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int sign_of(std::string_view s, std::string_view token) {
  if (s == "+") return 1;
  if (s == "-") return -1;
  throw InputError("sign must be '+' or '-' in '" + std::string(token) + "'");
}

}  // namespace

std::vector<int> parse_sign_spec(std::string_view spec, const Graph& g) {
  int fallback = -1;
  std::vector<int> explicit_sign(g.num_edges(), 0);
  for (std::string_view raw : split(spec, ',')) {
    const std::string_view token = trim(raw);
    if (token.empty()) continue;
    const auto colon = token.rfind(':');
    if (colon == std::string_view::npos) {
      throw InputError("sign token '" + std::string(token) + "' needs the form i-j:+ or i-j:-");
    }
    const std::string_view where = token.substr(0, colon);
    const int sign = sign_of(token.substr(colon + 1), token);
    if (where == "default") {
      fallback = sign;
      continue;
    }
    const auto dash = where.find('-');
    int i = 0;
    int j = 0;
    if (dash == std::string_view::npos || !to_int(where.substr(0, dash), i) ||
        !to_int(where.substr(dash + 1), j)) {
      throw InputError("sign token '" + std::string(token) + "' needs the form i-j:+ or i-j:-");
    }
    if (i > j) std::swap(i, j);
    const auto e = (i >= 1 && j <= g.num_vertices() && i != j) ? g.edge_index(i - 1, j - 1)
                                                               : std::nullopt;
    if (!e) throw InputError("sign token '" + std::string(token) + "' names a non-edge");
    if (explicit_sign[*e] != 0) {
      throw InputError("edge " + std::to_string(i) + "-" + std::to_string(j) + " signed twice");
    }
    explicit_sign[*e] = sign;
  }
  for (int& s : explicit_sign) {
    if (s == 0) s = fallback;
  }
  return explicit_sign;
}

std::vector<int> parse_int_list(std::string_view text, const std::string& what) {
  std::vector<int> out;
  for (std::string_view raw : split(text, ',')) {
    const std::string_view token = trim(raw);
    int v = 0;
    if (!to_int(token, v)) {
      throw InputError(what + ": expected comma-separated integers, got '" + std::string(token) + "'");
    }
    out.push_back(v);
  }
  return out;
}

namespace {

std::vector<int> tag_numbers(std::string_view tag, std::string_view prefix, std::size_t count) {
  const auto parts = split(tag.substr(prefix.size()), ':');
  if (parts.size() != count) {
    throw InputError("graph tag '" + std::string(tag) + "' needs " + std::to_string(count) +
                     " numeric parameter(s)");
  }
  std::vector<int> out;
  for (auto p : parts) {
    int v = 0;
    if (!to_int(p, v) || v < 0) {
      throw InputError("graph tag '" + std::string(tag) + "' has a bad parameter '" +
                       std::string(p) + "'");
    }
    out.push_back(v);
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

}  // namespace

bool is_family_tag(std::string_view tag) {
  if (tag.find(':') != std::string_view::npos) {
    for (std::string_view p : {"path:", "cycle:", "cycle-power:", "complete:", "kab:",
                               "kab-minus-matching:", "cone:", "empty:"}) {
      if (starts_with(tag, p)) return true;
    }
    return false;
  }
  if (tag == "k2bar-p5") return true;
  if (tag.size() > 3 && tag.front() == 'c' && tag.substr(tag.size() - 2) == "sq") {
    int n = 0;
    return to_int(tag.substr(1, tag.size() - 3), n);
  }
  return false;
}

Graph graph_from_family(std::string_view tag) {
  if (starts_with(tag, "cone:")) return cone(graph_from_family(tag.substr(5)));
  if (tag == "k2bar-p5") return join(empty_graph(2), path_graph(5));
  if (starts_with(tag, "path:")) return path_graph(tag_numbers(tag, "path:", 1)[0]);
  if (starts_with(tag, "cycle:")) return cycle_graph(tag_numbers(tag, "cycle:", 1)[0]);
  if (starts_with(tag, "empty:")) return empty_graph(tag_numbers(tag, "empty:", 1)[0]);
  if (starts_with(tag, "cycle-power:")) {
    const auto p = tag_numbers(tag, "cycle-power:", 2);
    return cycle_power(p[0], p[1]);
  }
  if (starts_with(tag, "complete:")) return complete_graph(tag_numbers(tag, "complete:", 1)[0]);
  if (starts_with(tag, "kab:")) {
    const auto p = tag_numbers(tag, "kab:", 2);
    return complete_bipartite(p[0], p[1]);
  }
  if (starts_with(tag, "kab-minus-matching:")) {
    const auto p = tag_numbers(tag, "kab-minus-matching:", 3);
    return complete_bipartite_minus_matching(p[0], p[1], p[2]);
  }
  if (is_family_tag(tag)) {
    int n = 0;
    to_int(tag.substr(1, tag.size() - 3), n);
    return cycle_power(n, 2);
  }
  throw InputError("unknown graph '" + std::string(tag) +
                   "' (not a readable file or a known family tag)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_monomial(const ExponentVector& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out;
}

std::string format_signs(std::span<const Edge> edges, std::span<const int> signs) {
  std::string out;
  for (std::size_t e = 0; e < signs.size(); ++e) {
    if (signs[e] != 1) continue;
    out += std::to_string(edges[e].u + 1) + "-" + std::to_string(edges[e].v + 1) + ":+,";
  }
  return out + "default:-";
}

void write_certificate(std::ostream& out, const Certificate& c) {
  out << "kind: " << c.kind << '\n';
  out << "claim: " << c.claim << '\n';
  out << "field: F_" << c.field_order << '\n';
  if (!c.vertex_order.empty()) {
    out << "vertex-order:";
    for (int v : c.vertex_order) out << ' ' << v + 1;
    out << '\n';
  }
  out << "pattern: " << format_signs(c.edges, c.signs) << '\n';
  if (!c.offsets.empty()) {
    out << "offsets:";
    for (std::size_t e = 0; e < c.offsets.size(); ++e) {
      out << ' ' << c.edges[e].u + 1 << '-' << c.edges[e].v + 1 << '=' << int{c.offsets[e].value};
    }
    out << '\n';
  }
  out << "monomial: " << format_monomial(c.monomial) << '\n';
  out << "coefficient: " << int{c.coefficient.value} << '\n';
  if (c.witness) {
    out << "witness:";
    for (Element a : c.witness->labels) out << ' ' << int{a.value};
    out << '\n';
  }
  out << "verified: " << (c.verified ? "yes" : "no") << '\n';
  out << "work: " << c.work << '\n';
}

}  // namespace dpcert
