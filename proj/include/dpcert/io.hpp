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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dpcert/certify.hpp"
#include "dpcert/cover.hpp"
#include "dpcert/error.hpp"
#include "dpcert/graph.hpp"

namespace dpcert {

/// Malformed text input, with a 1-based position.
class ParseError : public InputError {
 public:
  ParseError(std::string source, int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// "p <n> <m>" then m lines "e <i> <j>", 1-based, i < j; '#' comments.
Graph parse_graph(std::string_view text, const std::string& source = "<graph>");
std::string format_graph(const Graph& g);

/// "cover t=<t>", then "L <v> <a>..." and "M <i> <j> <a>-><b>..." lines.
CoverSpec parse_cover(std::string_view text, const std::string& source = "<cover>");
std::string format_cover(const CoverSpec& spec);

/// "lists t=<t>", then one "P <v> <a>..." line per vertex.
struct ListAssignment {
  int order = 0;
  std::vector<std::vector<int>> lists;
};
ListAssignment parse_lists(std::string_view text, const std::string& source = "<lists>");

/// Comma-separated "i-j:+" / "i-j:-" tokens plus an optional "default:+|-"
/// (default -). Returns one sign per edge of g.
std::vector<int> parse_sign_spec(std::string_view spec, const Graph& g);

/// Comma-separated integers.
std::vector<int> parse_int_list(std::string_view text, const std::string& what);

/// Named graphs: path:N, cycle:N, cycle-power:N:K, cNsq (square of C_N),
/// complete:N, kab:A:B, kab-minus-matching:A:B:S, cone:<name>, k2bar-p5.
Graph graph_from_family(std::string_view tag);
bool is_family_tag(std::string_view tag);

/// Reads a file into a string; throws InputError when unreadable.
std::string read_file(const std::string& path);

/// `key: value` block.
void write_certificate(std::ostream& out, const Certificate& c);
std::string format_monomial(const ExponentVector& e);
std::string format_signs(std::span<const Edge> edges, std::span<const int> signs);

}  // namespace dpcert
