// Copyright 2026 The Daisy Authors
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

// Text format for daisy graphs, and DOT export.
//
//   # comment                         '#' starts a comment anywhere
//   adg                               first significant line: dg | adg | odg
//   circles 2                         optional, default 0
//   vertex t1 triple                  triple | branch | db
//   edge e1 t1 b1                     slot 0 = first endpoint
//   pair t1 e1.0 e2.0 pref e1.0       pref required in adg/odg, forbidden in dg
//   order t1 e1.0 e3.0 e5.1           odg only; the preferred half-edges
//
// Identifiers match [A-Za-z0-9_]+. Lines end in LF; tokens are separated by
// spaces or tabs. Parsing is strict: any syntax error or structural
// violation rejects the whole document.

#ifndef DAISY_TEXTIO_HPP_
#define DAISY_TEXTIO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "daisy/model.hpp"

namespace daisy {

enum class DocumentKind { kDg, kAdg, kOdg };

const char* to_string(DocumentKind kind);
DocumentKind kind_of(const AnyGraph& g);

struct Diagnostic {
  int line = 0;    // 1-based
  int column = 0;  // 1-based; 0 when the whole line is meant
  std::string token;
  std::string message;
};

// "3:7: unknown vertex kind 'tripel'"
std::string to_string(const Diagnostic& d);

class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Parses and validates. Throws ParseError carrying every syntax diagnostic,
// or, if the syntax is clean, every validation violation tagged with the
// line that declared the offending element.
AnyGraph parse(std::string_view text);

// Canonical text: vertices, edges and pairs sorted, each pair written
// smaller half-edge first, ODG orderings rotated smallest-first.
std::string serialize(const AnyGraph& g);

// Graphviz rendering. Triple vertices are points, branch vertices small
// black dots, DB vertices purple dots. An arrowhead marks each preferred
// half-edge. The two half-edges of a consecutive pair leave their triple
// vertex through opposite compass ports (n/s, e/w, ne/sw for pairs 0, 1, 2).
// Double circles appear as dashed rings in a legend cluster.
std::string export_dot(const AnyGraph& g);

}  // namespace daisy

#endif  // DAISY_TEXTIO_HPP_
