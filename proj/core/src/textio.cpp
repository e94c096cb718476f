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

#include "daisy/textio.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace daisy {

const char* to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::kDg:
      return "dg";
    case DocumentKind::kAdg:
      return "adg";
    case DocumentKind::kOdg:
      return "odg";
  }
  return "?";
}

DocumentKind kind_of(const AnyGraph& g) {
  switch (g.index()) {
    case 0:
      return DocumentKind::kDg;
    case 1:
      return DocumentKind::kAdg;
    default:
      return DocumentKind::kOdg;
  }
}

std::string to_string(const Diagnostic& d) {
  std::string out = std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + d.message;
  if (!d.token.empty()) out += " '" + d.token + "'";
  return out;
}

namespace {

std::string join(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const Diagnostic& d : diagnostics) {
    if (!out.empty()) out += '\n';
    out += to_string(d);
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

// Where each element was declared.
struct Provenance {
  int header_line = 1;
  int circles_line = 0;
  std::map<Id, int> vertex;
  std::map<Id, int> edge;
  std::map<Id, std::vector<int>> pair;
  std::map<Id, int> order;
};

class Parser {
 public:
  AnyGraph run(std::string_view text) {
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      parse_line(text.substr(pos, end - pos), number);
      pos = end + 1;
    }
    if (!kind_ && diagnostics_.empty()) {
      fail(number, 0, "", "missing document kind (dg, adg or odg)");
    }
    if (!diagnostics_.empty()) throw ParseError(std::move(diagnostics_));

    AnyGraph g = assemble();
    check(g);
    return g;
  }

 private:
  struct PairLine {
    Id vertex;
    HalfEdgeRef a;
    HalfEdgeRef b;
    std::optional<HalfEdgeRef> pref;
  };

  void fail(int line, int column, std::string_view token, std::string message) {
    diagnostics_.push_back({line, column, std::string(token), std::move(message)});
  }

  bool expect_id(int line, const Token& t) {
    if (is_identifier(t.text)) return true;
    fail(line, t.column, t.text, "malformed identifier");
    return false;
  }

  std::optional<HalfEdgeRef> half_edge(int line, const Token& t) {
    const std::size_t dot = t.text.rfind('.');
    if (dot == std::string_view::npos || !is_identifier(t.text.substr(0, dot)) ||
        (t.text.substr(dot + 1) != "0" && t.text.substr(dot + 1) != "1")) {
      fail(line, t.column, t.text, "malformed half-edge, expected <edge>.<0|1>");
      return std::nullopt;
    }
    return HalfEdgeRef{Id(t.text.substr(0, dot)), t.text[dot + 1] - '0'};
  }

  bool arity(int line, const std::vector<Token>& tokens, std::size_t want,
             std::string_view usage) {
    if (tokens.size() == want) return true;
    const Token& at = tokens.size() > want ? tokens[want] : tokens.back();
    fail(line, at.column, tokens.size() > want ? at.text : std::string_view(),
         "expected '" + std::string(usage) + "'");
    return false;
  }

  void parse_line(std::string_view raw, int line) {
    if (const std::size_t cr = raw.find('\r'); cr != std::string_view::npos) {
      fail(line, static_cast<int>(cr) + 1, "", "carriage return (lines must end in LF)");
      return;
    }
    const std::string_view body = raw.substr(0, raw.find('#'));
    const std::vector<Token> tokens = tokenize(body);
    if (tokens.empty()) return;
    const std::string_view word = tokens[0].text;

    if (!kind_) {
      if (word == "dg" || word == "adg" || word == "odg") {
        kind_ = word == "dg" ? DocumentKind::kDg
                             : (word == "adg" ? DocumentKind::kAdg : DocumentKind::kOdg);
        prov_.header_line = line;
        if (tokens.size() > 1) fail(line, tokens[1].column, tokens[1].text, "unexpected token");
      } else {
        fail(line, tokens[0].column, word, "expected document kind (dg, adg or odg), got");
        kind_ = DocumentKind::kDg;  // keep scanning for further diagnostics
      }
      return;
    }

    if (word == "circles") {
      if (!arity(line, tokens, 2, "circles <count>")) return;
      const std::string_view n = tokens[1].text;
      if (n.empty() || n.size() > 18 ||
          !std::all_of(n.begin(), n.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        fail(line, tokens[1].column, n, "circle count must be a non-negative integer");
        return;
      }
      if (prov_.circles_line != 0) {
        fail(line, tokens[0].column, word, "duplicate circles line");
        return;
      }
      prov_.circles_line = line;
      circles_ = std::stoll(std::string(n));
    } else if (word == "vertex") {
      if (!arity(line, tokens, 3, "vertex <id> triple|branch|db")) return;
      if (!expect_id(line, tokens[1])) return;
      const std::string_view k = tokens[2].text;
      VertexKind kind;
      if (k == "triple") {
        kind = VertexKind::kTriple;
      } else if (k == "branch") {
        kind = VertexKind::kBranch;
      } else if (k == "db") {
        kind = VertexKind::kDb;
      } else {
        fail(line, tokens[2].column, k, "unknown vertex kind");
        return;
      }
      const Id id(tokens[1].text);
      if (!graph_.vertices.emplace(id, kind).second) {
        fail(line, tokens[1].column, id, "duplicate vertex");
        return;
      }
      prov_.vertex[id] = line;
    } else if (word == "edge") {
      if (!arity(line, tokens, 4, "edge <id> <vertex> <vertex>")) return;
      if (!expect_id(line, tokens[1]) || !expect_id(line, tokens[2]) ||
          !expect_id(line, tokens[3])) {
        return;
      }
      const Id id(tokens[1].text);
      if (!graph_.edges.emplace(id, Endpoints{Id(tokens[2].text), Id(tokens[3].text)}).second) {
        fail(line, tokens[1].column, id, "duplicate edge");
        return;
      }
      prov_.edge[id] = line;
    } else if (word == "pair") {
      const bool arrowed = *kind_ != DocumentKind::kDg;
      if (tokens.size() == 6 && !arrowed) {
        fail(line, tokens[4].column, tokens[4].text, "arrows forbidden in dg");
        return;
      }
      if (tokens.size() == 4 && arrowed) {
        fail(line, tokens[3].column + static_cast<int>(tokens[3].text.size()), "",
             "missing 'pref <half-edge>' (required in adg and odg)");
        return;
      }
      if (!arity(line, tokens, arrowed ? 6 : 4,
                 arrowed ? "pair <vertex> <half-edge> <half-edge> pref <half-edge>"
                         : "pair <vertex> <half-edge> <half-edge>")) {
        return;
      }
      if (!expect_id(line, tokens[1])) return;
      PairLine p;
      p.vertex = Id(tokens[1].text);
      auto a = half_edge(line, tokens[2]);
      auto b = half_edge(line, tokens[3]);
      if (!a || !b) return;
      p.a = *a;
      p.b = *b;
      if (arrowed) {
        if (tokens[4].text != "pref") {
          fail(line, tokens[4].column, tokens[4].text, "expected 'pref'");
          return;
        }
        p.pref = half_edge(line, tokens[5]);
        if (!p.pref) return;
      }
      prov_.pair[p.vertex].push_back(line);
      pairs_.push_back(std::move(p));
    } else if (word == "order") {
      if (*kind_ != DocumentKind::kOdg) {
        fail(line, tokens[0].column, word, "order lines only allowed in odg");
        return;
      }
      if (!arity(line, tokens, 5, "order <vertex> <half-edge> <half-edge> <half-edge>")) return;
      if (!expect_id(line, tokens[1])) return;
      PreferredOrder order;
      for (int k = 0; k < 3; ++k) {
        auto h = half_edge(line, tokens[2 + k]);
        if (!h) return;
        order[k] = *h;
      }
      const Id v(tokens[1].text);
      if (!orders_.emplace(v, order).second) {
        fail(line, tokens[1].column, v, "duplicate order for vertex");
        return;
      }
      prov_.order[v] = line;
    } else {
      fail(line, tokens[0].column, word, "unknown statement");
    }
  }

  AnyGraph assemble() {
    graph_.circles = circles_;
    std::map<Id, std::vector<HalfEdgeRef>> arrows;
    for (PairLine& p : pairs_) {
      graph_.pairing[p.vertex].push_back({p.a, p.b});
      if (p.pref) arrows[p.vertex].push_back(*p.pref);
    }
    if (*kind_ == DocumentKind::kDg) return std::move(graph_);
    ArrowedDaisyGraph adg{std::move(graph_), std::move(arrows)};
    if (*kind_ == DocumentKind::kAdg) return adg;
    return OrderedDaisyGraph{std::move(adg), std::move(orders_)};
  }

  int line_of(const Subject& s) const {
    auto lookup = [](const std::map<Id, int>& m, const Id& id) {
      auto it = m.find(id);
      return it == m.end() ? 0 : it->second;
    };
    auto first_pair_line = [&](const Id& v) {
      auto it = prov_.pair.find(v);
      return it == prov_.pair.end() || it->second.empty() ? 0 : it->second.front();
    };
    int line = 0;
    switch (s.kind) {
      case Subject::Kind::kGraph:
        line = prov_.circles_line;
        break;
      case Subject::Kind::kVertex:
        line = lookup(prov_.vertex, s.id);
        if (line == 0) line = first_pair_line(s.id);
        if (line == 0) line = lookup(prov_.order, s.id);
        break;
      case Subject::Kind::kEdge:
        line = lookup(prov_.edge, s.id);
        break;
      case Subject::Kind::kPair: {
        auto it = prov_.pair.find(s.id);
        if (it != prov_.pair.end() && s.pair_index >= 0 &&
            s.pair_index < static_cast<int>(it->second.size())) {
          line = it->second[s.pair_index];
        }
        break;
      }
      case Subject::Kind::kOrder:
        line = lookup(prov_.order, s.id);
        if (line == 0) line = lookup(prov_.vertex, s.id);
        break;
    }
    return line == 0 ? prov_.header_line : line;
  }

  void check(const AnyGraph& g) {
    const ValidationReport report = validate(g);
    if (report.ok()) return;
    std::vector<Diagnostic> out;
    for (const Violation& v : report.violations) {
      out.push_back({line_of(v.subject), 0, v.subject.id, v.code + ": " + v.message});
    }
    std::stable_sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
      return a.line < b.line;
    });
    throw ParseError(std::move(out));
  }

  std::optional<DocumentKind> kind_;
  DaisyGraph graph_;
  std::int64_t circles_ = 0;
  std::vector<PairLine> pairs_;
  std::map<Id, PreferredOrder> orders_;
  Provenance prov_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

AnyGraph parse(std::string_view text) { return Parser().run(text); }

namespace {

struct CanonicalPair {
  HalfEdgePair pair;
  std::optional<HalfEdgeRef> pref;
};

std::vector<CanonicalPair> canonical_pairs(const DaisyGraph& g, const ArrowedDaisyGraph* adg,
                                           const Id& v) {
  std::vector<CanonicalPair> out;
  const auto& pairs = g.pairing.at(v);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    CanonicalPair c{pairs[i], std::nullopt};
    if (c.pair.second < c.pair.first) std::swap(c.pair.first, c.pair.second);
    if (adg != nullptr) c.pref = adg->arrows.at(v).at(i);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const CanonicalPair& a, const CanonicalPair& b) {
    return std::tie(a.pair.first, a.pair.second) < std::tie(b.pair.first, b.pair.second);
  });
  return out;
}

}  // namespace

std::string serialize(const AnyGraph& any) {
  const DaisyGraph& g = plain(any);
  const auto* adg = std::get_if<ArrowedDaisyGraph>(&any);
  const auto* odg = std::get_if<OrderedDaisyGraph>(&any);
  if (odg != nullptr) adg = &odg->base;

  std::ostringstream os;
  os << to_string(kind_of(any)) << '\n';
  if (g.circles != 0) os << "circles " << g.circles << '\n';
  for (const auto& [v, kind] : g.vertices) os << "vertex " << v << ' ' << to_string(kind) << '\n';
  for (const auto& [e, ends] : g.edges) {
    os << "edge " << e << ' ' << ends.tail << ' ' << ends.head << '\n';
  }
  for (const auto& [v, pairs] : g.pairing) {
    for (const CanonicalPair& c : canonical_pairs(g, adg, v)) {
      os << "pair " << v << ' ' << c.pair.first << ' ' << c.pair.second;
      if (c.pref) os << " pref " << *c.pref;
      os << '\n';
    }
  }
  if (odg != nullptr) {
    for (const auto& [v, order] : odg_canonicalize(*odg).ordering) {
      os << "order " << v << ' ' << order[0] << ' ' << order[1] << ' ' << order[2] << '\n';
    }
  }
  return os.str();
}

std::string export_dot(const AnyGraph& any) {
  static constexpr const char* kPorts[3][2] = {{"n", "s"}, {"e", "w"}, {"ne", "sw"}};
  const DaisyGraph& g = plain(any);
  const auto* adg = std::get_if<ArrowedDaisyGraph>(&any);
  if (const auto* odg = std::get_if<OrderedDaisyGraph>(&any)) adg = &odg->base;

  // Port and preference of every half-edge at a triple vertex.
  std::map<HalfEdgeRef, const char*> port;
  std::map<HalfEdgeRef, bool> preferred;
  for (const auto& [v, pairs] : g.pairing) {
    for (std::size_t i = 0; i < pairs.size() && i < 3; ++i) {
      port[pairs[i].first] = kPorts[i][0];
      port[pairs[i].second] = kPorts[i][1];
      if (adg != nullptr) {
        const HalfEdgeRef& a = adg->arrows.at(v).at(i);
        preferred[a] = true;
      }
    }
  }

  std::ostringstream os;
  os << "graph daisy {\n";
  for (const auto& [v, kind] : g.vertices) {
    os << "  \"" << v << "\" [";
    switch (kind) {
      case VertexKind::kTriple:
        os << "shape=point, width=0.15";
        break;
      case VertexKind::kBranch:
        os << "shape=circle, style=filled, fillcolor=black, fixedsize=true, width=0.08";
        break;
      case VertexKind::kDb:
        os << "shape=circle, style=filled, color=purple, fillcolor=purple, fixedsize=true, "
              "width=0.12";
        break;
    }
    os << ", label=\"\", xlabel=\"" << v << "\"];\n";
  }
  for (const auto& [e, ends] : g.edges) {
    const HalfEdgeRef tail{e, 0};
    const HalfEdgeRef head{e, 1};
    os << "  \"" << ends.tail << "\" -- \"" << ends.head << "\" [label=\"" << e << "\"";
    if (auto it = port.find(tail); it != port.end()) os << ", tailport=" << it->second;
    if (auto it = port.find(head); it != port.end()) os << ", headport=" << it->second;
    const bool tail_pref = preferred.count(tail) > 0;
    const bool head_pref = preferred.count(head) > 0;
    if (tail_pref && head_pref) {
      os << ", dir=both, arrowtail=normal, arrowhead=normal";
    } else if (head_pref) {
      os << ", dir=forward, arrowhead=normal";
    } else if (tail_pref) {
      os << ", dir=back, arrowtail=normal";
    }
    os << "];\n";
  }
  if (g.circles > 0) {
    os << "  subgraph cluster_circles {\n    label=\"double circles\";\n";
    for (std::int64_t k = 1; k <= g.circles; ++k) {
      os << "    \"circle:" << k << "\" [shape=circle, style=dashed, label=\"\", width=0.3];\n";
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace daisy
