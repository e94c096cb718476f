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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "daisy/arcs.hpp"
#include "daisy/grading.hpp"
#include "daisy/model.hpp"
#include "daisy/oracle.hpp"
#include "daisy/realize.hpp"
#include "daisy/textio.hpp"

namespace daisy::cli {

namespace {

using Json = nlohmann::ordered_json;

// Input or usage problem; reported on the error stream with exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

const ArrowedDaisyGraph& require_arrowed(const AnyGraph& g, const std::string& command) {
  if (const auto* adg = std::get_if<ArrowedDaisyGraph>(&g)) return *adg;
  if (const auto* odg = std::get_if<OrderedDaisyGraph>(&g)) return odg->base;
  throw UsageError(command + " needs an adg or odg document, got dg");
}

Json grading_json(const Grading& gr) {
  Json grades = Json::object();
  for (const auto& [e, value] : gr.grades) grades[e] = value;
  Json bases = Json::object();
  for (const auto& [v, value] : gr.bases) bases[v] = value;
  return Json{{"grades", grades}, {"bases", bases}};
}

Json evidence_json(const NotGradable& f) {
  Json j{{"reason", to_string(f.reason)}, {"edge", f.edge}, {"vertex", f.vertex}};
  if (f.reason == NotGradable::Reason::kConflict) {
    j["assigned"] = f.assigned;
    j["required"] = f.required;
  }
  return j;
}

std::string evidence_text(const NotGradable& f) {
  if (f.reason == NotGradable::Reason::kObstructingLoop) {
    return "grade-obstructing loop " + f.edge + " at " + f.vertex;
  }
  return "conflict on edge " + f.edge + " at " + f.vertex + " (assigned " +
         std::to_string(f.assigned) + ", required " + std::to_string(f.required) + ")";
}

void print_grading(std::ostream& out, const Grading& gr) {
  for (const auto& [e, value] : gr.grades) out << "grade " << e << ' ' << value << '\n';
  for (const auto& [v, value] : gr.bases) out << "base " << v << ' ' << value << '\n';
}

Json arc_json(const DoubleArc& arc) {
  Json passages = Json::array();
  for (const Passage& p : arc.passages) {
    passages.push_back(Json{{"vertex", p.vertex}, {"pair", p.pair_index}});
  }
  Json j{{"kind", to_string(arc.kind)},
         {"edges", arc.edges},
         {"passages", passages},
         {"length", arc.edges.size()}};
  if (arc.kind == DoubleArc::Kind::kClosed) {
    j["parity"] = arc.edges.size() % 2 == 0 ? "even" : "odd";
  }
  return j;
}

std::string arc_text(const DoubleArc& arc) {
  std::string out = to_string(arc.kind);
  for (const Id& e : arc.edges) out += " " + e;
  out += " length " + std::to_string(arc.edges.size());
  if (arc.kind == DoubleArc::Kind::kClosed) {
    out += arc.edges.size() % 2 == 0 ? " even" : " odd";
  }
  return out;
}

struct Options {
  std::string input = "-";
  bool json = false;
  std::string manifold;
  std::int64_t chi_f = 0;
  std::int64_t triples_t = 0;
  std::int64_t branches_b = 0;
  std::uint64_t seed = 0;
  int triples = 3;
  int degree_one = 4;
  std::string topology = "general";
  double db_probability = 0.0;
  std::int64_t circles = 0;
  int max_triples = 1;
  bool pendant_only = false;
  bool db_variants = false;
  bool fixed_arrows = false;
  std::int64_t max_circles = 0;
};

int cmd_check(const Options& o, const AnyGraph& doc, std::ostream& out, bool verdict_line) {
  const ArrowedDaisyGraph& g = require_arrowed(doc, verdict_line ? "check" : "grade");
  const GradeResult r = grade(g);
  if (o.json) {
    Json j{{"gradable", r.gradable()}};
    if (verdict_line) j["obstructing_loops"] = grade_obstructing_loops(g);
    if (r.gradable()) {
      const Json gj = grading_json(*r.grading);
      j["grades"] = gj["grades"];
      j["bases"] = gj["bases"];
    } else {
      j["evidence"] = evidence_json(*r.failure);
    }
    out << j.dump(2) << '\n';
  } else if (r.gradable()) {
    if (verdict_line) out << "gradable\n";
    print_grading(out, *r.grading);
  } else {
    out << "not gradable: " << evidence_text(*r.failure) << '\n';
  }
  return r.gradable() ? kExitOk : kExitNegative;
}

int cmd_oracle(const Options& o, const AnyGraph& doc, std::ostream& out) {
  const ArrowedDaisyGraph& g = require_arrowed(doc, "oracle-grade");
  if (g.base.edges.size() > kOracleMaxEdges) {
    throw UsageError("oracle-grade accepts at most " + std::to_string(kOracleMaxEdges) +
                     " edges");
  }
  const OracleOutcome r = oracle_gradable(g);
  if (o.json) {
    Json j{{"gradable", r.gradable()}};
    if (r.gradable()) {
      const Json gj = grading_json(*r.grading);
      j["grades"] = gj["grades"];
      j["bases"] = gj["bases"];
    }
    out << j.dump(2) << '\n';
  } else if (r.gradable()) {
    out << "gradable\n";
    print_grading(out, *r.grading);
  } else {
    out << "not gradable\n";
  }
  return r.gradable() ? kExitOk : kExitNegative;
}

int cmd_arcs(const Options& o, const AnyGraph& doc, std::ostream& out) {
  const ArcDecomposition d = decompose_arcs(plain(doc));
  if (o.json) {
    Json arcs = Json::array();
    for (const DoubleArc& arc : d.arcs) arcs.push_back(arc_json(arc));
    out << Json{{"circles", d.circles}, {"arcs", arcs}}.dump(2) << '\n';
  } else {
    for (const DoubleArc& arc : d.arcs) out << arc_text(arc) << '\n';
    out << "circles " << d.circles << '\n';
  }
  return kExitOk;
}

int cmd_lift(const Options& o, const AnyGraph& doc, std::ostream& out) {
  if (!std::holds_alternative<DaisyGraph>(doc)) throw UsageError("expected plain DG");
  const ShortGradeLift lift = short_grade_lift(doc);
  if (o.json) {
    Json j{{"liftable", lift.liftable()}};
    if (lift.liftable()) {
      j["adg"] = serialize(*lift.adg);
      const Json gj = grading_json(*lift.grading);
      j["grades"] = gj["grades"];
      j["bases"] = gj["bases"];
    } else {
      Json odd = Json::array();
      for (const DoubleArc& arc : lift.odd_arcs) odd.push_back(arc_json(arc));
      j["odd_arcs"] = odd;
    }
    out << j.dump(2) << '\n';
  } else if (lift.liftable()) {
    out << serialize(*lift.adg);
  } else {
    out << "not liftable:";
    for (const DoubleArc& arc : lift.odd_arcs) out << "\n  " << arc_text(arc);
    out << '\n';
  }
  return lift.liftable() ? kExitOk : kExitNegative;
}

int cmd_realizable(const Options& o, const AnyGraph& doc, std::ostream& out) {
  const ArrowedDaisyGraph& g = require_arrowed(doc, "realizable");
  const auto m = parse_manifold_class(o.manifold);
  if (!m) throw UsageError("unknown manifold class " + o.manifold);
  const RealizabilityVerdict v = decide_realizable(g, *m);
  std::vector<std::string> reasons;
  for (auto r : v.reasons) reasons.emplace_back(to_string(r));
  if (o.json) {
    Json j{{"manifold", to_string(*m)}, {"realizable", v.realizable}, {"reasons", reasons}};
    if (v.grading_evidence) j["evidence"] = evidence_json(*v.grading_evidence);
    j["db_vertices"] = v.db_vertices;
    out << j.dump(2) << '\n';
  } else {
    out << (v.realizable ? "realizable" : "not realizable");
    for (std::size_t k = 0; k < reasons.size(); ++k) {
      out << (k == 0 ? ": " : ", ") << reasons[k];
    }
    out << '\n';
    if (v.grading_evidence) out << "evidence: " << evidence_text(*v.grading_evidence) << '\n';
    if (!v.realizable && !v.db_vertices.empty()) {
      out << "db vertices:";
      for (const Id& d : v.db_vertices) out << ' ' << d;
      out << '\n';
    }
  }
  return v.realizable ? kExitOk : kExitNegative;
}

int cmd_euler(const Options& o, std::ostream& out) {
  const HalfInteger x = euler_char_of_image(o.chi_f, o.triples_t, o.branches_b);
  if (o.json) {
    out << Json{{"chi_f", o.chi_f},
                {"t", o.triples_t},
                {"b", o.branches_b},
                {"value", to_string(x)},
                {"twice", x.twice}}
               .dump(2)
        << '\n';
  } else {
    out << to_string(x) << '\n';
  }
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  RandomSpec spec;
  if (o.topology == "general") {
    spec.topology = RandomSpec::Topology::kGeneral;
  } else if (o.topology == "forest") {
    spec.topology = RandomSpec::Topology::kForest;
  } else if (o.topology == "chain") {
    spec.topology = RandomSpec::Topology::kChain;
  } else {
    throw UsageError("unknown topology " + o.topology);
  }
  spec.triple_vertices = o.triples;
  spec.degree_one_vertices = o.degree_one;
  spec.db_probability = o.db_probability;
  spec.circles = o.circles;
  out << serialize(random_instance(o.seed, spec));
  return kExitOk;
}

int cmd_census(const Options& o, std::ostream& out, std::ostream& err) {
  EnumerationSpec spec;
  spec.max_triple_vertices = o.max_triples;
  spec.internal_edges = !o.pendant_only;
  spec.db_variants = o.db_variants;
  spec.arrow_exhaustive = !o.fixed_arrows;
  spec.max_circles = o.max_circles;
  if (!o.json) write_census_header(out);
  const CensusSummary s = run_census(spec, [&](const CensusRow& row) {
    if (!o.json) write_census_row(out, row);
  });
  if (o.json) {
    out << Json{{"instances", s.instances},
                {"gradable", s.gradable},
                {"oracle_checked", s.oracle_checked},
                {"disagreements", s.disagreements}}
               .dump(2)
        << '\n';
  }
  err << "census: " << s.instances << " instances, " << s.gradable << " gradable, "
      << s.oracle_checked << " oracle-checked, " << s.disagreements.size()
      << " disagreements\n";
  return s.disagreements.empty() ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Daisy graph toolkit: gradability, double arcs and realizability"};
  app.name("daisy");
  app.require_subcommand(1);
  Options o;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Document path, or - for stdin")->capture_default_str();
    sub->add_flag("--json", o.json, "Machine-readable output");
    return sub;
  };
  auto* check = with_input(app.add_subcommand("check", "Gradability verdict with evidence"));
  auto* grade_cmd = with_input(app.add_subcommand("grade", "Normalized grading"));
  auto* oracle = with_input(app.add_subcommand("oracle-grade", "Gradability by exhaustive search"));
  auto* arcs = with_input(app.add_subcommand("arcs", "Double-arc decomposition and parities"));
  auto* lift = with_input(app.add_subcommand("lift", "Short-grading lift of a dg"));
  auto* realizable = with_input(app.add_subcommand("realizable", "Realizability verdict"));
  realizable->add_option("--manifold", o.manifold, "Ambient manifold class")
      ->required()
      ->check(CLI::IsMember(
          {"periodic-closed", "periodic-bounded", "infinite-closed", "infinite-bounded"}));
  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
  dot->add_option("input", o.input, "Document path, or - for stdin")->capture_default_str();

  auto* euler = app.add_subcommand("euler", "Euler characteristic of the image");
  euler->add_option("--chi-f", o.chi_f, "Euler characteristic of the surface")->required();
  euler->add_option("--t", o.triples_t, "Number of triple values")->required()->check(
      CLI::NonNegativeNumber);
  euler->add_option("--b", o.branches_b, "Number of branch values")->required()->check(
      CLI::NonNegativeNumber);
  euler->add_flag("--json", o.json, "Machine-readable output");

  auto* gen = app.add_subcommand("gen", "Seeded random adg document");
  gen->add_option("--seed", o.seed, "Random seed")->required();
  gen->add_option("--triples", o.triples, "Triple vertices")->capture_default_str()->check(
      CLI::NonNegativeNumber);
  gen->add_option("--degree-one", o.degree_one, "Degree-1 vertices (general topology)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--topology", o.topology, "general, forest or chain")
      ->capture_default_str()
      ->check(CLI::IsMember({"general", "forest", "chain"}));
  gen->add_option("--db-probability", o.db_probability, "Chance a degree-1 vertex is DB")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--circles", o.circles, "Double circles")->check(CLI::NonNegativeNumber);

  auto* census = app.add_subcommand("census", "Enumerate small ADGs, emit CSV, cross-check oracle");
  census->add_option("--max-triples", o.max_triples, "Largest number of triple vertices")
      ->capture_default_str()
      ->check(CLI::Range(0, 3));
  census->add_flag("--pendant-only", o.pendant_only, "No loops or edges between triple vertices");
  census->add_flag("--db-variants", o.db_variants, "Also mark the first degree-1 vertex DB");
  census->add_flag("--fixed-arrows", o.fixed_arrows, "One arrow choice per pairing");
  census->add_option("--max-circles", o.max_circles, "Largest double-circle count")
      ->check(CLI::NonNegativeNumber);
  census->add_flag("--json", o.json, "Summary as JSON instead of CSV rows");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (euler->parsed()) return cmd_euler(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
    if (census->parsed()) return cmd_census(o, out, err);

    const AnyGraph doc = parse(read_input(o.input, in));
    if (check->parsed()) return cmd_check(o, doc, out, true);
    if (grade_cmd->parsed()) return cmd_check(o, doc, out, false);
    if (oracle->parsed()) return cmd_oracle(o, doc, out);
    if (arcs->parsed()) return cmd_arcs(o, doc, out);
    if (lift->parsed()) return cmd_lift(o, doc, out);
    if (realizable->parsed()) return cmd_realizable(o, doc, out);
    if (dot->parsed()) {
      out << export_dot(doc);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    for (const Diagnostic& d : e.diagnostics()) {
      err << (o.input == "-" ? "<stdin>" : o.input) << ':' << to_string(d) << '\n';
    }
    return kExitUsage;
  } catch (const Error& e) {
    err << "daisy: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace daisy::cli
