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

#include <gtest/gtest.h>

#include <json.hpp>
#include <fstream>
#include <sstream>

#include "daisy/arcs.hpp"
#include "daisy/grading.hpp"
#include "daisy/realize.hpp"
#include "daisy/textio.hpp"
#include "test_graphs.hpp"

namespace daisy {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(DAISY_TEST_DATA_DIR) + "/" + name; }

TEST(CliTest, CheckExitCodes) {
  EXPECT_EQ(run({"check", data("star.adg")}).code, cli::kExitOk);
  EXPECT_EQ(run({"check", data("obstructing_loop.adg")}).code, cli::kExitNegative);
  EXPECT_EQ(run({"check", data("star.dg")}).code, cli::kExitUsage);
  EXPECT_EQ(run({"check", "/nonexistent/file.adg"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"check"}, "adg\nbogus\n").code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
}

TEST(CliTest, CheckReadsStdin) {
  const CliRun r = run({"check", "-"}, serialize(testing::star_adg()));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("gradable\n", 0), 0u);
  EXPECT_NE(r.out.find("base v "), std::string::npos);
}

TEST(CliTest, ConflictEvidence) {
  const CliRun r = run({"check"}, serialize(testing::two_vertex_conflict_adg()));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("not gradable: conflict on edge ", 0), 0u);
}

TEST(CliTest, RealizableWithDbVertex) {
  CliRun r = run({"realizable", "--manifold", "periodic-closed", data("star.odg")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("has-DB-values"), std::string::npos);
  r = run({"realizable", "--manifold", "periodic-bounded", data("star.odg")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run({"realizable", data("star.odg")}).code, 2);
  EXPECT_EQ(run({"realizable", "--manifold", "torus", data("star.odg")}).code, 2);
}

TEST(CliTest, Euler) {
  CliRun r = run({"euler", "--chi-f", "0", "--t", "3", "--b", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "7/2\n");
  r = run({"euler", "--chi-f", "2", "--t", "1", "--b", "2", "--json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["twice"], 2 * (2 + 1) + 2);
  EXPECT_EQ(j["value"], "4");
}

TEST(CliTest, GradeJsonMatchesLibrary) {
  for (const char* f : {"star.adg", "star.odg", "forest_5.adg", "chain_8.adg", "gen_03.adg"}) {
    SCOPED_TRACE(f);
    const CliRun r = run({"grade", "--json", data(f)});
    const auto j = nlohmann::json::parse(r.out);
    std::ifstream in(data(f));
    std::stringstream ss;
    ss << in.rdbuf();
    const AnyGraph g = parse(ss.str());
    const ArrowedDaisyGraph& adg = std::holds_alternative<OrderedDaisyGraph>(g)
                                       ? std::get<OrderedDaisyGraph>(g).base
                                       : std::get<ArrowedDaisyGraph>(g);
    const GradeResult res = grade(adg);
    EXPECT_EQ(j["gradable"].get<bool>(), res.gradable());
    EXPECT_EQ(r.code, res.gradable() ? 0 : 1);
    if (res.gradable()) {
      for (const auto& [e, value] : res.grading->grades) EXPECT_EQ(j["grades"][e], value);
      for (const auto& [v, value] : res.grading->bases) EXPECT_EQ(j["bases"][v], value);
      EXPECT_EQ(j["grades"].size(), res.grading->grades.size());
    }
  }
}

TEST(CliTest, ArcsJsonMatchesLibrary) {
  const CliRun r = run({"arcs", "--json", data("bigon.dg")});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  std::ifstream in(data("bigon.dg"));
  std::stringstream ss;
  ss << in.rdbuf();
  const ArcDecomposition d = decompose_arcs(plain(parse(ss.str())));
  EXPECT_EQ(j["circles"], d.circles);
  ASSERT_EQ(j["arcs"].size(), d.arcs.size());
  for (std::size_t k = 0; k < d.arcs.size(); ++k) {
    EXPECT_EQ(j["arcs"][k]["edges"].get<std::vector<std::string>>(), d.arcs[k].edges);
    EXPECT_EQ(j["arcs"][k]["kind"], d.arcs[k].kind == DoubleArc::Kind::kOpen ? "open" : "closed");
  }
}

TEST(CliTest, RealizableJsonMatchesLibrary) {
  const std::string doc = serialize(testing::two_vertex_conflict_adg());
  for (const ManifoldClass& m : kAllManifoldClasses) {
    const CliRun r = run({"realizable", "--json", "--manifold", to_string(m)}, doc);
    const auto j = nlohmann::json::parse(r.out);
    const auto v = decide_realizable(testing::two_vertex_conflict_adg(), m);
    EXPECT_EQ(j["realizable"].get<bool>(), v.realizable);
    EXPECT_EQ(j["manifold"], to_string(m));
    EXPECT_EQ(r.code, v.realizable ? 0 : 1);
  }
}

TEST(CliTest, LiftAndOracle) {
  CliRun r = run({"lift", data("star.dg")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("adg\n", 0), 0u);
  EXPECT_NO_THROW(parse(r.out));
  EXPECT_EQ(run({"lift", data("star.adg")}).code, 2);
  EXPECT_EQ(run({"oracle-grade", data("star.adg")}).code, 0);
  EXPECT_EQ(run({"oracle-grade", data("obstructing_loop.adg")}).code, 1);
}

TEST(CliTest, ExportDot) {
  const CliRun r = run({"export-dot", data("star.adg")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, export_dot(testing::star_adg()));
}

TEST(CliTest, GenIsDeterministicAndParses) {
  const CliRun a = run({"gen", "--seed", "7", "--triples", "3"});
  const CliRun b = run({"gen", "--seed", "7", "--triples", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(parse(a.out));
  EXPECT_NE(a.out, run({"gen", "--seed", "8", "--triples", "3"}).out);
}

TEST(CliTest, CensusPendantOnly) {
  const CliRun r = run({"census", "--max-triples", "1", "--pendant-only"});
  EXPECT_EQ(r.code, 0);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, 1u + 121u);
  EXPECT_EQ(r.out, run({"census", "--max-triples", "1", "--pendant-only"}).out);
}

}  // namespace
}  // namespace daisy
