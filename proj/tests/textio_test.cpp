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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "daisy/oracle.hpp"
#include "test_graphs.hpp"

namespace daisy {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<fs::path> corpus() {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(DAISY_TEST_DATA_DIR)) out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Diagnostic> diagnostics_of(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.diagnostics();
  }
  ADD_FAILURE() << "expected a parse error for:\n" << text;
  return {};
}

std::size_t count(const std::string& s, std::string_view needle) {
  std::size_t n = 0;
  for (auto at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

TEST(ParseTest, MinimalDocuments) {
  EXPECT_EQ(parse("dg\n"), AnyGraph(DaisyGraph{}));
  EXPECT_EQ(parse("# leading comment\n\nadg  # trailing\n"), AnyGraph(ArrowedDaisyGraph{}));
  const AnyGraph g = parse("odg\ncircles 4\n");
  ASSERT_TRUE(std::holds_alternative<OrderedDaisyGraph>(g));
  EXPECT_EQ(plain(g).circles, 4);
}

TEST(ParseTest, StarMatchesFixture) {
  const AnyGraph g = parse(slurp(fs::path(DAISY_TEST_DATA_DIR) / "star.adg"));
  EXPECT_EQ(std::get<ArrowedDaisyGraph>(g), testing::star_adg());
}

TEST(ParseTest, ArrowsForbiddenInDg) {
  const auto d = diagnostics_of(
      "dg\nvertex v triple\nvertex b1 branch\nedge e1 v b1\npair v e1.0 e1.1 pref e1.0\n");
  ASSERT_FALSE(d.empty());
  EXPECT_EQ(d[0].line, 5);
  EXPECT_EQ(d[0].column, 18);
  EXPECT_EQ(d[0].message, "arrows forbidden in dg");
}

TEST(ParseTest, SyntaxDiagnosticsCarryPosition) {
  const auto d = diagnostics_of("adg\nvertex v tripel\nedge 3-x v v\nfrobnicate\n");
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(to_string(d[0]).substr(0, 5), "2:10:");
  EXPECT_EQ(d[0].token, "tripel");
  EXPECT_EQ(d[1].line, 3);
  EXPECT_EQ(d[1].message, "malformed identifier");
  EXPECT_EQ(d[2].line, 4);
  EXPECT_EQ(d[2].message, "unknown statement");
}

TEST(ParseTest, RejectsMalformedInput) {
  for (const char* text : {
           "",
           "# only a comment\n",
           "graph\n",
           "adg\r\n",
           "adg\ncircles -1\n",
           "adg\ncircles 1\ncircles 2\n",
           "adg\nvertex v branch\nvertex v branch\n",
           "adg\norder v e1.0 e2.0 e3.0\n",
           "adg\nvertex v triple\nedge e1 v v\npair v e1.0 e1.2 pref e1.0\n",
           "adg\nvertex v triple\nedge e1 v v\npair v e1.0 e1.1\n",
       }) {
    EXPECT_THROW(parse(text), ParseError) << text;
  }
}

TEST(ParseTest, ViolationsPointAtDeclaringLine) {
  // Line 3 declares a degree-1 vertex with two edges; line 7 repeats e1.
  const std::string text =
      "adg\n"
      "vertex v triple\n"
      "vertex b branch\n"
      "edge e1 v b\n"
      "edge e2 v b\n"
      "edge e3 v v\n"
      "pair v e1.0 e1.0 pref e1.0\n"
      "pair v e2.0 e3.0 pref e2.0\n"
      "pair v e3.1 e3.1 pref e3.1\n";
  const auto d = diagnostics_of(text);
  ASSERT_FALSE(d.empty());
  bool degree_on_b = false;
  bool pair_on_7 = false;
  for (const Diagnostic& x : d) {
    if (x.message.rfind("degree:", 0) == 0 && x.token == "b") degree_on_b = x.line == 3;
    if (x.line == 7 && x.message.find("pair") != std::string::npos) pair_on_7 = true;
  }
  EXPECT_TRUE(degree_on_b);
  EXPECT_TRUE(pair_on_7);
  EXPECT_TRUE(std::is_sorted(d.begin(), d.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return a.line < b.line;
  }));
}

TEST(ParseTest, MissingPrefInAdg) {
  const auto d = diagnostics_of(
      "adg\nvertex v triple\nvertex b1 branch\nedge e1 v b1\npair v e1.0 e1.1\n");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].line, 5);
  EXPECT_NE(d[0].message.find("pref"), std::string::npos);
}

TEST(CorpusTest, HasEnoughVariety) {
  const auto files = corpus();
  EXPECT_GE(files.size(), 20u);
  int kinds[3] = {0, 0, 0};
  bool loops = false, db = false, circles = false;
  for (const fs::path& p : files) {
    const AnyGraph g = parse(slurp(p));
    ++kinds[static_cast<int>(kind_of(g))];
    const DaisyGraph& d = plain(g);
    circles |= d.circles > 0;
    db |= !db_vertices(d).empty();
    for (const auto& [e, ends] : d.edges) loops |= ends.is_loop();
  }
  EXPECT_GT(kinds[0], 0);
  EXPECT_GT(kinds[1], 0);
  EXPECT_GT(kinds[2], 0);
  EXPECT_TRUE(loops && db && circles);
}

TEST(CorpusTest, SerializeIsFixedPoint) {
  for (const fs::path& p : corpus()) {
    SCOPED_TRACE(p.filename().string());
    const AnyGraph g = parse(slurp(p));
    const std::string once = serialize(g);
    EXPECT_EQ(parse(once), AnyGraph(std::visit(
                               [](const auto& x) -> AnyGraph {
                                 using T = std::decay_t<decltype(x)>;
                                 if constexpr (std::is_same_v<T, OrderedDaisyGraph>) {
                                   return odg_canonicalize(x);
                                 } else {
                                   return x;
                                 }
                               },
                               g)));
    EXPECT_EQ(serialize(parse(once)), once);
  }
}

TEST(SerializeTest, RandomRoundTrip) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    RandomSpec spec;
    spec.triple_vertices = static_cast<int>(seed % 7);
    spec.degree_one_vertices = static_cast<int>(seed % 5);
    spec.db_probability = 0.3;
    spec.circles = static_cast<std::int64_t>(seed % 2);
    const ArrowedDaisyGraph g = random_instance(seed, spec);
    const DaisyGraph back = std::get<ArrowedDaisyGraph>(parse(serialize(g))).base;
    EXPECT_EQ(back.vertices, g.base.vertices);
    EXPECT_EQ(back.edges, g.base.edges);
    EXPECT_EQ(back.circles, g.base.circles);
    EXPECT_EQ(serialize(parse(serialize(g))), serialize(g));
  }
}

TEST(SerializeTest, RotatedOrderingsSerializeIdentically) {
  OrderedDaisyGraph a;
  a.base = testing::star_adg();
  a.ordering["v"] = {testing::H("e1", 0), testing::H("e3", 0), testing::H("e5", 0)};
  OrderedDaisyGraph b = a;
  b.ordering["v"] = {testing::H("e5", 0), testing::H("e1", 0), testing::H("e3", 0)};
  EXPECT_EQ(serialize(a), serialize(b));
  EXPECT_NE(serialize(a).find("order v e1.0 e3.0 e5.0\n"), std::string::npos);
}

TEST(DotTest, StarStructure) {
  const std::string dot = export_dot(testing::star_adg());
  EXPECT_EQ(dot.rfind("graph daisy {", 0), 0u);
  EXPECT_EQ(count(dot, "[shape="), 7u);
  EXPECT_EQ(count(dot, "shape=point"), 1u);
  EXPECT_EQ(count(dot, " -- "), 6u);
  EXPECT_EQ(count(dot, "arrowhead=") + count(dot, "arrowtail="), 3u);
  EXPECT_EQ(count(dot, "tailport=n,"), 1u);
  EXPECT_EQ(count(dot, "tailport=s]"), 1u);
}

TEST(DotTest, DbAndCircles) {
  ArrowedDaisyGraph g = testing::branch_to_db_adg();
  g.base.circles = 2;
  const std::string dot = export_dot(g);
  EXPECT_NE(dot.find("purple"), std::string::npos);
  EXPECT_NE(dot.find("cluster_circles"), std::string::npos);
  EXPECT_EQ(count(dot, "dashed"), 2u);
}

TEST(DotTest, Stable) {
  for (const fs::path& p : corpus()) {
    const AnyGraph g = parse(slurp(p));
    EXPECT_EQ(export_dot(g), export_dot(parse(serialize(g))));
  }
  EXPECT_EQ(export_dot(DaisyGraph{}), "graph daisy {\n}\n");
}

}  // namespace
}  // namespace daisy
