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

#include "daisy/arcs.hpp"

#include <gtest/gtest.h>

#include <map>

#include "daisy/oracle.hpp"
#include "test_graphs.hpp"

namespace daisy {
namespace {

using testing::H;

// Partition, endpoint and crossing laws of a decomposition.
void expect_arc_laws(const DaisyGraph& g, const ArcDecomposition& d) {
  std::map<Id, int> seen;
  std::map<std::pair<Id, int>, int> crossed;
  std::size_t open = 0;
  for (const DoubleArc& arc : d.arcs) {
    for (const Id& e : arc.edges) ++seen[e];
    for (const Passage& p : arc.passages) ++crossed[{p.vertex, p.pair_index}];
    if (arc.kind == DoubleArc::Kind::kOpen) {
      ++open;
      EXPECT_EQ(arc.passages.size() + 1, arc.edges.size());
    } else {
      EXPECT_EQ(arc.passages.size(), arc.edges.size());
    }
  }
  EXPECT_EQ(seen.size(), g.edges.size());
  for (const auto& [e, n] : seen) {
    EXPECT_TRUE(g.edges.count(e)) << e;
    EXPECT_EQ(n, 1) << e;
  }
  std::size_t degree_one = 0;
  for (const auto& [v, kind] : g.vertices) degree_one += kind == VertexKind::kTriple ? 0 : 1;
  EXPECT_EQ(2 * open, degree_one);
  const std::size_t triples = triple_vertices(g).size();
  EXPECT_EQ(crossed.size(), 3 * triples);
  for (const auto& [key, n] : crossed) EXPECT_EQ(n, 1) << key.first << "/" << key.second;
}

TEST(DecomposeArcsTest, StarGivesThreeOpenArcs) {
  const ArcDecomposition d = decompose_arcs(testing::star_dg());
  ASSERT_EQ(d.arcs.size(), 3u);
  EXPECT_EQ(d.arcs[0].edges, (std::vector<Id>{"e1", "e2"}));
  EXPECT_EQ(d.arcs[1].edges, (std::vector<Id>{"e3", "e4"}));
  EXPECT_EQ(d.arcs[2].edges, (std::vector<Id>{"e5", "e6"}));
  for (const DoubleArc& arc : d.arcs) EXPECT_EQ(arc.kind, DoubleArc::Kind::kOpen);
  EXPECT_EQ(d.arcs[1].passages, (std::vector<Passage>{{"v", 1}}));
}

TEST(DecomposeArcsTest, ConsecutiveLoopIsClosedArcOfLengthOne) {
  const ArcDecomposition d = decompose_arcs(testing::consecutive_loop_dg());
  ASSERT_EQ(d.arcs.size(), 3u);
  const DoubleArc& loop = d.arcs.back();
  EXPECT_EQ(loop.kind, DoubleArc::Kind::kClosed);
  EXPECT_EQ(loop.edges, std::vector<Id>{"L"});
  EXPECT_EQ(loop.passages, (std::vector<Passage>{{"v", 0}}));
}

// Hand trace: leave a through a.1 at w, pair 0 continues on b.1, b returns
// to u where pair 0 leads back into a.0.
TEST(DecomposeArcsTest, BigonClosesIntoLengthTwoArc) {
  const DaisyGraph g = testing::bigon_dg();
  const ArcDecomposition d = decompose_arcs(g);
  ASSERT_EQ(d.arcs.size(), 5u);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(d.arcs[i].kind, DoubleArc::Kind::kOpen);
  EXPECT_EQ(d.arcs[4].kind, DoubleArc::Kind::kClosed);
  EXPECT_EQ(d.arcs[4].edges, (std::vector<Id>{"a", "b"}));
  EXPECT_EQ(d.arcs[4].passages, (std::vector<Passage>{{"w", 0}, {"u", 0}}));
  expect_arc_laws(g, d);
}

TEST(DecomposeArcsTest, OpenArcRunsFromSmallerEnd) {
  DaisyGraph g = testing::star_dg();
  // b2 is the end of e2; writing e2 as (b2, v) makes e2.0 the smallest
  // degree-1 half-edge of its arc.
  g.edges["e2"] = {"b2", "v"};
  g.pairing["v"][0] = {H("e1", 0), H("e2", 1)};
  const ArcDecomposition d = decompose_arcs(g);
  EXPECT_EQ(d.arcs[0].edges, (std::vector<Id>{"e1", "e2"}));
  g.edges["e0"] = {"b0", "v"};
  g.vertices["b0"] = VertexKind::kBranch;
  g.edges.erase("e1");
  g.vertices.erase("b1");
  g.pairing["v"][0] = {H("e0", 1), H("e2", 1)};
  EXPECT_EQ(decompose_arcs(g).arcs[0].edges, (std::vector<Id>{"e0", "e2"}));
}

TEST(DecomposeArcsTest, CirclesEchoedNotMaterialized) {
  DaisyGraph g;
  g.circles = 4;
  const ArcDecomposition d = decompose_arcs(g);
  EXPECT_TRUE(d.arcs.empty());
  EXPECT_EQ(d.circles, 4);
}

TEST(DecomposeArcsTest, LawsOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    RandomSpec spec;
    spec.triple_vertices = static_cast<int>(seed % 9);
    spec.degree_one_vertices = static_cast<int>(seed % 7);
    const ArrowedDaisyGraph g = random_instance(seed, spec);
    expect_arc_laws(g.base, decompose_arcs(g.base));
  }
}

TEST(ClosedArcParitiesTest, Examples) {
  const auto loop = closed_arc_parities(testing::consecutive_loop_dg());
  ASSERT_EQ(loop.size(), 1u);
  EXPECT_EQ(loop[0].edge_count, 1u);
  EXPECT_FALSE(loop[0].even);

  const auto bigon = closed_arc_parities(testing::bigon_dg());
  ASSERT_EQ(bigon.size(), 1u);
  EXPECT_EQ(bigon[0].edge_count, 2u);
  EXPECT_TRUE(bigon[0].even);
  EXPECT_EQ(bigon[0].arc_index, 4u);

  EXPECT_TRUE(closed_arc_parities(testing::star_dg()).empty());
}

TEST(ShortGradeLiftTest, Star) {
  const DaisyGraph g = testing::star_dg();
  const ShortGradeLift lift = short_grade_lift(g);
  ASSERT_TRUE(lift.liftable());
  const std::map<Id, std::int64_t> grades = {{"e1", 0}, {"e2", 1}, {"e3", 0},
                                             {"e4", 1}, {"e5", 0}, {"e6", 1}};
  EXPECT_EQ(lift.grading->grades, grades);
  EXPECT_EQ(lift.grading->bases, (std::map<Id, std::int64_t>{{"v", 0}}));
  EXPECT_EQ(lift.adg->arrows.at("v"), (std::vector<HalfEdgeRef>{H("e2", 0), H("e4", 0), H("e6", 0)}));
  EXPECT_TRUE(validate(*lift.adg).ok());
  EXPECT_TRUE(validate_grading(*lift.adg, *lift.grading).ok());
}

TEST(ShortGradeLiftTest, OddLoopIsNotLiftable) {
  const ShortGradeLift lift = short_grade_lift(testing::consecutive_loop_dg());
  ASSERT_FALSE(lift.liftable());
  ASSERT_EQ(lift.odd_arcs.size(), 1u);
  EXPECT_EQ(lift.odd_arcs[0].edges, std::vector<Id>{"L"});
}

TEST(ShortGradeLiftTest, CirclesOnly) {
  DaisyGraph g;
  g.circles = 2;
  const ShortGradeLift lift = short_grade_lift(g);
  ASSERT_TRUE(lift.liftable());
  EXPECT_TRUE(lift.grading->grades.empty());
  EXPECT_EQ(lift.adg->base.circles, 2);
}

TEST(ShortGradeLiftTest, RejectsArrowedInput) {
  EXPECT_THROW(short_grade_lift(AnyGraph{testing::star_adg()}), Error);
  EXPECT_NO_THROW(short_grade_lift(AnyGraph{testing::star_dg()}));
}

TEST(ShortGradeLiftTest, LiftIsGradableAndShiftEquivalent) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    RandomSpec spec;
    spec.triple_vertices = 1 + static_cast<int>(seed % 6);
    spec.degree_one_vertices = static_cast<int>(seed % 5);
    const DaisyGraph g = random_instance(seed, spec).base;
    const ShortGradeLift lift = short_grade_lift(g);
    bool all_even = true;
    for (const ArcParity& p : closed_arc_parities(g)) all_even &= p.even;
    ASSERT_EQ(lift.liftable(), all_even) << "seed " << seed;
    if (!lift.liftable()) continue;
    EXPECT_TRUE(validate_grading(*lift.adg, *lift.grading).ok());
    const GradeResult r = grade(*lift.adg);
    ASSERT_TRUE(r.gradable()) << "seed " << seed;
    EXPECT_TRUE(agree_up_to_component_shift(g, *r.grading, *lift.grading));
  }
}

}  // namespace
}  // namespace daisy
