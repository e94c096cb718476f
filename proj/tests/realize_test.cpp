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

#include "daisy/realize.hpp"

#include <gtest/gtest.h>

#include "daisy/oracle.hpp"
#include "test_graphs.hpp"

namespace daisy {
namespace {

using Reason = RealizabilityVerdict::Reason;

std::array<bool, 4> table(const ArrowedDaisyGraph& g) {
  std::array<bool, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) {
    out[k] = decide_realizable(g, kAllManifoldClasses[k]).realizable;
  }
  return out;
}

TEST(ManifoldClassTest, NamesRoundTrip) {
  for (const ManifoldClass& m : kAllManifoldClasses) {
    EXPECT_EQ(parse_manifold_class(to_string(m)), m);
  }
  EXPECT_FALSE(parse_manifold_class("periodic").has_value());
  EXPECT_EQ(to_string(kAllManifoldClasses[2]), "infinite-closed");
}

TEST(DecideRealizableTest, GradableWithoutDbIsRealizableEverywhere) {
  EXPECT_EQ(table(testing::star_adg()), (std::array<bool, 4>{true, true, true, true}));
  const auto v = decide_realizable(testing::star_adg(), kAllManifoldClasses[0]);
  EXPECT_TRUE(v.reasons.empty());
  const auto w = decide_realizable(testing::star_adg(), kAllManifoldClasses[3]);
  EXPECT_EQ(w.reasons, std::vector<Reason>{Reason::kUnconditional});
}

TEST(DecideRealizableTest, DbValueNeedsBoundary) {
  const ArrowedDaisyGraph g = testing::branch_to_db_adg();
  EXPECT_EQ(table(g), (std::array<bool, 4>{false, true, false, true}));
  const auto v = decide_realizable(g, kAllManifoldClasses[0]);
  EXPECT_EQ(v.reasons, std::vector<Reason>{Reason::kHasDbValues});
  EXPECT_EQ(v.db_vertices, std::vector<Id>{"q"});
}

TEST(DecideRealizableTest, NotGradableNeedsInfiniteHomology) {
  const ArrowedDaisyGraph g = testing::two_vertex_conflict_adg();
  EXPECT_EQ(table(g), (std::array<bool, 4>{false, false, true, true}));
  const auto v = decide_realizable(g, kAllManifoldClasses[1]);
  EXPECT_EQ(v.reasons, std::vector<Reason>{Reason::kNotGradable});
  ASSERT_TRUE(v.grading_evidence.has_value());
  EXPECT_EQ(v.grading_evidence->reason, NotGradable::Reason::kConflict);
}

TEST(DecideRealizableTest, BothObstructions) {
  ArrowedDaisyGraph g = testing::two_vertex_conflict_adg();
  g.base.vertices["bu1"] = VertexKind::kDb;
  const auto v = decide_realizable(g, kAllManifoldClasses[0]);
  EXPECT_FALSE(v.realizable);
  EXPECT_EQ(v.reasons, (std::vector<Reason>{Reason::kNotGradable, Reason::kHasDbValues}));
  EXPECT_EQ(table(g), (std::array<bool, 4>{false, false, false, true}));
}

TEST(DecideRealizableTest, DoubleCirclesOnly) {
  EXPECT_EQ(table(testing::circles_only_adg(5)), (std::array<bool, 4>{true, true, true, true}));
}

TEST(DecideRealizableTest, OdgDecidedOnUnderlyingAdg) {
  OrderedDaisyGraph o;
  o.base = testing::star_adg();
  o.ordering["v"] = {testing::H("e3", 0), testing::H("e1", 0), testing::H("e5", 0)};
  for (const ManifoldClass& m : kAllManifoldClasses) {
    EXPECT_EQ(decide_realizable(o, m).realizable, decide_realizable(o.base, m).realizable);
  }
}

TEST(DecideRealizableTest, MonotoneOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    RandomSpec spec;
    spec.triple_vertices = static_cast<int>(seed % 4);
    spec.degree_one_vertices = 2 + static_cast<int>(seed % 4);
    spec.db_probability = 0.2;
    const auto t = table(random_instance(seed, spec));
    EXPECT_TRUE(!t[0] || t[2]);  // periodic-closed => infinite-closed
    EXPECT_TRUE(!t[1] || t[3]);
    EXPECT_TRUE(!t[0] || t[1]);  // closed => bounded
    EXPECT_TRUE(!t[2] || t[3]);
    EXPECT_TRUE(t[3]);
  }
}

}  // namespace
}  // namespace daisy
