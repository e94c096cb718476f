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

namespace daisy {

std::string to_string(ManifoldClass m) {
  std::string out = m.homology == Homology::kPeriodic ? "periodic" : "infinite";
  out += m.boundary == Boundary::kClosed ? "-closed" : "-bounded";
  return out;
}

std::optional<ManifoldClass> parse_manifold_class(std::string_view text) {
  for (const ManifoldClass& m : kAllManifoldClasses) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

const char* to_string(RealizabilityVerdict::Reason reason) {
  switch (reason) {
    case RealizabilityVerdict::Reason::kNotGradable:
      return "not-gradable";
    case RealizabilityVerdict::Reason::kHasDbValues:
      return "has-DB-values";
    case RealizabilityVerdict::Reason::kUnconditional:
      return "unconditional";
  }
  return "?";
}

RealizabilityVerdict decide_realizable(const DaisyGraph& base,
                                       const GradeResult& graded, ManifoldClass m) {
  using Reason = RealizabilityVerdict::Reason;
  RealizabilityVerdict verdict;
  const bool need_grading = m.homology == Homology::kPeriodic;
  const bool forbid_db = m.boundary == Boundary::kClosed;

  if (need_grading && !graded.gradable()) {
    verdict.reasons.push_back(Reason::kNotGradable);
    verdict.grading_evidence = graded.failure;
  }
  if (forbid_db) {
    verdict.db_vertices = db_vertices(base);
    if (!verdict.db_vertices.empty()) verdict.reasons.push_back(Reason::kHasDbValues);
  }
  verdict.realizable = verdict.reasons.empty();
  if (!need_grading && !forbid_db) verdict.reasons.push_back(Reason::kUnconditional);
  return verdict;
}

RealizabilityVerdict decide_realizable(const ArrowedDaisyGraph& g, ManifoldClass m) {
  return decide_realizable(g.base, grade(g), m);
}

RealizabilityVerdict decide_realizable(const OrderedDaisyGraph& g, ManifoldClass m) {
  return decide_realizable(g.base, m);
}

}  // namespace daisy
