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

// Gradings of arrowed daisy graphs.
//
// A grading assigns an integer g(e) to every edge so that at each triple
// vertex v the non-preferred edges share a grade a(v) and the preferred
// edges have grade a(v) + 1. Double circles are never graded.

#ifndef DAISY_GRADING_HPP_
#define DAISY_GRADING_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "daisy/half_edge_index.hpp"
#include "daisy/model.hpp"

namespace daisy {

struct Grading {
  std::map<Id, std::int64_t> grades;  // every edge
  std::map<Id, std::int64_t> bases;   // a(v) for every triple vertex

  friend bool operator==(const Grading&, const Grading&) = default;
};

// Evidence that an ADG has no grading.
struct NotGradable {
  enum class Reason { kObstructingLoop, kConflict };

  Reason reason = Reason::kConflict;
  Id edge;
  Id vertex;
  // For kConflict: the grade the traversal gave `edge`, and the grade that
  // the base number already fixed at `vertex` demands for it.
  std::int64_t assigned = 0;
  std::int64_t required = 0;
};

// "obstructing-loop" or "conflict".
const char* to_string(NotGradable::Reason reason);

struct GradeResult {
  std::optional<Grading> grading;
  std::optional<NotGradable> failure;

  bool gradable() const { return grading.has_value(); }
};

// Work counters filled by grade().
struct GradeStats {
  std::size_t half_edge_visits = 0;
};

// Loop edges with one preferred and one non-preferred end, sorted by id.
std::vector<Id> grade_obstructing_loops(const ArrowedDaisyGraph& g);

// +1 if f is preferred at v and e is not, -1 for the reverse, 0 otherwise.
// Throws Error if g has a grade-obstructing loop or if e or f does not meet
// the triple vertex v.
int delta_g(const ArrowedDaisyGraph& g, const Id& e, const Id& v, const Id& f);

// Sum of delta_g along the path. Throws Error if the path is malformed or g
// has a grade-obstructing loop.
std::int64_t path_grading_difference(const ArrowedDaisyGraph& g, const Path& p);

// Decides gradability in time linear in the number of edges.
//
// Each connected component of the graph part is graded by a breadth-first
// sweep from its lexicographically smallest edge, which is given grade 0.
// The first vertex reached fixes a(v); every later arrival checks it. The
// first inconsistency (in deterministic sweep order) is reported.
GradeResult grade(const ArrowedDaisyGraph& g, GradeStats* stats = nullptr);
GradeResult grade(const HalfEdgeIndex& index, GradeStats* stats = nullptr);

// Checks every grading equation at every triple vertex, and that grades and
// bases cover exactly the edges and triple vertices of g.
ValidationReport validate_grading(const ArrowedDaisyGraph& g, const Grading& gr);

// Connected component number of each edge (components numbered in order of
// their smallest edge id). Edges are connected through any shared vertex.
std::map<Id, int> edge_components(const DaisyGraph& g);

}  // namespace daisy

#endif  // DAISY_GRADING_HPP_
