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

// Double arcs: the maximal walks that continue straight through every triple
// vertex along its consecutive pairs. Open arcs end at degree-1 vertices;
// closed arcs return to where they started.

#ifndef DAISY_ARCS_HPP_
#define DAISY_ARCS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "daisy/grading.hpp"
#include "daisy/model.hpp"

namespace daisy {

// Crossing a triple vertex through one of its pairs.
struct Passage {
  Id vertex;
  int pair_index = 0;

  friend bool operator==(const Passage&, const Passage&) = default;
};

struct DoubleArc {
  enum class Kind { kOpen, kClosed };

  Kind kind = Kind::kOpen;
  // Edges in traversal order.
  std::vector<Id> edges;
  // passages[k] is crossed between edges[k] and edges[k + 1]; a closed arc
  // has one extra passage leading back to edges[0].
  std::vector<Passage> passages;

  friend bool operator==(const DoubleArc&, const DoubleArc&) = default;
};

const char* to_string(DoubleArc::Kind kind);

struct ArcDecomposition {
  std::vector<DoubleArc> arcs;  // open arcs first, then closed arcs
  std::int64_t circles = 0;
};

// Traces every double arc. Open arcs are seeded from degree-1 half-edges in
// lexicographic order and run from their smaller end; closed arcs are seeded
// from the smallest unused edge and leave it through slot 1.
ArcDecomposition decompose_arcs(const DaisyGraph& g);

struct ArcParity {
  std::size_t arc_index = 0;  // into decompose_arcs(g).arcs
  DoubleArc arc;
  std::size_t edge_count = 0;
  bool even = false;
};

std::vector<ArcParity> closed_arc_parities(const DaisyGraph& g);

struct ShortGradeLift {
  std::optional<ArrowedDaisyGraph> adg;
  std::optional<Grading> grading;   // grades in {0, 1}, every base 0
  std::vector<DoubleArc> odd_arcs;  // filled when no lift exists

  bool liftable() const { return adg.has_value(); }
};

// Gives the edges 0/1 grades alternating along each arc (every arc starts
// at 0) and prefers, in every pair, the half-edge of the grade-1 edge.
// Impossible exactly when some closed arc has odd length.
ShortGradeLift short_grade_lift(const DaisyGraph& g);
// Throws Error("expected plain DG") unless g is a DaisyGraph.
ShortGradeLift short_grade_lift(const AnyGraph& g);

}  // namespace daisy

#endif  // DAISY_ARCS_HPP_
