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

#include "daisy/half_edge_index.hpp"

namespace daisy {

const char* to_string(DoubleArc::Kind kind) {
  return kind == DoubleArc::Kind::kOpen ? "open" : "closed";
}

namespace {

// Follows the arc that enters edge_of(h) through h. Stops at a degree-1 end
// or when the walk comes back to `stop`.
void trace(const HalfEdgeIndex& ix, int h, int stop, std::vector<char>& used,
           DoubleArc& arc) {
  for (;;) {
    const int e = HalfEdgeIndex::edge_of(h);
    if (used[e]) throw Error("edge " + ix.edge_id(e) + " reached twice while tracing arcs");
    used[e] = 1;
    arc.edges.push_back(ix.edge_id(e));
    const int far = HalfEdgeIndex::opposite(h);
    const int v = ix.vertex_of(far);
    if (!ix.is_triple(v)) return;
    const int next = ix.partner(far);
    if (next == HalfEdgeIndex::kNone) {
      throw Error("half-edge " + to_string(ix.ref(far)) + " has no consecutive partner");
    }
    arc.passages.push_back({ix.vertex_id(v), ix.pair_index(far)});
    if (next == stop) return;
    h = next;
  }
}

}  // namespace

ArcDecomposition decompose_arcs(const DaisyGraph& g) {
  const HalfEdgeIndex ix(g);
  std::vector<char> used(ix.edge_count(), 0);
  ArcDecomposition out;
  out.circles = g.circles;

  for (int h = 0; h < ix.half_edge_count(); ++h) {
    if (ix.is_triple(ix.vertex_of(h)) || used[HalfEdgeIndex::edge_of(h)]) continue;
    DoubleArc arc;
    arc.kind = DoubleArc::Kind::kOpen;
    trace(ix, h, HalfEdgeIndex::kNone, used, arc);
    out.arcs.push_back(std::move(arc));
  }
  for (int e = 0; e < ix.edge_count(); ++e) {
    if (used[e]) continue;
    DoubleArc arc;
    arc.kind = DoubleArc::Kind::kClosed;
    trace(ix, 2 * e, 2 * e, used, arc);
    out.arcs.push_back(std::move(arc));
  }
  return out;
}

std::vector<ArcParity> closed_arc_parities(const DaisyGraph& g) {
  const ArcDecomposition d = decompose_arcs(g);
  std::vector<ArcParity> out;
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const DoubleArc& arc = d.arcs[i];
    if (arc.kind != DoubleArc::Kind::kClosed) continue;
    out.push_back({i, arc, arc.edges.size(), arc.edges.size() % 2 == 0});
  }
  return out;
}

ShortGradeLift short_grade_lift(const DaisyGraph& g) {
  const ArcDecomposition d = decompose_arcs(g);
  ShortGradeLift lift;
  for (const DoubleArc& arc : d.arcs) {
    if (arc.kind == DoubleArc::Kind::kClosed && arc.edges.size() % 2 != 0) {
      lift.odd_arcs.push_back(arc);
    }
  }
  if (!lift.odd_arcs.empty()) return lift;

  Grading grading;
  for (const DoubleArc& arc : d.arcs) {
    for (std::size_t k = 0; k < arc.edges.size(); ++k) {
      grading.grades[arc.edges[k]] = static_cast<std::int64_t>(k % 2);
    }
  }

  ArrowedDaisyGraph adg;
  adg.base = g;
  for (const auto& [v, pairs] : g.pairing) {
    std::vector<HalfEdgeRef>& arrows = adg.arrows[v];
    for (const HalfEdgePair& p : pairs) {
      const std::int64_t a = grading.grades.at(p.first.edge);
      const std::int64_t b = grading.grades.at(p.second.edge);
      if (a == b) {
        throw Error("consecutive half-edges at " + v + " received equal short grades");
      }
      arrows.push_back(a == 1 ? p.first : p.second);
    }
    grading.bases[v] = 0;
  }
  lift.adg = std::move(adg);
  lift.grading = std::move(grading);
  return lift;
}

ShortGradeLift short_grade_lift(const AnyGraph& g) {
  const auto* dg = std::get_if<DaisyGraph>(&g);
  if (dg == nullptr) throw Error("expected plain DG");
  return short_grade_lift(*dg);
}

}  // namespace daisy
