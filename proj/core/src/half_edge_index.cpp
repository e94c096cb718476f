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

#include "daisy/half_edge_index.hpp"

#include <algorithm>

namespace daisy {

namespace {

int find_sorted(const std::vector<Id>& ids, const Id& id) {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return HalfEdgeIndex::kNone;
  return static_cast<int>(it - ids.begin());
}

}  // namespace

HalfEdgeIndex::HalfEdgeIndex(const DaisyGraph& g) { build_base(g); }

HalfEdgeIndex::HalfEdgeIndex(const ArrowedDaisyGraph& g) {
  build_base(g.base);
  arrowed_ = true;
  preferred_.assign(half_edge_count(), 0);
  for (const auto& [v, arrows] : g.arrows) {
    for (const HalfEdgeRef& a : arrows) {
      const int h = half_edge(a);
      if (h == kNone || vertex_id(vertex_of(h)) != v) {
        throw Error("arrow " + to_string(a) + " does not sit at " + v);
      }
      preferred_[h] = 1;
    }
  }
}

void HalfEdgeIndex::build_base(const DaisyGraph& g) {
  vertex_ids_.reserve(g.vertices.size());
  kinds_.reserve(g.vertices.size());
  for (const auto& [v, kind] : g.vertices) {
    vertex_ids_.push_back(v);
    kinds_.push_back(kind);
  }
  edge_ids_.reserve(g.edges.size());
  vertex_of_.reserve(2 * g.edges.size());
  for (const auto& [e, ends] : g.edges) {
    edge_ids_.push_back(e);
    for (int slot = 0; slot < 2; ++slot) {
      const int v = find_vertex(ends.at(slot));
      if (v == kNone) {
        throw Error("edge " + e + " references undeclared vertex " + ends.at(slot));
      }
      vertex_of_.push_back(v);
    }
  }

  const int halves = half_edge_count();
  offsets_.assign(vertex_count() + 1, 0);
  for (int h = 0; h < halves; ++h) ++offsets_[vertex_of_[h] + 1];
  for (int v = 0; v < vertex_count(); ++v) offsets_[v + 1] += offsets_[v];
  incident_.assign(halves, kNone);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (int h = 0; h < halves; ++h) incident_[fill[vertex_of_[h]]++] = h;

  partner_.assign(halves, kNone);
  pair_index_.assign(halves, kNone);
  for (const auto& [vid, pairs] : g.pairing) {
    const int v = find_vertex(vid);
    if (v == kNone) throw Error("pairs declared at undeclared vertex " + vid);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const int a = half_edge(pairs[i].first);
      const int b = half_edge(pairs[i].second);
      if (a == kNone || b == kNone || vertex_of_[a] != v || vertex_of_[b] != v) {
        throw Error("pair at " + vid + " names a half-edge not incident to it");
      }
      partner_[a] = b;
      partner_[b] = a;
      pair_index_[a] = pair_index_[b] = static_cast<int>(i);
    }
  }
}

int HalfEdgeIndex::find_vertex(const Id& id) const {
  return find_sorted(vertex_ids_, id);
}

int HalfEdgeIndex::find_edge(const Id& id) const {
  return find_sorted(edge_ids_, id);
}

int HalfEdgeIndex::half_edge(const HalfEdgeRef& h) const {
  if (h.slot != 0 && h.slot != 1) return kNone;
  const int e = find_edge(h.edge);
  return e == kNone ? kNone : 2 * e + h.slot;
}

}  // namespace daisy
