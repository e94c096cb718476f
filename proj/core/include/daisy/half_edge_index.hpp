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

// Integer-indexed view of a daisy graph used by the traversal algorithms.
//
// Edges and vertices are numbered in lexicographic id order. Half-edge h of
// edge e is 2 * e + slot, so h ^ 1 is the other end of the same edge.

#ifndef DAISY_HALF_EDGE_INDEX_HPP_
#define DAISY_HALF_EDGE_INDEX_HPP_

#include <span>
#include <vector>

#include "daisy/model.hpp"

namespace daisy {

class HalfEdgeIndex {
 public:
  static constexpr int kNone = -1;

  // Throws Error if the pairing refers to unknown edges or vertices. Does not
  // run the full validate(); callers are expected to pass valid graphs.
  explicit HalfEdgeIndex(const DaisyGraph& g);
  explicit HalfEdgeIndex(const ArrowedDaisyGraph& g);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edge_ids_.size()); }
  int half_edge_count() const { return 2 * edge_count(); }

  const Id& vertex_id(int v) const { return vertex_ids_[v]; }
  const Id& edge_id(int e) const { return edge_ids_[e]; }
  VertexKind kind(int v) const { return kinds_[v]; }
  bool is_triple(int v) const { return kinds_[v] == VertexKind::kTriple; }

  // kNone if the id is unknown.
  int find_vertex(const Id& id) const;
  int find_edge(const Id& id) const;

  static int edge_of(int h) { return h >> 1; }
  static int slot_of(int h) { return h & 1; }
  static int opposite(int h) { return h ^ 1; }
  HalfEdgeRef ref(int h) const { return {edge_ids_[edge_of(h)], slot_of(h)}; }
  // kNone if unknown.
  int half_edge(const HalfEdgeRef& h) const;

  int vertex_of(int h) const { return vertex_of_[h]; }
  // The other half-edge of h's consecutive pair; kNone at degree-1 vertices.
  int partner(int h) const { return partner_[h]; }
  // Position of h's pair in the vertex's pairing; kNone at degree-1 vertices.
  int pair_index(int h) const { return pair_index_[h]; }

  bool has_arrows() const { return arrowed_; }
  bool preferred(int h) const { return preferred_[h] != 0; }

  // Half-edges at v in increasing order.
  std::span<const int> incident(int v) const {
    return {incident_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }

 private:
  void build_base(const DaisyGraph& g);

  std::vector<Id> vertex_ids_;
  std::vector<VertexKind> kinds_;
  std::vector<Id> edge_ids_;
  std::vector<int> vertex_of_;
  std::vector<int> partner_;
  std::vector<int> pair_index_;
  bool arrowed_ = false;
  std::vector<char> preferred_;
  std::vector<int> offsets_;
  std::vector<int> incident_;
};

}  // namespace daisy

#endif  // DAISY_HALF_EDGE_INDEX_HPP_
