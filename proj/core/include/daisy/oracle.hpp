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

// Verification backbone: an exhaustive-search gradability oracle that works
// straight from the definition of a grading, a deterministic enumerator of
// small labeled ADGs, seeded random generators, and the census report that
// ties them together.

#ifndef DAISY_ORACLE_HPP_
#define DAISY_ORACLE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "daisy/grading.hpp"
#include "daisy/model.hpp"

namespace daisy {

// ---------------------------------------------------------------------------
// Exhaustive oracle

// Largest edge count the oracle accepts.
inline constexpr std::size_t kOracleMaxEdges = 12;

struct OracleOutcome {
  std::optional<Grading> grading;

  bool gradable() const { return grading.has_value(); }
};

// Searches all grade assignments with each component's smallest edge pinned
// to 0 and every other grade in [-|E|, |E|], checking the grading equations
// at every triple vertex. Any grading shifted to put the pinned edge at 0
// stays within graph distance of it, so the bound loses nothing. Partial
// assignments that already break an equation are pruned; the result is the
// same as a full sweep of the box.
//
// Shares no code with grade(). Throws Error if g has more than
// kOracleMaxEdges edges.
OracleOutcome oracle_gradable(const ArrowedDaisyGraph& g);

// True iff a and b grade the same edges and, on each connected component of
// g's graph part, differ by one constant.
bool agree_up_to_component_shift(const DaisyGraph& g, const Grading& a,
                                 const Grading& b);

// ---------------------------------------------------------------------------
// Enumeration

struct EnumerationSpec {
  int max_triple_vertices = 1;
  // Fill every free triple-vertex slot with an edge to a fresh branch vertex.
  // Without it only graphs whose triple vertices are saturated by loops and
  // internal edges are produced.
  bool pendant_completion = true;
  // Allow loops and edges between triple vertices.
  bool internal_edges = true;
  // All 2^3 arrow choices per triple vertex; otherwise each pair prefers its
  // first half-edge.
  bool arrow_exhaustive = true;
  // Also emit a copy of every instance with a pendant whose smallest
  // degree-1 vertex is marked DB.
  bool db_variants = false;
  std::int64_t max_circles = 0;
};

// Calls fn(id, instance) for every instance of the spec space, ids counting
// up from 0, in a fixed order:
//   number of triple vertices t = 0..max
//     multigraph shape (loop counts and edge multiplicities between triple
//     vertices, lexicographic)
//       pairing of each triple vertex's six half-edges (15 per vertex)
//         arrow choice (8 per vertex)
//           DB variant, then double-circle count
// Triple vertices are t1..tN, degree-1 vertices b01.., edges e01.. in the
// order loops, internal edges, pendants.
void for_each_instance(const EnumerationSpec& spec,
                       const std::function<void(std::size_t, const ArrowedDaisyGraph&)>& fn);

std::vector<ArrowedDaisyGraph> enumerate_instances(const EnumerationSpec& spec);

// ---------------------------------------------------------------------------
// Random instances

struct RandomSpec {
  enum class Topology {
    kGeneral,  // random matching of all half-edge stubs
    kForest,   // triple vertices joined in a random forest, rest pendant
    kChain,    // triple vertices in a path, rest pendant
  };

  Topology topology = Topology::kGeneral;
  int triple_vertices = 3;
  // kGeneral only: number of degree-1 vertices (rounded up to even).
  int degree_one_vertices = 4;
  // Probability that a degree-1 vertex is a DB vertex.
  double db_probability = 0.0;
  // kForest only: probability that a new triple vertex attaches to the tree
  // built so far instead of starting a new one.
  double attach_probability = 0.8;
  std::int64_t circles = 0;
};

// Builds a valid ADG from the seed. Procedure: lay out the degree-1 and
// triple vertices, join half-edge stubs according to the topology, then give
// every triple vertex a uniform random pairing (shuffle its six half-edges
// and pair neighbours) and a fair coin for each arrow. Every random draw
// comes from std::mt19937_64 seeded with `seed`, reduced by rejection
// sampling, so the output is identical across platforms.
ArrowedDaisyGraph random_instance(std::uint64_t seed, const RandomSpec& spec = {});

// A chain instance with about `edges` edges (5k + 1 for k triple vertices).
ArrowedDaisyGraph random_chain_instance(std::uint64_t seed, std::size_t edges);

// A random walk e0, v0, e1, ... of `steps` vertex crossings starting at a
// random edge that meets a triple vertex. Returns a single-edge path if no
// edge meets one.
Path random_path(std::uint64_t seed, const ArrowedDaisyGraph& g, std::size_t steps);

// ---------------------------------------------------------------------------
// Census

struct CensusRow {
  std::size_t id = 0;
  bool gradable = false;
  std::size_t db_count = 0;
  std::array<bool, 4> realizable{};  // kAllManifoldClasses order
  // Oracle verdict agreed with grade(); nullopt when the instance is too
  // large for the oracle.
  std::optional<bool> oracle_agrees;
};

struct CensusSummary {
  std::size_t instances = 0;
  std::size_t gradable = 0;
  std::size_t oracle_checked = 0;
  std::vector<std::size_t> disagreements;  // instance ids
};

CensusSummary run_census(const EnumerationSpec& spec,
                         const std::function<void(const CensusRow&)>& row_fn);

// "instance_id,gradable,db_count,periodic_closed,periodic_bounded,
// infinite_closed,infinite_bounded", booleans as 0/1.
void write_census_header(std::ostream& os);
void write_census_row(std::ostream& os, const CensusRow& row);

}  // namespace daisy

#endif  // DAISY_ORACLE_HPP_
