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

// Value types for daisy graphs (DG), arrowed daisy graphs (ADG) and ordered
// daisy graphs (ODG), the combinatorial shadow of the intersection graph of
// an oriented generic surface.
//
// A daisy graph is a multigraph whose vertices have degree 6 (triple values)
// or degree 1 (branch values and DB values), plus a bare count of double
// circles. At every triple vertex the six incident half-edges are divided
// into three "consecutive" pairs. An ADG additionally selects one preferred
// half-edge in every pair; an ODG additionally fixes, up to cyclic rotation,
// an ordering of the three preferred half-edges at every triple vertex.
//
// All identifiers are opaque strings compared by code point. Every type here
// is a plain value; nothing is validated on construction. Call validate() to
// check the structural invariants.

#ifndef DAISY_MODEL_HPP_
#define DAISY_MODEL_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace daisy {

using Id = std::string;

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class VertexKind { kTriple, kBranch, kDb };

// "triple", "branch" or "db".
const char* to_string(VertexKind kind);

// One end of an edge. Slot 0 is the first declared endpoint, slot 1 the
// second, so the two ends of a loop stay distinguishable.
struct HalfEdgeRef {
  Id edge;
  int slot = 0;

  friend auto operator<=>(const HalfEdgeRef&, const HalfEdgeRef&) = default;
  friend bool operator==(const HalfEdgeRef&, const HalfEdgeRef&) = default;
};

// "e1.0"
std::string to_string(const HalfEdgeRef& h);
std::ostream& operator<<(std::ostream& os, const HalfEdgeRef& h);

// An unordered pair of consecutive half-edges at a triple vertex. The member
// order carries no meaning.
struct HalfEdgePair {
  HalfEdgeRef first;
  HalfEdgeRef second;

  bool contains(const HalfEdgeRef& h) const { return first == h || second == h; }
  friend bool operator==(const HalfEdgePair&, const HalfEdgePair&) = default;
};

struct Endpoints {
  Id tail;  // slot 0
  Id head;  // slot 1

  const Id& at(int slot) const { return slot == 0 ? tail : head; }
  bool is_loop() const { return tail == head; }
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

struct DaisyGraph {
  std::map<Id, VertexKind> vertices;
  std::map<Id, Endpoints> edges;
  std::int64_t circles = 0;
  // Triple vertex -> its three consecutive pairs. Pair identity is the
  // position in this vector.
  std::map<Id, std::vector<HalfEdgePair>> pairing;

  friend bool operator==(const DaisyGraph&, const DaisyGraph&) = default;
};

struct ArrowedDaisyGraph {
  DaisyGraph base;
  // arrows.at(v)[i] is the preferred half-edge of base.pairing.at(v)[i].
  std::map<Id, std::vector<HalfEdgeRef>> arrows;

  friend bool operator==(const ArrowedDaisyGraph&,
                         const ArrowedDaisyGraph&) = default;
};

using PreferredOrder = std::array<HalfEdgeRef, 3>;

struct OrderedDaisyGraph {
  ArrowedDaisyGraph base;
  // Ordering of the three preferred half-edges at each triple vertex. Two
  // orderings that differ by a cyclic rotation describe the same ODG.
  std::map<Id, PreferredOrder> ordering;

  friend bool operator==(const OrderedDaisyGraph&,
                         const OrderedDaisyGraph&) = default;
};

// Whichever of the three kinds a document declared.
using AnyGraph = std::variant<DaisyGraph, ArrowedDaisyGraph, OrderedDaisyGraph>;

// The underlying plain DG of any kind.
const DaisyGraph& plain(const AnyGraph& g);

// An alternating walk e0, v0, e1, v1, ..., v(r-1), er through triple vertices.
struct Path {
  std::vector<Id> edges;
  std::vector<Id> vertices;  // always edges.size() - 1 entries
};

// ---------------------------------------------------------------------------
// Validation

// The element a violation is about. Used to trace violations back to the
// input line that declared the element.
struct Subject {
  enum class Kind { kGraph, kVertex, kEdge, kPair, kOrder };
  Kind kind = Kind::kGraph;
  Id id;              // vertex id, edge id, or the vertex owning the pair/order
  int pair_index = -1;

  friend bool operator==(const Subject&, const Subject&) = default;
};

struct Violation {
  std::string code;  // stable kebab-case identifier, e.g. "pair-not-partition"
  Subject subject;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  // True if some violation carries the given code.
  bool has(std::string_view code) const;
};

ValidationReport validate(const DaisyGraph& g);
ValidationReport validate(const ArrowedDaisyGraph& g);
ValidationReport validate(const OrderedDaisyGraph& g);
ValidationReport validate(const AnyGraph& g);

// Throws Error listing the violations unless validate(g) is ok.
template <typename Graph>
void require_valid(const Graph& g);

// ---------------------------------------------------------------------------
// Queries

enum class Preference { kPreferred, kNonPreferred };

// Whether h is the arrow of its pair. Throws Error if h does not sit at a
// triple vertex ("no preference at degree-1 vertex") or is unknown.
Preference preferred_status(const ArrowedDaisyGraph& g, const HalfEdgeRef& h);

// Triple vertex ids in lexicographic order.
std::vector<Id> triple_vertices(const DaisyGraph& g);
// Vertices of kind kDb in lexicographic order.
std::vector<Id> db_vertices(const DaisyGraph& g);

// ---------------------------------------------------------------------------
// ODG ordering classes

// Rotates every ordering so that its smallest half-edge comes first.
OrderedDaisyGraph odg_canonicalize(const OrderedDaisyGraph& o);

// True iff at every triple vertex the orderings differ by an even
// permutation. Throws Error if the underlying ADGs differ.
bool odg_orders_equal(const OrderedDaisyGraph& a, const OrderedDaisyGraph& b);

// ---------------------------------------------------------------------------
// Euler characteristic

// An exact value n/2.
struct HalfInteger {
  std::int64_t twice = 0;

  bool is_integer() const { return twice % 2 == 0; }
  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
};

// "3" or "7/2" or "-1/2".
std::string to_string(HalfInteger x);

// chi(i(F)) = chi(F) + T + B/2 for a generic map i of a surface F with T
// triple values and B branch values.
HalfInteger euler_char_of_image(std::int64_t chi_f, std::int64_t triple_count,
                                std::int64_t branch_count);

}  // namespace daisy

#endif  // DAISY_MODEL_HPP_
