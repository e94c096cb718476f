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

#include "daisy/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace daisy {

const char* to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::kTriple:
      return "triple";
    case VertexKind::kBranch:
      return "branch";
    case VertexKind::kDb:
      return "db";
  }
  return "?";
}

std::string to_string(const HalfEdgeRef& h) {
  return h.edge + "." + std::to_string(h.slot);
}

std::ostream& operator<<(std::ostream& os, const HalfEdgeRef& h) {
  return os << to_string(h);
}

bool ValidationReport::has(std::string_view code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

namespace {

Subject graph_subject() { return {}; }
Subject vertex_subject(const Id& v) { return {Subject::Kind::kVertex, v, -1}; }
Subject edge_subject(const Id& e) { return {Subject::Kind::kEdge, e, -1}; }
Subject pair_subject(const Id& v, int i) { return {Subject::Kind::kPair, v, i}; }
Subject order_subject(const Id& v) { return {Subject::Kind::kOrder, v, -1}; }

void add(ValidationReport& r, std::string code, Subject subject,
         std::string message) {
  r.violations.push_back({std::move(code), std::move(subject), std::move(message)});
}

bool is_triple(const DaisyGraph& g, const Id& v) {
  auto it = g.vertices.find(v);
  return it != g.vertices.end() && it->second == VertexKind::kTriple;
}

// Half-edges incident to each vertex, in (edge, slot) order.
std::map<Id, std::vector<HalfEdgeRef>> incident_half_edges(const DaisyGraph& g) {
  std::map<Id, std::vector<HalfEdgeRef>> incident;
  for (const auto& [e, ends] : g.edges) {
    for (int slot = 0; slot < 2; ++slot) {
      incident[ends.at(slot)].push_back({e, slot});
    }
  }
  return incident;
}

bool half_edge_exists(const DaisyGraph& g, const HalfEdgeRef& h) {
  return (h.slot == 0 || h.slot == 1) && g.edges.count(h.edge) > 0;
}

void validate_into(const DaisyGraph& g, ValidationReport& r) {
  if (g.circles < 0) {
    add(r, "negative-circles", graph_subject(),
        "double-circle count " + std::to_string(g.circles) + " is negative");
  }
  for (const auto& [e, ends] : g.edges) {
    for (int slot = 0; slot < 2; ++slot) {
      if (g.vertices.count(ends.at(slot)) == 0) {
        add(r, "unknown-endpoint", edge_subject(e),
            "edge " + e + " references undeclared vertex " + ends.at(slot));
      }
    }
  }

  const auto incident = incident_half_edges(g);
  for (const auto& [v, kind] : g.vertices) {
    auto it = incident.find(v);
    const std::size_t degree = it == incident.end() ? 0 : it->second.size();
    const std::size_t want = kind == VertexKind::kTriple ? 6 : 1;
    if (degree != want) {
      add(r, "degree", vertex_subject(v),
          std::string(to_string(kind)) + " vertex " + v + " has degree " +
              std::to_string(degree) + ", expected " + std::to_string(want));
    }
  }

  for (const auto& [v, pairs] : g.pairing) {
    if (!is_triple(g, v)) {
      add(r, "pairing-on-non-triple", vertex_subject(v),
          "pairs declared at " + v + ", which is not a triple vertex");
    }
  }

  for (const auto& [v, kind] : g.vertices) {
    if (kind != VertexKind::kTriple) continue;
    auto pit = g.pairing.find(v);
    if (pit == g.pairing.end()) {
      add(r, "missing-pairing", vertex_subject(v),
          "triple vertex " + v + " has no consecutive pairs");
      continue;
    }
    const auto& pairs = pit->second;
    if (pairs.size() != 3) {
      add(r, "pair-count", vertex_subject(v),
          "triple vertex " + v + " has " + std::to_string(pairs.size()) +
              " pairs, expected 3");
    }
    std::map<HalfEdgeRef, int> seen;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const int index = static_cast<int>(i);
      for (const HalfEdgeRef* h : {&pairs[i].first, &pairs[i].second}) {
        if (!half_edge_exists(g, *h)) {
          add(r, "unknown-half-edge", pair_subject(v, index),
              "pair at " + v + " names unknown half-edge " + to_string(*h));
          continue;
        }
        if (g.edges.at(h->edge).at(h->slot) != v) {
          add(r, "half-edge-not-at-vertex", pair_subject(v, index),
              "half-edge " + to_string(*h) + " is not incident to " + v);
          continue;
        }
        if (++seen[*h] == 2) {
          add(r, "pair-not-partition", pair_subject(v, index),
              "half-edge " + to_string(*h) + " appears in more than one pair slot at " +
                  v);
        }
      }
    }
    if (auto it = incident.find(v); it != incident.end()) {
      for (const HalfEdgeRef& h : it->second) {
        if (seen.count(h) == 0) {
          add(r, "pair-not-partition", vertex_subject(v),
              "half-edge " + to_string(h) + " at " + v + " is in no pair");
        }
      }
    }
  }
}

// Arrow checks; returns the set of triple vertices whose arrows are sound.
std::set<Id> validate_arrows_into(const ArrowedDaisyGraph& g,
                                  ValidationReport& r) {
  std::set<Id> sound;
  for (const auto& [v, arrows] : g.arrows) {
    if (!is_triple(g.base, v)) {
      add(r, "arrow-on-non-triple", vertex_subject(v),
          "arrows declared at " + v + ", which is not a triple vertex");
    }
  }
  for (const auto& [v, pairs] : g.base.pairing) {
    if (!is_triple(g.base, v)) continue;
    auto ait = g.arrows.find(v);
    if (ait == g.arrows.end()) {
      add(r, "missing-arrows", vertex_subject(v),
          "triple vertex " + v + " has no preferred half-edges");
      continue;
    }
    const auto& arrows = ait->second;
    if (arrows.size() != pairs.size()) {
      add(r, "arrow-count", vertex_subject(v),
          "triple vertex " + v + " has " + std::to_string(arrows.size()) +
              " arrows for " + std::to_string(pairs.size()) + " pairs");
      continue;
    }
    bool ok = true;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!pairs[i].contains(arrows[i])) {
        ok = false;
        add(r, "arrow-outside-pair", pair_subject(v, static_cast<int>(i)),
            "preferred half-edge " + to_string(arrows[i]) + " at " + v +
                " is not a member of its pair");
      }
    }
    if (ok) sound.insert(v);
  }
  return sound;
}

}  // namespace

ValidationReport validate(const DaisyGraph& g) {
  ValidationReport r;
  validate_into(g, r);
  return r;
}

ValidationReport validate(const ArrowedDaisyGraph& g) {
  ValidationReport r;
  validate_into(g.base, r);
  validate_arrows_into(g, r);
  return r;
}

ValidationReport validate(const OrderedDaisyGraph& o) {
  ValidationReport r;
  validate_into(o.base.base, r);
  const std::set<Id> sound = validate_arrows_into(o.base, r);
  const DaisyGraph& g = o.base.base;
  for (const auto& [v, order] : o.ordering) {
    if (!is_triple(g, v)) {
      add(r, "order-on-non-triple", order_subject(v),
          "ordering declared at " + v + ", which is not a triple vertex");
    }
  }
  for (const auto& [v, kind] : g.vertices) {
    if (kind != VertexKind::kTriple) continue;
    auto oit = o.ordering.find(v);
    if (oit == o.ordering.end()) {
      add(r, "missing-order", vertex_subject(v),
          "triple vertex " + v + " has no ordering of its preferred half-edges");
      continue;
    }
    if (sound.count(v) == 0) continue;
    std::vector<HalfEdgeRef> want = o.base.arrows.at(v);
    std::vector<HalfEdgeRef> got(oit->second.begin(), oit->second.end());
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got) {
      add(r, "order-mismatch", order_subject(v),
          "ordering at " + v + " does not list each preferred half-edge once");
    }
  }
  return r;
}

ValidationReport validate(const AnyGraph& g) {
  return std::visit([](const auto& x) { return validate(x); }, g);
}

const DaisyGraph& plain(const AnyGraph& g) {
  if (const auto* dg = std::get_if<DaisyGraph>(&g)) return *dg;
  if (const auto* adg = std::get_if<ArrowedDaisyGraph>(&g)) return adg->base;
  return std::get<OrderedDaisyGraph>(g).base.base;
}

template <typename Graph>
void require_valid(const Graph& g) {
  const ValidationReport r = validate(g);
  if (r.ok()) return;
  std::ostringstream os;
  os << "invalid daisy graph:";
  for (const Violation& v : r.violations) os << "\n  " << v.code << ": " << v.message;
  throw Error(os.str());
}

template void require_valid(const DaisyGraph&);
template void require_valid(const ArrowedDaisyGraph&);
template void require_valid(const OrderedDaisyGraph&);
template void require_valid(const AnyGraph&);

Preference preferred_status(const ArrowedDaisyGraph& g, const HalfEdgeRef& h) {
  auto eit = g.base.edges.find(h.edge);
  if (eit == g.base.edges.end() || (h.slot != 0 && h.slot != 1)) {
    throw Error("unknown half-edge " + to_string(h));
  }
  const Id& v = eit->second.at(h.slot);
  auto vit = g.base.vertices.find(v);
  if (vit == g.base.vertices.end()) {
    throw Error("half-edge " + to_string(h) + " ends at undeclared vertex " + v);
  }
  if (vit->second != VertexKind::kTriple) {
    throw Error("no preference at degree-1 vertex " + v);
  }
  const auto& pairs = g.base.pairing.at(v);
  const auto& arrows = g.arrows.at(v);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].contains(h)) {
      return arrows.at(i) == h ? Preference::kPreferred : Preference::kNonPreferred;
    }
  }
  throw Error("half-edge " + to_string(h) + " is in no pair at " + v);
}

std::vector<Id> triple_vertices(const DaisyGraph& g) {
  std::vector<Id> out;
  for (const auto& [v, kind] : g.vertices) {
    if (kind == VertexKind::kTriple) out.push_back(v);
  }
  return out;
}

std::vector<Id> db_vertices(const DaisyGraph& g) {
  std::vector<Id> out;
  for (const auto& [v, kind] : g.vertices) {
    if (kind == VertexKind::kDb) out.push_back(v);
  }
  return out;
}

namespace {

PreferredOrder rotate_smallest_first(PreferredOrder order) {
  auto smallest = std::min_element(order.begin(), order.end());
  std::rotate(order.begin(), smallest, order.end());
  return order;
}

}  // namespace

OrderedDaisyGraph odg_canonicalize(const OrderedDaisyGraph& o) {
  OrderedDaisyGraph out = o;
  for (auto& [v, order] : out.ordering) order = rotate_smallest_first(order);
  return out;
}

bool odg_orders_equal(const OrderedDaisyGraph& a, const OrderedDaisyGraph& b) {
  if (!(a.base == b.base)) {
    throw Error("orderings compared over different arrowed daisy graphs");
  }
  if (a.ordering.size() != b.ordering.size()) return false;
  for (const auto& [v, order] : a.ordering) {
    auto it = b.ordering.find(v);
    if (it == b.ordering.end()) return false;
    if (rotate_smallest_first(order) != rotate_smallest_first(it->second)) {
      return false;
    }
  }
  return true;
}

std::string to_string(HalfInteger x) {
  if (x.is_integer()) return std::to_string(x.twice / 2);
  return std::to_string(x.twice) + "/2";
}

HalfInteger euler_char_of_image(std::int64_t chi_f, std::int64_t triple_count,
                                std::int64_t branch_count) {
  return HalfInteger{2 * chi_f + 2 * triple_count + branch_count};
}

}  // namespace daisy
