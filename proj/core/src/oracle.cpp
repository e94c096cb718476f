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

#include "daisy/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <set>

#include "daisy/half_edge_index.hpp"
#include "daisy/realize.hpp"

namespace daisy {

// ---------------------------------------------------------------------------
// Oracle

namespace {

struct Term {
  int edge;
  int preferred;
};

class OracleSearch {
 public:
  explicit OracleSearch(const ArrowedDaisyGraph& g) {
    const DaisyGraph& dg = g.base;
    std::map<Id, int> number;
    for (const auto& [e, ends] : dg.edges) {
      number.emplace(e, static_cast<int>(edge_ids_.size()));
      edge_ids_.push_back(e);
    }
    touching_.resize(edge_ids_.size());
    for (const auto& [v, pairs] : dg.pairing) {
      const auto& arrows = g.arrows.at(v);
      const int vi = static_cast<int>(vertex_ids_.size());
      vertex_ids_.push_back(v);
      std::vector<Term>& terms = terms_.emplace_back();
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (const HalfEdgeRef& h : {pairs[i].first, pairs[i].second}) {
          const int e = number.at(h.edge);
          terms.push_back({e, arrows.at(i) == h ? 1 : 0});
          if (touching_[e].empty() || touching_[e].back() != vi) touching_[e].push_back(vi);
        }
      }
    }
    // Components, each listed in breadth-first order from its smallest edge.
    std::map<Id, std::vector<int>> at_vertex;
    for (const auto& [e, ends] : dg.edges) {
      at_vertex[ends.tail].push_back(number.at(e));
      if (!ends.is_loop()) at_vertex[ends.head].push_back(number.at(e));
    }
    std::vector<char> seen(edge_ids_.size(), 0);
    for (int start = 0; start < static_cast<int>(edge_ids_.size()); ++start) {
      if (seen[start]) continue;
      std::vector<int>& order = components_.emplace_back();
      seen[start] = 1;
      order.push_back(start);
      for (std::size_t k = 0; k < order.size(); ++k) {
        const Endpoints& ends = dg.edges.at(edge_ids_[order[k]]);
        for (const Id* v : {&ends.tail, &ends.head}) {
          for (int f : at_vertex[*v]) {
            if (!seen[f]) {
              seen[f] = 1;
              order.push_back(f);
            }
          }
        }
      }
    }
  }

  OracleOutcome run() {
    const auto bound = static_cast<std::int64_t>(edge_ids_.size());
    grade_.assign(edge_ids_.size(), std::nullopt);
    for (const auto& order : components_) {
      if (!search(order, 0, bound)) return {};
    }
    Grading out;
    for (std::size_t e = 0; e < edge_ids_.size(); ++e) out.grades[edge_ids_[e]] = *grade_[e];
    for (std::size_t v = 0; v < vertex_ids_.size(); ++v) {
      out.bases[vertex_ids_[v]] = *definition_holds_at(static_cast<int>(v));
    }
    return {std::move(out)};
  }

 private:
  bool search(const std::vector<int>& order, std::size_t pos, std::int64_t bound) {
    if (pos == order.size()) {
      for (int e : order) {
        for (int v : touching_[e]) {
          if (!definition_holds_at(v)) return false;
        }
      }
      return true;
    }
    const int f = order[pos];
    const std::int64_t lo = pos == 0 ? 0 : -bound;
    const std::int64_t hi = pos == 0 ? 0 : bound;
    for (std::int64_t value = lo; value <= hi; ++value) {
      grade_[f] = value;
      bool consistent = true;
      for (int v : touching_[f]) consistent = consistent && partial_consistent(v);
      if (consistent && search(order, pos + 1, bound)) return true;
    }
    grade_[f] = std::nullopt;
    return false;
  }

  // Graded half-edges at v all imply the same base number.
  bool partial_consistent(int v) const {
    std::optional<std::int64_t> base;
    for (const Term& t : terms_[v]) {
      if (!grade_[t.edge]) continue;
      const std::int64_t implied = *grade_[t.edge] - t.preferred;
      if (base && *base != implied) return false;
      base = implied;
    }
    return true;
  }

  // The grading condition at v, stated on edges: all non-preferred edges
  // share one grade a(v), all preferred edges have a(v) + 1. Returns a(v).
  std::optional<std::int64_t> definition_holds_at(int v) const {
    std::set<int> preferred;
    std::set<int> non_preferred;
    for (const Term& t : terms_[v]) (t.preferred ? preferred : non_preferred).insert(t.edge);
    if (non_preferred.empty()) return std::nullopt;
    const std::int64_t a = *grade_[*non_preferred.begin()];
    for (int e : non_preferred) {
      if (*grade_[e] != a) return std::nullopt;
    }
    for (int e : preferred) {
      if (*grade_[e] != a + 1) return std::nullopt;
    }
    return a;
  }

  std::vector<Id> edge_ids_;
  std::vector<Id> vertex_ids_;
  std::vector<std::vector<Term>> terms_;
  std::vector<std::vector<int>> touching_;
  std::vector<std::vector<int>> components_;
  std::vector<std::optional<std::int64_t>> grade_;
};

}  // namespace

OracleOutcome oracle_gradable(const ArrowedDaisyGraph& g) {
  if (g.base.edges.size() > kOracleMaxEdges) {
    throw Error("oracle refuses " + std::to_string(g.base.edges.size()) +
                " edges (limit " + std::to_string(kOracleMaxEdges) + ")");
  }
  return OracleSearch(g).run();
}

bool agree_up_to_component_shift(const DaisyGraph& g, const Grading& a,
                                 const Grading& b) {
  if (a.grades.size() != b.grades.size()) return false;
  const std::map<Id, int> component = edge_components(g);
  std::map<int, std::int64_t> shift;
  for (const auto& [e, ga] : a.grades) {
    auto bit = b.grades.find(e);
    auto cit = component.find(e);
    if (bit == b.grades.end() || cit == component.end()) return false;
    auto [sit, fresh] = shift.emplace(cit->second, bit->second - ga);
    if (!fresh && sit->second != bit->second - ga) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

using Matching = std::array<std::array<int, 2>, 3>;

// The 15 perfect matchings of {0..5}, smallest element paired first.
std::vector<Matching> six_point_matchings() {
  std::vector<Matching> out;
  for (int a = 1; a < 6; ++a) {
    std::vector<int> rest;
    for (int x = 1; x < 6; ++x) {
      if (x != a) rest.push_back(x);
    }
    for (int b = 1; b < 4; ++b) {
      std::vector<int> last;
      for (int k = 1; k < 4; ++k) {
        if (k != b) last.push_back(rest[k]);
      }
      out.push_back({{{0, a}, {rest[0], rest[b]}, {last[0], last[1]}}});
    }
  }
  return out;
}

struct Shape {
  std::vector<int> loops;
  std::vector<int> mult;  // upper triangle (i < j) row by row
};

std::string padded(char prefix, int n, int width) {
  std::string digits = std::to_string(n);
  if (static_cast<int>(digits.size()) < width) {
    digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
  }
  return prefix + digits;
}

void enumerate_shapes(const EnumerationSpec& spec, int t, std::vector<Shape>& out) {
  const int pairs = t * (t - 1) / 2;
  std::vector<int> values(static_cast<std::size_t>(t + pairs), 0);
  std::vector<int> degree(t, 0);
  std::vector<std::array<int, 2>> pair_ends;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) pair_ends.push_back({i, j});
  }

  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == values.size()) {
      if (!spec.pendant_completion &&
          std::any_of(degree.begin(), degree.end(), [](int d) { return d != 6; })) {
        return;
      }
      Shape s;
      s.loops.assign(values.begin(), values.begin() + t);
      s.mult.assign(values.begin() + t, values.end());
      out.push_back(std::move(s));
      return;
    }
    const int max_value = spec.internal_edges ? 6 : 0;
    for (int x = 0; x <= max_value; ++x) {
      if (pos < static_cast<std::size_t>(t)) {
        const int i = static_cast<int>(pos);
        if (degree[i] + 2 * x > 6) break;
        degree[i] += 2 * x;
        values[pos] = x;
        rec(pos + 1);
        degree[i] -= 2 * x;
      } else {
        const auto [i, j] = pair_ends[pos - t];
        if (degree[i] + x > 6 || degree[j] + x > 6) break;
        degree[i] += x;
        degree[j] += x;
        values[pos] = x;
        rec(pos + 1);
        degree[i] -= x;
        degree[j] -= x;
      }
    }
  };
  rec(0);
}

DaisyGraph shape_skeleton(int t, const Shape& s) {
  std::vector<int> degree(t, 0);
  int edges = 0;
  for (int i = 0; i < t; ++i) {
    degree[i] += 2 * s.loops[i];
    edges += s.loops[i];
  }
  std::size_t k = 0;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j, ++k) {
      degree[i] += s.mult[k];
      degree[j] += s.mult[k];
      edges += s.mult[k];
    }
  }
  int pendants = 0;
  for (int i = 0; i < t; ++i) pendants += 6 - degree[i];
  edges += pendants;
  const int width = std::max(2, static_cast<int>(std::to_string(edges).size()));

  DaisyGraph g;
  auto triple = [](int i) { return "t" + std::to_string(i + 1); };
  for (int i = 0; i < t; ++i) g.vertices[triple(i)] = VertexKind::kTriple;
  int next_edge = 1;
  auto add_edge = [&](const Id& a, const Id& b) {
    g.edges[padded('e', next_edge++, width)] = {a, b};
  };
  for (int i = 0; i < t; ++i) {
    for (int n = 0; n < s.loops[i]; ++n) add_edge(triple(i), triple(i));
  }
  k = 0;
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j, ++k) {
      for (int n = 0; n < s.mult[k]; ++n) add_edge(triple(i), triple(j));
    }
  }
  int next_branch = 1;
  for (int i = 0; i < t; ++i) {
    for (int n = degree[i]; n < 6; ++n) {
      const Id b = padded('b', next_branch++, width);
      g.vertices[b] = VertexKind::kBranch;
      add_edge(triple(i), b);
    }
  }
  return g;
}

}  // namespace

void for_each_instance(const EnumerationSpec& spec,
                       const std::function<void(std::size_t, const ArrowedDaisyGraph&)>& fn) {
  static const std::vector<Matching> matchings = six_point_matchings();
  std::size_t id = 0;
  auto emit = [&](const ArrowedDaisyGraph& adg) {
    const bool has_degree_one = std::any_of(
        adg.base.vertices.begin(), adg.base.vertices.end(),
        [](const auto& kv) { return kv.second != VertexKind::kTriple; });
    const int variants = spec.db_variants && has_degree_one ? 2 : 1;
    for (int variant = 0; variant < variants; ++variant) {
      ArrowedDaisyGraph inst = adg;
      if (variant == 1) {
        for (auto& [v, kind] : inst.base.vertices) {
          if (kind != VertexKind::kTriple) {
            kind = VertexKind::kDb;
            break;
          }
        }
      }
      for (std::int64_t c = 0; c <= spec.max_circles; ++c) {
        inst.base.circles = c;
        fn(id++, inst);
      }
    }
  };

  for (int t = 0; t <= spec.max_triple_vertices; ++t) {
    std::vector<Shape> shapes;
    enumerate_shapes(spec, t, shapes);
    for (const Shape& shape : shapes) {
      const DaisyGraph skeleton = shape_skeleton(t, shape);
      std::vector<Id> triples = triple_vertices(skeleton);
      std::vector<std::vector<HalfEdgeRef>> halves(triples.size());
      for (const auto& [e, ends] : skeleton.edges) {
        for (int slot = 0; slot < 2; ++slot) {
          auto it = std::find(triples.begin(), triples.end(), ends.at(slot));
          if (it != triples.end()) halves[it - triples.begin()].push_back({e, slot});
        }
      }

      std::size_t pairing_combos = 1;
      for (int i = 0; i < t; ++i) pairing_combos *= matchings.size();
      const std::size_t arrow_combos =
          spec.arrow_exhaustive ? (std::size_t{1} << (3 * t)) : 1;

      for (std::size_t pc = 0; pc < pairing_combos; ++pc) {
        DaisyGraph dg = skeleton;
        std::size_t rest = pc;
        std::vector<std::size_t> choice(t);
        for (int i = t - 1; i >= 0; --i) {
          choice[i] = rest % matchings.size();
          rest /= matchings.size();
        }
        for (int i = 0; i < t; ++i) {
          auto& pairs = dg.pairing[triples[i]];
          for (const auto& [a, b] : matchings[choice[i]]) {
            pairs.push_back({halves[i][a], halves[i][b]});
          }
        }
        for (std::size_t ac = 0; ac < arrow_combos; ++ac) {
          ArrowedDaisyGraph adg;
          adg.base = dg;
          for (int i = 0; i < t; ++i) {
            const auto& pairs = dg.pairing.at(triples[i]);
            auto& arrows = adg.arrows[triples[i]];
            for (int p = 0; p < 3; ++p) {
              const int bit = 3 * (t - 1 - i) + (2 - p);
              const bool second = ((ac >> bit) & 1U) != 0;
              arrows.push_back(second ? pairs[p].second : pairs[p].first);
            }
          }
          emit(adg);
        }
      }
    }
  }
}

std::vector<ArrowedDaisyGraph> enumerate_instances(const EnumerationSpec& spec) {
  std::vector<ArrowedDaisyGraph> out;
  for_each_instance(spec, [&](std::size_t, const ArrowedDaisyGraph& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Random instances

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  bool chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct Stub {
  Id vertex;
};

// Assembles an ADG from a list of edges over declared vertices, then draws
// pairings and arrows.
ArrowedDaisyGraph finish_random(Rng& rng, DaisyGraph g) {
  ArrowedDaisyGraph adg;
  std::map<Id, std::vector<HalfEdgeRef>> at;
  for (const auto& [e, ends] : g.edges) {
    for (int slot = 0; slot < 2; ++slot) at[ends.at(slot)].push_back({e, slot});
  }
  for (const auto& [v, kind] : g.vertices) {
    if (kind != VertexKind::kTriple) continue;
    std::vector<HalfEdgeRef> h = at[v];
    rng.shuffle(h);
    auto& pairs = g.pairing[v];
    auto& arrows = adg.arrows[v];
    for (int p = 0; p < 3; ++p) {
      pairs.push_back({h[2 * p], h[2 * p + 1]});
      arrows.push_back(rng.below(2) == 0 ? h[2 * p] : h[2 * p + 1]);
    }
  }
  adg.base = std::move(g);
  return adg;
}

int width_for(std::size_t n) { return std::max(3, static_cast<int>(std::to_string(n).size())); }

}  // namespace

ArrowedDaisyGraph random_instance(std::uint64_t seed, const RandomSpec& spec) {
  Rng rng(seed);
  const int triples = std::max(0, spec.triple_vertices);
  const int tw = width_for(static_cast<std::size_t>(triples));
  DaisyGraph g;
  g.circles = spec.circles;
  std::vector<Id> triple_ids;
  for (int i = 1; i <= triples; ++i) {
    triple_ids.push_back(padded('t', i, tw));
    g.vertices[triple_ids.back()] = VertexKind::kTriple;
  }

  std::vector<std::array<Id, 2>> edges;
  std::vector<Id> one_ids;
  auto new_degree_one = [&](std::size_t expected_total) {
    const Id id = padded('p', static_cast<int>(one_ids.size()) + 1, width_for(expected_total));
    one_ids.push_back(id);
    g.vertices[id] = rng.chance(spec.db_probability) ? VertexKind::kDb : VertexKind::kBranch;
    return id;
  };

  if (spec.topology == RandomSpec::Topology::kGeneral) {
    int ones = std::max(0, spec.degree_one_vertices);
    if (ones % 2 != 0) ++ones;
    std::vector<Id> stubs;
    for (const Id& t : triple_ids) {
      for (int k = 0; k < 6; ++k) stubs.push_back(t);
    }
    for (int k = 0; k < ones; ++k) stubs.push_back(new_degree_one(static_cast<std::size_t>(ones)));
    rng.shuffle(stubs);
    for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) edges.push_back({stubs[k], stubs[k + 1]});
  } else {
    std::vector<int> free(triples, 6);
    for (int i = 1; i < triples; ++i) {
      int parent = -1;
      if (spec.topology == RandomSpec::Topology::kChain) {
        parent = i - 1;
      } else if (rng.chance(spec.attach_probability)) {
        std::vector<int> open;
        for (int j = 0; j < i; ++j) {
          if (free[j] > 0) open.push_back(j);
        }
        if (!open.empty()) parent = open[rng.below(open.size())];
      }
      if (parent < 0) continue;
      --free[parent];
      --free[i];
      if (rng.below(2) == 0) {
        edges.push_back({triple_ids[parent], triple_ids[i]});
      } else {
        edges.push_back({triple_ids[i], triple_ids[parent]});
      }
    }
    std::size_t total_ones = 0;
    for (int f : free) total_ones += static_cast<std::size_t>(f);
    for (int i = 0; i < triples; ++i) {
      for (int k = 0; k < free[i]; ++k) {
        const Id p = new_degree_one(total_ones);
        if (rng.below(2) == 0) {
          edges.push_back({triple_ids[i], p});
        } else {
          edges.push_back({p, triple_ids[i]});
        }
      }
    }
  }

  const int ew = width_for(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    g.edges[padded('e', static_cast<int>(k) + 1, ew)] = {edges[k][0], edges[k][1]};
  }
  return finish_random(rng, std::move(g));
}

ArrowedDaisyGraph random_chain_instance(std::uint64_t seed, std::size_t edges) {
  RandomSpec spec;
  spec.topology = RandomSpec::Topology::kChain;
  spec.triple_vertices = static_cast<int>(std::max<std::size_t>(1, (edges - 1) / 5));
  return random_instance(seed, spec);
}

Path random_path(std::uint64_t seed, const ArrowedDaisyGraph& g, std::size_t steps) {
  Rng rng(seed);
  const HalfEdgeIndex ix(g);
  Path p;
  std::vector<int> starts;
  for (int e = 0; e < ix.edge_count(); ++e) {
    if (ix.is_triple(ix.vertex_of(2 * e)) || ix.is_triple(ix.vertex_of(2 * e + 1))) {
      starts.push_back(e);
    }
  }
  if (starts.empty()) {
    if (ix.edge_count() > 0) p.edges.push_back(ix.edge_id(0));
    return p;
  }
  int e = starts[rng.below(starts.size())];
  p.edges.push_back(ix.edge_id(e));
  for (std::size_t k = 0; k < steps; ++k) {
    std::vector<int> ends;
    for (int h : {2 * e, 2 * e + 1}) {
      if (ix.is_triple(ix.vertex_of(h))) ends.push_back(h);
    }
    const int v = ix.vertex_of(ends[rng.below(ends.size())]);
    const auto around = ix.incident(v);
    e = HalfEdgeIndex::edge_of(around[rng.below(around.size())]);
    p.vertices.push_back(ix.vertex_id(v));
    p.edges.push_back(ix.edge_id(e));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Census

CensusSummary run_census(const EnumerationSpec& spec,
                         const std::function<void(const CensusRow&)>& row_fn) {
  CensusSummary summary;
  for_each_instance(spec, [&](std::size_t id, const ArrowedDaisyGraph& g) {
    const GradeResult graded = grade(g);
    CensusRow row;
    row.id = id;
    row.gradable = graded.gradable();
    row.db_count = db_vertices(g.base).size();
    for (std::size_t k = 0; k < kAllManifoldClasses.size(); ++k) {
      row.realizable[k] = decide_realizable(g.base, graded, kAllManifoldClasses[k]).realizable;
    }
    if (g.base.edges.size() <= kOracleMaxEdges) {
      const OracleOutcome oracle = oracle_gradable(g);
      bool agrees = oracle.gradable() == graded.gradable();
      if (agrees && oracle.gradable()) {
        agrees = agree_up_to_component_shift(g.base, *oracle.grading, *graded.grading);
      }
      row.oracle_agrees = agrees;
      ++summary.oracle_checked;
      if (!agrees) summary.disagreements.push_back(id);
    }
    ++summary.instances;
    if (row.gradable) ++summary.gradable;
    if (row_fn) row_fn(row);
  });
  return summary;
}

void write_census_header(std::ostream& os) {
  os << "instance_id,gradable,db_count,periodic_closed,periodic_bounded,"
        "infinite_closed,infinite_bounded\n";
}

void write_census_row(std::ostream& os, const CensusRow& row) {
  os << row.id << ',' << (row.gradable ? 1 : 0) << ',' << row.db_count;
  for (bool r : row.realizable) os << ',' << (r ? 1 : 0);
  os << '\n';
}

}  // namespace daisy
