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

#include "daisy/grading.hpp"

#include <numeric>

namespace daisy {

const char* to_string(NotGradable::Reason reason) {
  switch (reason) {
    case NotGradable::Reason::kObstructingLoop:
      return "obstructing-loop";
    case NotGradable::Reason::kConflict:
      return "conflict";
  }
  return "?";
}

namespace {

bool is_obstructing_loop(const HalfEdgeIndex& ix, int e) {
  const int h0 = 2 * e;
  const int h1 = h0 + 1;
  return ix.vertex_of(h0) == ix.vertex_of(h1) && ix.is_triple(ix.vertex_of(h0)) &&
         ix.preferred(h0) != ix.preferred(h1);
}

int first_obstructing_loop(const HalfEdgeIndex& ix) {
  for (int e = 0; e < ix.edge_count(); ++e) {
    if (is_obstructing_loop(ix, e)) return e;
  }
  return HalfEdgeIndex::kNone;
}

// Preferred status of edge e at vertex v, assuming no obstructing loops.
// Returns kNone if e does not meet v.
int edge_status_at(const HalfEdgeIndex& ix, int e, int v) {
  for (int h : {2 * e, 2 * e + 1}) {
    if (ix.vertex_of(h) == v) return ix.preferred(h) ? 1 : 0;
  }
  return HalfEdgeIndex::kNone;
}

int delta_at(const HalfEdgeIndex& ix, int e, int v, int f) {
  if (v == HalfEdgeIndex::kNone || !ix.is_triple(v)) {
    throw Error("grading difference needs a triple vertex");
  }
  const int se = edge_status_at(ix, e, v);
  const int sf = edge_status_at(ix, f, v);
  if (se == HalfEdgeIndex::kNone || sf == HalfEdgeIndex::kNone) {
    throw Error("edges " + ix.edge_id(e) + " and " + ix.edge_id(f) +
                " do not both meet " + ix.vertex_id(v));
  }
  return sf - se;
}

void require_no_obstructing_loop(const HalfEdgeIndex& ix) {
  const int loop = first_obstructing_loop(ix);
  if (loop != HalfEdgeIndex::kNone) {
    throw Error("undefined preference: grade-obstructing loop " + ix.edge_id(loop));
  }
}

int require_edge(const HalfEdgeIndex& ix, const Id& id) {
  const int e = ix.find_edge(id);
  if (e == HalfEdgeIndex::kNone) throw Error("unknown edge " + id);
  return e;
}

}  // namespace

std::vector<Id> grade_obstructing_loops(const ArrowedDaisyGraph& g) {
  const HalfEdgeIndex ix(g);
  std::vector<Id> loops;
  for (int e = 0; e < ix.edge_count(); ++e) {
    if (is_obstructing_loop(ix, e)) loops.push_back(ix.edge_id(e));
  }
  return loops;
}

int delta_g(const ArrowedDaisyGraph& g, const Id& e, const Id& v, const Id& f) {
  const HalfEdgeIndex ix(g);
  require_no_obstructing_loop(ix);
  return delta_at(ix, require_edge(ix, e), ix.find_vertex(v), require_edge(ix, f));
}

std::int64_t path_grading_difference(const ArrowedDaisyGraph& g, const Path& p) {
  if (p.edges.empty() || p.vertices.size() + 1 != p.edges.size()) {
    throw Error("a path needs r + 1 edges and r vertices");
  }
  const HalfEdgeIndex ix(g);
  require_no_obstructing_loop(ix);
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < p.vertices.size(); ++k) {
    sum += delta_at(ix, require_edge(ix, p.edges[k]), ix.find_vertex(p.vertices[k]),
                    require_edge(ix, p.edges[k + 1]));
  }
  return sum;
}

GradeResult grade(const ArrowedDaisyGraph& g, GradeStats* stats) {
  return grade(HalfEdgeIndex(g), stats);
}

GradeResult grade(const HalfEdgeIndex& ix, GradeStats* stats) {
  if (!ix.has_arrows()) throw Error("grading needs an arrowed daisy graph");
  std::size_t visits = 0;
  GradeResult result;
  auto finish = [&](GradeResult r) {
    if (stats != nullptr) stats->half_edge_visits = visits;
    return r;
  };

  const int edges = ix.edge_count();
  for (int e = 0; e < edges; ++e) {
    visits += 2;
    if (is_obstructing_loop(ix, e)) {
      NotGradable fail;
      fail.reason = NotGradable::Reason::kObstructingLoop;
      fail.edge = ix.edge_id(e);
      fail.vertex = ix.vertex_id(ix.vertex_of(2 * e));
      result.failure = fail;
      return finish(std::move(result));
    }
  }

  std::vector<std::int64_t> grade_of(edges, 0);
  std::vector<char> graded(edges, 0);
  std::vector<std::int64_t> base(ix.vertex_count(), 0);
  std::vector<char> reached(ix.vertex_count(), 0);
  std::vector<int> queue;
  queue.reserve(ix.vertex_count());
  std::optional<NotGradable> conflict;

  // Arrival at the far end h of a freshly graded edge.
  auto arrive = [&](int h) {
    ++visits;
    const int v = ix.vertex_of(h);
    if (!ix.is_triple(v)) return;
    const std::int64_t g = grade_of[HalfEdgeIndex::edge_of(h)];
    const std::int64_t implied = g - (ix.preferred(h) ? 1 : 0);
    if (!reached[v]) {
      reached[v] = 1;
      base[v] = implied;
      queue.push_back(v);
    } else if (base[v] != implied) {
      NotGradable fail;
      fail.edge = ix.edge_id(HalfEdgeIndex::edge_of(h));
      fail.vertex = ix.vertex_id(v);
      fail.assigned = g;
      fail.required = base[v] + (ix.preferred(h) ? 1 : 0);
      conflict = fail;
    }
  };

  for (int start = 0; start < edges && !conflict; ++start) {
    if (graded[start]) continue;
    graded[start] = 1;
    grade_of[start] = 0;
    arrive(2 * start);
    if (!conflict) arrive(2 * start + 1);
    for (std::size_t head = 0; head < queue.size() && !conflict; ++head) {
      const int v = queue[head];
      for (int h : ix.incident(v)) {
        ++visits;
        const int f = HalfEdgeIndex::edge_of(h);
        const std::int64_t want = base[v] + (ix.preferred(h) ? 1 : 0);
        if (!graded[f]) {
          graded[f] = 1;
          grade_of[f] = want;
          arrive(HalfEdgeIndex::opposite(h));
        } else if (grade_of[f] != want) {
          NotGradable fail;
          fail.edge = ix.edge_id(f);
          fail.vertex = ix.vertex_id(v);
          fail.assigned = grade_of[f];
          fail.required = want;
          conflict = fail;
        }
        if (conflict) break;
      }
    }
    queue.clear();
  }

  if (conflict) {
    result.failure = std::move(conflict);
    return finish(std::move(result));
  }

  Grading out;
  for (int e = 0; e < edges; ++e) {
    out.grades.emplace_hint(out.grades.end(), ix.edge_id(e), grade_of[e]);
  }
  for (int v = 0; v < ix.vertex_count(); ++v) {
    if (ix.is_triple(v)) out.bases.emplace_hint(out.bases.end(), ix.vertex_id(v), base[v]);
  }
  result.grading = std::move(out);
  return finish(std::move(result));
}

ValidationReport validate_grading(const ArrowedDaisyGraph& g, const Grading& gr) {
  ValidationReport r;
  auto add = [&](std::string code, Subject subject, std::string message) {
    r.violations.push_back({std::move(code), std::move(subject), std::move(message)});
  };

  for (const auto& [e, ends] : g.base.edges) {
    if (gr.grades.count(e) == 0) {
      add("ungraded-edge", {Subject::Kind::kEdge, e, -1}, "edge " + e + " has no grade");
    }
  }
  for (const auto& [e, value] : gr.grades) {
    if (g.base.edges.count(e) == 0) {
      add("unknown-edge", {Subject::Kind::kEdge, e, -1},
          "grade given for unknown edge " + e);
    }
  }
  for (const auto& [v, value] : gr.bases) {
    auto it = g.base.vertices.find(v);
    if (it == g.base.vertices.end() || it->second != VertexKind::kTriple) {
      add("unknown-base", {Subject::Kind::kVertex, v, -1},
          "base number given for non-triple vertex " + v);
    }
  }

  for (const auto& [v, pairs] : g.base.pairing) {
    auto bit = gr.bases.find(v);
    if (bit == gr.bases.end()) {
      add("missing-base", {Subject::Kind::kVertex, v, -1},
          "triple vertex " + v + " has no base number");
      continue;
    }
    auto ait = g.arrows.find(v);
    if (ait == g.arrows.end()) continue;
    for (std::size_t i = 0; i < pairs.size() && i < ait->second.size(); ++i) {
      for (const HalfEdgeRef& h : {pairs[i].first, pairs[i].second}) {
        auto git = gr.grades.find(h.edge);
        if (git == gr.grades.end()) continue;
        const bool preferred = ait->second[i] == h;
        const std::int64_t want = bit->second + (preferred ? 1 : 0);
        if (git->second != want) {
          add("grade-equation", {Subject::Kind::kVertex, v, -1},
              "at " + v + " edge " + h.edge + " is " +
                  (preferred ? "preferred" : "non-preferred") + " and needs grade " +
                  std::to_string(want) + ", has " + std::to_string(git->second));
        }
      }
    }
  }
  return r;
}

std::map<Id, int> edge_components(const DaisyGraph& g) {
  const HalfEdgeIndex ix(g);
  std::vector<int> parent(ix.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < ix.edge_count(); ++e) {
    parent[find(ix.vertex_of(2 * e))] = find(ix.vertex_of(2 * e + 1));
  }
  std::map<int, int> numbering;
  std::map<Id, int> out;
  for (int e = 0; e < ix.edge_count(); ++e) {
    const int root = find(ix.vertex_of(2 * e));
    auto [it, fresh] = numbering.emplace(root, static_cast<int>(numbering.size()));
    out.emplace_hint(out.end(), ix.edge_id(e), it->second);
  }
  return out;
}

}  // namespace daisy
