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

// Realizability of arrowed daisy graphs as intersection graphs of oriented
// generic surfaces, decided from the class of the ambient oriented
// 3-manifold M:
//
//   H_1(M) periodic, M closed   realizable iff gradable and no DB values
//   H_1(M) periodic, M bounded  realizable iff gradable
//   H_1(M) infinite, M closed   realizable iff no DB values  (M compact)
//   H_1(M) infinite, M bounded  always realizable
//
// "Periodic" means every element of the first integral homology group has
// finite order. An ODG is decided on its underlying ADG.

#ifndef DAISY_REALIZE_HPP_
#define DAISY_REALIZE_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "daisy/grading.hpp"
#include "daisy/model.hpp"

namespace daisy {

enum class Homology { kPeriodic, kInfinite };
enum class Boundary { kClosed, kBounded };

struct ManifoldClass {
  Homology homology = Homology::kPeriodic;
  Boundary boundary = Boundary::kClosed;

  friend bool operator==(const ManifoldClass&, const ManifoldClass&) = default;
};

// The four classes in table order.
inline constexpr std::array<ManifoldClass, 4> kAllManifoldClasses = {{
    {Homology::kPeriodic, Boundary::kClosed},
    {Homology::kPeriodic, Boundary::kBounded},
    {Homology::kInfinite, Boundary::kClosed},
    {Homology::kInfinite, Boundary::kBounded},
}};

// "periodic-closed", "periodic-bounded", "infinite-closed", "infinite-bounded".
std::string to_string(ManifoldClass m);
std::optional<ManifoldClass> parse_manifold_class(std::string_view text);

struct RealizabilityVerdict {
  enum class Reason { kNotGradable, kHasDbValues, kUnconditional };

  bool realizable = false;
  // Obstructions when not realizable; {kUnconditional} for the
  // infinite-bounded class; empty otherwise.
  std::vector<Reason> reasons;
  std::optional<NotGradable> grading_evidence;
  std::vector<Id> db_vertices;
};

// "not-gradable", "has-DB-values", "unconditional".
const char* to_string(RealizabilityVerdict::Reason reason);

RealizabilityVerdict decide_realizable(const ArrowedDaisyGraph& g, ManifoldClass m);
RealizabilityVerdict decide_realizable(const OrderedDaisyGraph& g, ManifoldClass m);
// Same decision from an already computed grade(g).
RealizabilityVerdict decide_realizable(const DaisyGraph& base,
                                       const GradeResult& graded, ManifoldClass m);

}  // namespace daisy

#endif  // DAISY_REALIZE_HPP_
