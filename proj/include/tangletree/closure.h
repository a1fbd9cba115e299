// Copyright 2026 The tangletree Authors
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

// Closures of 2n-tangles and the determinant obstruction to embedding a
// tangle in a link: if t embeds in a link L, every common divisor of the
// determinants of the closures of t divides det(L). Checked here for 4- and
// 6-endpoint tangles.

#ifndef TANGLETREE_CLOSURE_H_
#define TANGLETREE_CLOSURE_H_

#include <string>
#include <utility>
#include <vector>

#include "tangletree/bigint.h"
#include "tangletree/composition.h"
#include "tangletree/diagram.h"

namespace tangletree {

// Perfect matching of the boundary positions 1..2n by arcs outside the disk.
// Pairs are stored as (a, b) with a < b, sorted by a.
struct ClosurePattern {
  std::vector<std::pair<int, int>> pairs;

  int n() const { return static_cast<int>(pairs.size()); }
  friend auto operator<=>(const ClosurePattern&,
                          const ClosurePattern&) = default;
};

// "(1,2)(3,4)" style rendering.
std::string ToString(const ClosurePattern& pattern);

// For n = 2: "numerator" for {(1,2),(3,4)}, "denominator" for {(1,4),(2,3)},
// otherwise the ToString form.
std::string ClosureName(const ClosurePattern& pattern);

// All non-crossing perfect matchings of 2n cyclic points, lexicographically
// sorted. There are Catalan(n) of them. Throws InvalidArgument for n < 1.
std::vector<ClosurePattern> EnumerateClosures(int n);

// Throws InvalidArgument unless pattern is a perfect matching of 1..2n
// without interleaved chords.
void ValidateClosurePattern(const ClosurePattern& pattern, int n);

// Joins the matched boundary arcs. Chains of boundary arcs that close up
// without meeting a crossing become free loops.
PlanarDiagramCode CloseTangle(const TangleCode& tangle,
                              const ClosurePattern& pattern);

struct ClosureDeterminant {
  ClosurePattern pattern;
  BigInt determinant;
};

// Determinant of every closure, in EnumerateClosures order.
std::vector<ClosureDeterminant> ClosureDeterminants(const TangleCode& tangle);

// Closure determinants against the link determinant. theorem_applies is false
// unless the tangle has 4 or 6 endpoints.
KrebesVerdict KrebesCheck(const TangleCode& tangle,
                          const PlanarDiagramCode& link);

}  // namespace tangletree

#endif  // TANGLETREE_CLOSURE_H_
