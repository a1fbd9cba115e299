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

// Gluing identities for tree weights and the determinant-gcd obstruction to
// embedding a tangle in a link.
//
// If G = H u K with H n K = {1, 2} (vertices only), every spanning tree of G
// restricts to a spanning tree on one side and a forest rooted at {1, 2} on
// the other, giving
//
//   w_G = w_H * w_{K,{1,2}} + w_{H,{1,2}} * w_K.
//
// With three shared vertices the restriction to K has one, two or three
// trees, which yields five terms:
//
//   w_G = w_H * w_{K,123} + w_{H,12} * w_{K,{1,3},{2,3}}
//       + w_{H,23} * w_{K,{1,2},{1,3}} + w_{H,13} * w_{K,{1,2},{2,3}}
//       + w_{H,123} * w_K.

#ifndef TANGLETREE_COMPOSITION_H_
#define TANGLETREE_COMPOSITION_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tangletree/bigint.h"
#include "tangletree/graph.h"

namespace tangletree {

// Two graphs sharing exactly the vertices in shared and no edges.
struct GluedPair {
  WeightedMultigraph h;
  WeightedMultigraph k;
  std::vector<VertexId> shared;
};

// Throws InvalidArgument unless shared is nonempty, repeat-free, contained in
// both graphs, and no other label occurs in both.
void ValidateGluedPair(const GluedPair& pair);

// Relabels both graphs so that shared[i] becomes i+1, the remaining vertices
// of h follow in ascending order, then those of k. Edge order is kept.
GluedPair NormalizeGluedPair(const GluedPair& pair);

// h u k with the shared vertices identified.
WeightedMultigraph GlueAlongShared(const GluedPair& pair);

// One weight entering an identity, computed by enumeration and witnessed by a
// Laplacian minor (principal for tree and rooted weights, rows gamma / columns
// gamma' otherwise). For rooted and tree weights the witness must equal the
// value; for mixed roots only the absolute values are compared.
struct WeightFactor {
  std::string graph;                // "H" or "K"
  std::optional<RootSpec> roots;    // empty for the tree weight
  BigInt value;
  BigInt minor;
  bool witness_agrees = false;

  std::string Describe() const;
};

struct IdentityTerm {
  WeightFactor h;
  WeightFactor k;
  BigInt product;
};

struct GluingReport {
  BigInt lhs;          // tree weight of the glued graph, by enumeration
  BigInt lhs_minor;    // same, by the Laplacian path
  std::vector<IdentityTerm> terms;
  BigInt rhs;
  bool equal = false;            // lhs == rhs
  bool witnesses_agree = false;  // every factor and lhs_minor consistent
};

// Two shared vertices. The pair is normalized first.
GluingReport VerifyTwoVertexGluing(const GluedPair& pair);

// Three shared vertices. The pair is normalized first.
GluingReport VerifyThreeVertexGluing(const GluedPair& pair);

// gcd of nonnegative integers with gcd(0, x) = x. Throws InvalidArgument on an
// empty list or a negative entry.
BigInt GcdList(std::span<const BigInt> values);

enum class KrebesConclusion { kConsistent, kObstructed };

std::string ToString(KrebesConclusion conclusion);

struct KrebesVerdict {
  std::vector<BigInt> closure_determinants;
  BigInt gcd;
  BigInt link_determinant;
  bool divides = false;  // 0 | 0 holds, 0 | x fails for x != 0
  KrebesConclusion conclusion = KrebesConclusion::kConsistent;
  // False when the tangle size is outside the cases the divisibility theorem
  // covers (4 and 6 endpoints); the numbers are still filled in.
  bool theorem_applies = true;
};

// Throws InvalidArgument on an empty or negative closure list or a negative
// link determinant.
KrebesVerdict MakeKrebesVerdict(std::span<const BigInt> closure_determinants,
                                const BigInt& link_determinant);

}  // namespace tangletree

#endif  // TANGLETREE_COMPOSITION_H_
