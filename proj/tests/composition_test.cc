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

#include "tangletree/composition.h"

#include "gtest/gtest.h"
#include "oracles.h"
#include "tangletree/error.h"
#include "tangletree/generators.h"

namespace tangletree {
namespace {

using testing::BruteForestWeight;
using testing::BruteTreeWeight;
using testing::MakeGraph;
using testing::V;
using testing::Vs;

GluedPair Pair(WeightedMultigraph h, WeightedMultigraph k,
               std::vector<VertexId> shared) {
  return GluedPair{std::move(h), std::move(k), std::move(shared)};
}

// Graph on the given labels; MakeGraph only covers 1..n.
WeightedMultigraph On(std::initializer_list<std::int64_t> labels,
                      std::vector<EdgeSpec> edges) {
  return BuildGraph(Vs(labels), edges);
}

TEST(GluingTest, TwoParallelEdges) {
  const GluingReport r = VerifyTwoVertexGluing(
      Pair(MakeGraph(2, {{1, 2, 5}}), MakeGraph(2, {{1, 2, 7}}), Vs({1, 2})));
  EXPECT_EQ(r.lhs, 12);
  ASSERT_EQ(r.terms.size(), 2u);
  EXPECT_EQ(r.terms[0].product, 5);
  EXPECT_EQ(r.terms[1].product, 7);
  EXPECT_EQ(r.rhs, 12);
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.witnesses_agree);
}

TEST(GluingTest, PathPlusEdgeIsTriangle) {
  const WeightedMultigraph h = MakeGraph(3, {{1, 3, 1}, {3, 2, 1}});
  const WeightedMultigraph k = MakeGraph(2, {{1, 2, 1}});
  const GluingReport r = VerifyTwoVertexGluing(Pair(h, k, Vs({1, 2})));
  EXPECT_EQ(r.lhs, 3);
  EXPECT_EQ(r.terms[0].h.value, 1);
  EXPECT_EQ(r.terms[0].k.value, 1);
  EXPECT_EQ(r.terms[1].h.value, 2);
  EXPECT_EQ(r.terms[1].k.value, 1);
  EXPECT_TRUE(r.equal);
}

TEST(GluingTest, EdgelessSideLeavesTreeWeight) {
  const WeightedMultigraph g = testing::WorkedExampleGraph();
  const GluingReport r =
      VerifyTwoVertexGluing(Pair(g, MakeGraph(2, {}), Vs({1, 2})));
  EXPECT_EQ(r.lhs, -25);
  EXPECT_EQ(r.terms[0].k.value, 1);  // forests of K rooted at both vertices
  EXPECT_EQ(r.terms[1].k.value, 0);
  EXPECT_EQ(r.terms[1].h.value, 30);
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.witnesses_agree);
}

TEST(GluingTest, StarPlusTriangleIsK4) {
  const WeightedMultigraph h = MakeGraph(4, {{1, 4, 1}, {2, 4, 1}, {3, 4, 1}});
  const WeightedMultigraph k = MakeGraph(3, {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  const GluingReport r = VerifyThreeVertexGluing(Pair(h, k, Vs({1, 2, 3})));
  EXPECT_EQ(r.lhs, 16);
  ASSERT_EQ(r.terms.size(), 5u);
  const std::vector<int> products{1, 2, 2, 2, 9};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(r.terms[i].product, products[i]);
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.witnesses_agree);
}

TEST(GluingTest, FactorNames) {
  const WeightedMultigraph h = MakeGraph(4, {{1, 4, 1}, {2, 4, 1}, {3, 4, 1}});
  const WeightedMultigraph k = MakeGraph(3, {{1, 2, 1}});
  const GluingReport r = VerifyThreeVertexGluing(Pair(h, k, Vs({1, 2, 3})));
  EXPECT_EQ(r.terms[0].h.Describe(), "w_H");
  EXPECT_EQ(r.terms[0].k.Describe(), "w_{K,{1,2,3}}");
  EXPECT_EQ(r.terms[1].k.Describe(), "w_{K,{1,3},{2,3}}");
  EXPECT_EQ(r.terms[4].k.Describe(), "w_K");
}

TEST(GluingTest, SharedSetIsNormalized) {
  // Shared vertices 7 and 3 play the roles of 1 and 2.
  const WeightedMultigraph h =
      On({3, 5, 7}, {{V(7), V(5), 2}, {V(5), V(3), 3}});
  const WeightedMultigraph k = On({3, 7, 9}, {{V(3), V(9), 1}, {V(9), V(7), 4}});
  const GluedPair pair = Pair(h, k, Vs({7, 3}));
  const GluedPair normal = NormalizeGluedPair(pair);
  EXPECT_EQ(normal.shared, Vs({1, 2}));
  EXPECT_EQ(normal.h.vertices(), Vs({1, 2, 3}));
  EXPECT_EQ(normal.k.vertices(), Vs({1, 2, 4}));
  EXPECT_EQ(normal.h.edges()[0].u, V(1));
  const GluingReport r = VerifyTwoVertexGluing(pair);
  EXPECT_EQ(r.lhs, BruteTreeWeight(GlueAlongShared(pair)));
  EXPECT_TRUE(r.equal);
}

TEST(GluingTest, Errors) {
  const WeightedMultigraph h = MakeGraph(3, {{1, 3, 1}});
  EXPECT_THROW(ValidateGluedPair(Pair(h, MakeGraph(2, {}), {})),
               InvalidArgument);
  EXPECT_THROW(ValidateGluedPair(Pair(h, MakeGraph(2, {}), Vs({1, 1}))),
               InvalidArgument);
  // Vertex 3 exists on both sides but is not shared.
  EXPECT_THROW(ValidateGluedPair(Pair(h, MakeGraph(3, {}), Vs({1, 2}))),
               InvalidArgument);
  EXPECT_THROW(ValidateGluedPair(Pair(h, MakeGraph(2, {}), Vs({1, 4}))),
               InvalidArgument);
  EXPECT_THROW(VerifyThreeVertexGluing(Pair(h, MakeGraph(2, {}), Vs({1, 2}))),
               InvalidArgument);
  EXPECT_THROW(VerifyTwoVertexGluing(Pair(h, MakeGraph(2, {}), Vs({1}))),
               InvalidArgument);
}

// Every quantity is recomputed with the all-subsets oracle, so the identity is
// checked independently of the enumeration code under test.
void CheckAgainstOracle(const GluedPair& raw, const GluingReport& r) {
  const GluedPair pair = NormalizeGluedPair(raw);
  EXPECT_EQ(r.lhs, BruteTreeWeight(GlueAlongShared(pair)));
  EXPECT_EQ(r.lhs, r.lhs_minor);
  BigInt sum = 0;
  for (const IdentityTerm& t : r.terms) {
    for (const auto* f : {&t.h, &t.k}) {
      const WeightedMultigraph& g = f->graph == "H" ? pair.h : pair.k;
      const BigInt expected =
          f->roots ? BruteForestWeight(g, f->roots->gamma, f->roots->gamma_prime)
                   : BruteTreeWeight(g);
      EXPECT_EQ(f->value, expected) << f->Describe();
      EXPECT_EQ(Abs(f->minor), Abs(expected)) << f->Describe();
    }
    sum += t.h.value * t.k.value;
  }
  EXPECT_EQ(sum, r.lhs);
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.witnesses_agree);
}

class TwoVertexProperty : public ::testing::TestWithParam<int> {};

TEST_P(TwoVertexProperty, IdentityHolds) {
  Rng rng(static_cast<std::uint64_t>(GetParam()));
  const GluedPair pair = RandomGluedPair(rng, RandomGluingOptions{});
  const GluingReport r = VerifyTwoVertexGluing(pair);
  CheckAgainstOracle(pair, r);
  // The H-side weights divide the glued tree weight.
  const std::vector<BigInt> h_side{Abs(r.terms[0].h.value),
                                   Abs(r.terms[1].h.value)};
  const BigInt g = GcdList(h_side);
  EXPECT_TRUE(g == 0 ? r.lhs == 0 : r.lhs % g == 0);
}

INSTANTIATE_TEST_SUITE_P(Seeds, TwoVertexProperty, ::testing::Range(0, 300));

class ThreeVertexProperty : public ::testing::TestWithParam<int> {};

TEST_P(ThreeVertexProperty, IdentityHolds) {
  Rng rng(static_cast<std::uint64_t>(GetParam()) + 7777);
  RandomGluingOptions options;
  options.shared = 3;
  options.min_weight = -2;
  options.max_weight = 2;
  const GluedPair pair = RandomGluedPair(rng, options);
  CheckAgainstOracle(pair, VerifyThreeVertexGluing(pair));
}

INSTANTIATE_TEST_SUITE_P(Seeds, ThreeVertexProperty, ::testing::Range(0, 200));

TEST(JoinTest, OneSharedVertexMultiplies) {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    RandomGluingOptions options;
    options.shared = 1;
    const GluedPair pair = RandomGluedPair(rng, options);
    EXPECT_EQ(TreeWeightEnum(GlueAlongShared(pair)),
              TreeWeightEnum(pair.h) * TreeWeightEnum(pair.k));
  }
}

TEST(GcdListTest, Values) {
  const std::vector<BigInt> a{25, 30};
  EXPECT_EQ(GcdList(a), 5);
  const std::vector<BigInt> b{0, 6};
  EXPECT_EQ(GcdList(b), 6);
  const std::vector<BigInt> c{0, 0};
  EXPECT_EQ(GcdList(c), 0);
  const std::vector<BigInt> d{7};
  EXPECT_EQ(GcdList(d), 7);
  EXPECT_THROW(GcdList(std::vector<BigInt>{}), InvalidArgument);
  const std::vector<BigInt> e{4, -2};
  EXPECT_THROW(GcdList(e), InvalidArgument);
}

TEST(KrebesVerdictTest, Examples) {
  const std::vector<BigInt> dets{25, 30};
  const KrebesVerdict ok = MakeKrebesVerdict(dets, 25);
  EXPECT_EQ(ok.gcd, 5);
  EXPECT_TRUE(ok.divides);
  EXPECT_EQ(ok.conclusion, KrebesConclusion::kConsistent);
  const KrebesVerdict bad = MakeKrebesVerdict(dets, 3);
  EXPECT_FALSE(bad.divides);
  EXPECT_EQ(bad.conclusion, KrebesConclusion::kObstructed);
  EXPECT_EQ(ToString(bad.conclusion), "obstructed");
  EXPECT_EQ(ToString(ok.conclusion), "consistent");
}

TEST(KrebesVerdictTest, ZeroConventions) {
  const std::vector<BigInt> zeros{0, 0};
  EXPECT_EQ(MakeKrebesVerdict(zeros, 4).conclusion,
            KrebesConclusion::kObstructed);
  EXPECT_EQ(MakeKrebesVerdict(zeros, 0).conclusion,
            KrebesConclusion::kConsistent);
  const std::vector<BigInt> one{1, 0};
  EXPECT_EQ(MakeKrebesVerdict(one, 0).conclusion,
            KrebesConclusion::kConsistent);
}

TEST(KrebesVerdictTest, Errors) {
  EXPECT_THROW(MakeKrebesVerdict(std::vector<BigInt>{}, 1), InvalidArgument);
  const std::vector<BigInt> dets{3};
  EXPECT_THROW(MakeKrebesVerdict(dets, -3), InvalidArgument);
}

}  // namespace
}  // namespace tangletree
