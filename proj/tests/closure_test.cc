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

#include "tangletree/closure.h"

#include <algorithm>

#include "gtest/gtest.h"
#include "oracles.h"
#include "tangletree/error.h"
#include "tangletree/generators.h"
#include "tangletree/pd_io.h"

namespace tangletree {
namespace {

using testing::ReadTestData;

std::vector<BigInt> Determinants(const TangleCode& t) {
  std::vector<BigInt> out;
  for (const ClosureDeterminant& c : ClosureDeterminants(t)) {
    out.push_back(c.determinant);
  }
  return out;
}

// The integer tangle with c half twists between endpoints 1 and 2, all of the
// same handedness. Its closures are an unknot and the (2,c) torus link.
TangleCode TwistTangle(int c) {
  std::vector<ArcLabel> boundary{1, 2, 2, 1};
  std::vector<Crossing> xs;
  ArcLabel next = 3;
  for (int i = 0; i < c; ++i) {
    const ArcLabel a = boundary[0], b = boundary[1];
    const ArcLabel p = next++, q = next++;
    xs.push_back(Crossing{{a, b, q, p}});
    boundary[0] = p;
    boundary[1] = q;
  }
  return TangleCode::Create(xs, boundary);
}

TEST(EnumerateClosuresTest, CatalanCounts) {
  for (int n = 1; n <= 5; ++n) {
    const auto closures = EnumerateClosures(n);
    EXPECT_EQ(BigInt(closures.size()), testing::CatalanByFormula(n)) << n;
    std::vector<std::vector<std::pair<int, int>>> got;
    for (const auto& c : closures) got.push_back(c.pairs);
    auto expected = testing::BruteNonCrossingMatchings(n);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected) << n;
    EXPECT_TRUE(std::is_sorted(closures.begin(), closures.end()));
  }
  EXPECT_THROW(EnumerateClosures(0), InvalidArgument);
}

TEST(EnumerateClosuresTest, FourEndpointNames) {
  const auto closures = EnumerateClosures(2);
  ASSERT_EQ(closures.size(), 2u);
  EXPECT_EQ(ToString(closures[0]), "(1,2)(3,4)");
  EXPECT_EQ(ClosureName(closures[0]), "numerator");
  EXPECT_EQ(ToString(closures[1]), "(1,4)(2,3)");
  EXPECT_EQ(ClosureName(closures[1]), "denominator");
  EXPECT_EQ(ClosureName(EnumerateClosures(3)[0]), "(1,2)(3,4)(5,6)");
}

TEST(ValidateClosurePatternTest, Errors) {
  EXPECT_NO_THROW(ValidateClosurePattern({{{1, 2}, {3, 4}}}, 2));
  EXPECT_THROW(ValidateClosurePattern({{{1, 3}, {2, 4}}}, 2), InvalidArgument);
  EXPECT_THROW(ValidateClosurePattern({{{1, 2}}}, 2), InvalidArgument);
  EXPECT_THROW(ValidateClosurePattern({{{1, 2}, {2, 3}}}, 2), InvalidArgument);
  EXPECT_THROW(ValidateClosurePattern({{{1, 2}, {3, 5}}}, 2), InvalidArgument);
}

TEST(CloseTangleTest, SizeMismatch) {
  const TangleCode t = TangleCode::Create({}, {1, 2, 2, 1});
  EXPECT_THROW(CloseTangle(t, EnumerateClosures(3)[0]), InvalidArgument);
}

TEST(CloseTangleTest, TrivialTangle) {
  const TangleCode t = ParseTangle(ReadTestData("trivial_tangle4.pd"));
  const auto closures = EnumerateClosures(2);
  EXPECT_EQ(CloseTangle(t, closures[0]).free_loops(), 1);
  EXPECT_EQ(CloseTangle(t, closures[1]).free_loops(), 2);
  EXPECT_EQ(Determinants(t), (std::vector<BigInt>{1, 0}));
}

TEST(CloseTangleTest, TwistTangles) {
  for (int c = 1; c <= 7; ++c) {
    EXPECT_EQ(Determinants(TwistTangle(c)), (std::vector<BigInt>{1, c})) << c;
  }
}

TEST(CloseTangleTest, WorkedExampleTangle) {
  const TangleCode t = ParseTangle(ReadTestData("knot_k_tangle.pd"));
  EXPECT_EQ(t.n(), 2);
  EXPECT_EQ(t.crossings().size(), 11u);
  EXPECT_EQ(Determinants(t), (std::vector<BigInt>{25, 30}));
}

TEST(CloseTangleTest, SixEndpointFixture) {
  const TangleCode t = ParseTangle(ReadTestData("six_tangle.pd"));
  const auto closures = ClosureDeterminants(t);
  ASSERT_EQ(closures.size(), 5u);
  // Values from the Fox colouring matrix of each closure.
  EXPECT_EQ(Determinants(t), (std::vector<BigInt>{9, 19, 5, 11, 18}));
  EXPECT_EQ(ClosureName(closures[2].pattern), "(1,4)(2,3)(5,6)");
}

TEST(KrebesCheckTest, WorkedExample) {
  const TangleCode t = ParseTangle(ReadTestData("knot_k_tangle.pd"));
  const KrebesVerdict k = KrebesCheck(t, ParsePd(ReadTestData("knot_k.pd")));
  EXPECT_EQ(k.gcd, 5);
  EXPECT_EQ(k.link_determinant, 25);
  EXPECT_EQ(k.conclusion, KrebesConclusion::kConsistent);
  EXPECT_TRUE(k.theorem_applies);
  const KrebesVerdict tr = KrebesCheck(t, ParsePd(ReadTestData("trefoil.pd")));
  EXPECT_EQ(tr.conclusion, KrebesConclusion::kObstructed);
}

TEST(KrebesCheckTest, EightEndpointsAreNotCovered) {
  Rng rng(2);
  const TangleCode t = RandomTangle(rng, 4, 2);
  const KrebesVerdict k = KrebesCheck(t, ParsePd(ReadTestData("unknot.pd")));
  EXPECT_FALSE(k.theorem_applies);
  EXPECT_EQ(k.closure_determinants.size(), 14u);
}

// A tangle sits inside each of its own closures, so the check must pass.
class SelfEmbeddingProperty : public ::testing::TestWithParam<int> {};

TEST_P(SelfEmbeddingProperty, ClosuresAreConsistent) {
  Rng rng(static_cast<std::uint64_t>(GetParam()));
  const int n = 2 + GetParam() % 2;
  const TangleCode t = RandomTangle(rng, n, GetParam() % 6);
  const std::vector<BigInt> dets = Determinants(t);
  const BigInt g = GcdList(dets);
  for (const ClosurePattern& p : EnumerateClosures(n)) {
    const PlanarDiagramCode link = CloseTangle(t, p);
    const KrebesVerdict k = KrebesCheck(t, link);
    EXPECT_EQ(k.gcd, g);
    EXPECT_EQ(k.conclusion, KrebesConclusion::kConsistent) << ToString(p);
    // The dual Tait graph gives the same determinant.
    EXPECT_EQ(LinkDeterminant(link, {TaitSide::kUnshaded, std::nullopt}),
              k.link_determinant);
    EXPECT_EQ(testing::FoxDeterminant(link), k.link_determinant);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SelfEmbeddingProperty, ::testing::Range(0, 60));

}  // namespace
}  // namespace tangletree
