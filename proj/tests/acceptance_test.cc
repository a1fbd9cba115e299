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

// Acceptance gate. One line per criterion, exact comparisons, wall-clock
// limits. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.h"
#include "tangletree/closure.h"
#include "tangletree/composition.h"
#include "tangletree/generators.h"
#include "tangletree/laplacian.h"
#include "tangletree/pd_io.h"
#include "tangletree/selftest.h"

namespace tangletree {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    else if (detail.size() < 400) detail += "; " + what;
    pass = false;
  }
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> body;
};

PlanarDiagramCode LoadPd(const std::string& name) {
  return ParsePd(testing::ReadTestData(name));
}

TangleCode LoadTangle(const std::string& name) {
  return ParseTangle(testing::ReadTestData(name));
}

Outcome WorkedExampleGraph() {
  Outcome o;
  const IntegerMatrix m = testing::WorkedExampleMatrix();
  const WeightedMultigraph g = testing::WorkedExampleGraph();
  const LaplacianMatrix l(g);
  o.Require(l.matrix().SameEntries(m), "Laplacian differs from M");
  int equal_25 = 0;
  std::string minors;
  for (VertexId v : l.labels()) {
    const std::vector<VertexId> one{v};
    const BigInt minor = Minor(l, one, one);
    minors += (minors.empty() ? "" : ",") + ToString(minor);
    if (minor == 25) ++equal_25;
  }
  const BigInt by_enum = TreeWeightEnum(g);
  const BigInt by_mtt = TreeWeightMtt(g);
  o.Require(Abs(by_enum) == 25 && Abs(by_mtt) == 25,
            "|tree weight| enum " + ToString(by_enum) + " mtt " + ToString(by_mtt));
  // With the Laplacian equal to M the minors are forced to det of M's 6x6
  // principal submatrices, which is -25. Reported as stated, not adjusted.
  o.Require(equal_25 == 7, "principal minors are [" + minors +
                               "], not 25; |minor| = 25 = Det(k) holds, the "
                               "signed clause conflicts with L == M");
  return o;
}

Outcome KrebesWorkedExample() {
  Outcome o;
  const std::vector<BigInt> dets{25, 30};
  const KrebesVerdict ok = MakeKrebesVerdict(dets, 25);
  const KrebesVerdict bad = MakeKrebesVerdict(dets, 3);
  o.Require(ok.gcd == 5, "gcd " + ToString(ok.gcd));
  o.Require(ok.conclusion == KrebesConclusion::kConsistent, "25 not consistent");
  o.Require(bad.conclusion == KrebesConclusion::kObstructed, "3 not obstructed");
  const KrebesVerdict trefoil =
      KrebesCheck(LoadTangle("knot_k_tangle.pd"), LoadPd("trefoil.pd"));
  o.Require(trefoil.link_determinant == 3 &&
                trefoil.conclusion == KrebesConclusion::kObstructed,
            "trefoil pipeline verdict");
  return o;
}

Outcome TangleFixture() {
  Outcome o;
  const auto closures = ClosureDeterminants(LoadTangle("knot_k_tangle.pd"));
  o.Require(closures.size() == 2, "expected two closures");
  if (closures.size() == 2) {
    o.Require(closures[0].determinant == 25,
              "numerator " + ToString(closures[0].determinant));
    o.Require(closures[1].determinant == 30,
              "denominator " + ToString(closures[1].determinant));
  }
  return o;
}

Outcome Gluing(int shared, int count, std::uint64_t seed) {
  Outcome o;
  Rng rng(seed);
  RandomGluingOptions options;
  options.shared = shared;
  for (int i = 0; i < count; ++i) {
    const GluedPair pair = RandomGluedPair(rng, options);
    const GluingReport r = shared == 2 ? VerifyTwoVertexGluing(pair)
                                       : VerifyThreeVertexGluing(pair);
    const BigInt oracle = testing::BruteTreeWeight(GlueAlongShared(pair));
    o.Require(r.equal, "instance " + std::to_string(i) + " identity fails");
    o.Require(r.witnesses_agree,
              "instance " + std::to_string(i) + " minor witness disagrees");
    o.Require(r.lhs == oracle,
              "instance " + std::to_string(i) + " lhs differs from oracle");
  }
  return o;
}

Outcome MatrixTree() {
  Outcome o;
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 500; ++i) {
    const WeightedMultigraph g = RandomGraph(rng, RandomGraphOptions{});
    const LaplacianMatrix l(g);
    const BigInt trees = TreeWeightEnum(g);
    for (VertexId v : g.vertices()) {
      const std::vector<VertexId> one{v};
      o.Require(Minor(l, one, one) == trees,
                "graph " + std::to_string(i) + " minor at " + ToString(v));
    }
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<VertexId> gamma;
      for (VertexId v : g.vertices()) {
        if (rng() % 2) gamma.push_back(v);
      }
      if (gamma.empty()) gamma.push_back(g.vertices().front());
      o.Require(ForestWeightEnum(g, RootSpec::Rooted(gamma)) ==
                    Minor(l, gamma, gamma),
                "graph " + std::to_string(i) + " rooted forest weight");
    }
  }
  return o;
}

Outcome DiagramSanity() {
  Outcome o;
  o.Require(LinkDeterminant(LoadPd("trefoil.pd")) == 3, "trefoil");
  o.Require(LinkDeterminant(LoadPd("unknot.pd")) == 1, "one loop");
  o.Require(LinkDeterminant(LoadPd("two_loops.pd")) == 0, "two loops");
  std::vector<PlanarDiagramCode> diagrams;
  for (const char* name :
       {"trefoil.pd", "unknot.pd", "two_loops.pd", "kink.pd", "knot_k.pd"}) {
    diagrams.push_back(LoadPd(name));
  }
  for (const char* name :
       {"knot_k_tangle.pd", "trivial_tangle4.pd", "six_tangle.pd"}) {
    const TangleCode t = LoadTangle(name);
    for (const ClosurePattern& p : EnumerateClosures(t.n())) {
      diagrams.push_back(CloseTangle(t, p));
    }
  }
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    o.Require(LinkDeterminant(diagrams[i], {TaitSide::kUnshaded, std::nullopt}) ==
                  LinkDeterminant(diagrams[i]),
              "dual shading differs on diagram " + std::to_string(i));
  }
  return o;
}

Outcome Catalan() {
  Outcome o;
  const int expected[] = {1, 2, 5, 14, 42};
  for (int n = 1; n <= 5; ++n) {
    const auto closures = EnumerateClosures(n);
    const auto brute = testing::BruteNonCrossingMatchings(n);
    o.Require(closures.size() == static_cast<std::size_t>(expected[n - 1]),
              "n=" + std::to_string(n) + " gave " + std::to_string(closures.size()));
    o.Require(brute.size() == closures.size(),
              "n=" + std::to_string(n) + " brute matcher disagrees");
    o.Require(testing::CatalanByFormula(n) == expected[n - 1],
              "formula at n=" + std::to_string(n));
  }
  return o;
}

Outcome SelfEmbedding() {
  Outcome o;
  Rng rng(kDefaultSeed + 9);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 2;
    const int crossings = static_cast<int>(rng() % 6);
    const TangleCode t = RandomTangle(rng, n, crossings);
    for (const ClosurePattern& p : EnumerateClosures(n)) {
      const PlanarDiagramCode link = CloseTangle(t, p);
      const KrebesVerdict v = KrebesCheck(t, link);
      o.Require(v.divides, "tangle " + std::to_string(i) + " closure " +
                               ToString(p) + " not divisible");
      o.Require(v.link_determinant == testing::FoxDeterminant(link),
                "tangle " + std::to_string(i) + " closure " + ToString(p) +
                    " differs from the colouring-matrix determinant");
    }
  }
  return o;
}

}  // namespace
}  // namespace tangletree

int main() {
  using namespace tangletree;
  const std::vector<Criterion> criteria{
      {1, "worked example graph, minors and Laplacian", 1, WorkedExampleGraph},
      {2, "closure gcd verdicts", 1, KrebesWorkedExample},
      {3, "tangle fixture closures 25 and 30", 1, TangleFixture},
      {4, "two-vertex gluing, 300 pairs", 30,
       [] { return Gluing(2, 300, kDefaultSeed + 4); }},
      {5, "three-vertex gluing, 200 triples", 60,
       [] { return Gluing(3, 200, kDefaultSeed + 5); }},
      {6, "matrix tree equivalence, 500 graphs", 60, MatrixTree},
      {7, "diagram determinants and dual shading", 1, DiagramSanity},
      {8, "closure counts are Catalan", 1, Catalan},
      {9, "self-embedding divisibility, 100 tangles", 60, SelfEmbedding},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (seconds >= c.limit_seconds) {
      o.Require(false, "took " + std::to_string(seconds) + " s, limit " +
                           std::to_string(c.limit_seconds) + " s");
    }
    if (!o.pass) ++failed;
    std::printf("AC%d %s  %s (%.3f s)%s%s\n", c.number, o.pass ? "PASS" : "FAIL",
                c.name.c_str(), seconds, o.pass ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
