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

#include "tangletree/selftest.h"

#include <fstream>
#include <sstream>

#include "tangletree/closure.h"
#include "tangletree/composition.h"
#include "tangletree/error.h"
#include "tangletree/generators.h"
#include "tangletree/json_io.h"
#include "tangletree/pd_io.h"

namespace tangletree {

std::string ToString(Suite suite) {
  switch (suite) {
    case Suite::kMatrixTree:
      return "matrix-tree";
    case Suite::kTwoVertexGluing:
      return "gluing-2";
    case Suite::kThreeVertexGluing:
      return "gluing-3";
    case Suite::kTangleClosures:
      return "tangle-closures";
  }
  return "unknown";
}

std::vector<Suite> AllSuites() {
  return {Suite::kMatrixTree, Suite::kTwoVertexGluing,
          Suite::kThreeVertexGluing, Suite::kTangleClosures};
}

namespace {

// A failed instance: what went wrong plus the files that reproduce it.
struct Failure {
  std::string what;
  std::vector<std::pair<std::string, std::string>> files;  // suffix, contents
};

std::string GraphFile(const WeightedMultigraph& g) {
  return ToJson(g).dump() + "\n";
}

BigInt LabelledMinor(const SelftestOptions& options, const WeightedMultigraph& g,
                     const std::vector<VertexId>& deleted) {
  return Minor(options.laplacian(g), deleted, deleted);
}

std::optional<Failure> MatrixTreeInstance(Rng& rng,
                                          const SelftestOptions& options) {
  const WeightedMultigraph g = RandomGraph(rng, RandomGraphOptions{});
  const BigInt trees = TreeWeightEnum(g);
  for (VertexId v : g.vertices()) {
    const BigInt minor = LabelledMinor(options, g, {v});
    if (minor != trees) {
      return Failure{"tree weight " + ToString(trees) + " but minor at " +
                         ToString(v) + " is " + ToString(minor),
                     {{"graph.json", GraphFile(g)}}};
    }
  }

  // A random nonempty root set, rooted forests against the principal minor.
  std::vector<VertexId> roots;
  for (VertexId v : g.vertices()) {
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) roots.push_back(v);
  }
  if (roots.empty()) roots.push_back(g.vertices().back());
  const BigInt forests = ForestWeightEnum(g, RootSpec::Rooted(roots));
  const BigInt minor = LabelledMinor(options, g, roots);
  if (forests != minor) {
    std::string set;
    for (VertexId v : roots) set += (set.empty() ? "" : ",") + ToString(v);
    return Failure{"rooted forest weight at {" + set + "} is " +
                       ToString(forests) + " but the minor is " +
                       ToString(minor),
                   {{"graph.json", GraphFile(g)}}};
  }

  // Merging two vertices turns forests rooted at them into trees.
  if (g.num_vertices() >= 2) {
    const std::vector<VertexId> pair{g.vertices()[0], g.vertices()[1]};
    const BigInt merged = TreeWeightEnum(ContractVertices(g, pair));
    const BigInt rooted = ForestWeightEnum(g, RootSpec::Rooted(pair));
    if (merged != rooted) {
      return Failure{"contracted tree weight " + ToString(merged) +
                         " differs from rooted forest weight " +
                         ToString(rooted),
                     {{"graph.json", GraphFile(g)}}};
    }
  }
  return std::nullopt;
}

bool Divides(const BigInt& d, const BigInt& x) {
  return d == 0 ? x == 0 : x % d == 0;
}

std::optional<Failure> GluingInstance(Rng& rng, int shared) {
  RandomGluingOptions gluing;
  gluing.shared = shared;
  if (shared == 3) {
    gluing.min_weight = -2;
    gluing.max_weight = 2;
  }
  const GluedPair pair = RandomGluedPair(rng, gluing);
  const GluingReport report = shared == 2 ? VerifyTwoVertexGluing(pair)
                                          : VerifyThreeVertexGluing(pair);
  auto failure = [&](std::string what) {
    return Failure{std::move(what) + "; report " + ToJson(report).dump(),
                   {{"h.json", GraphFile(pair.h)}, {"k.json", GraphFile(pair.k)}}};
  };
  if (!report.equal) return failure("identity fails");
  if (!report.witnesses_agree) return failure("Laplacian witness disagrees");

  // Any common divisor of the H-side weights divides the glued tree weight.
  std::vector<BigInt> h_side;
  for (const IdentityTerm& t : report.terms) h_side.push_back(Abs(t.h.value));
  if (!Divides(GcdList(h_side), Abs(report.lhs))) {
    return failure("gcd of H-side weights does not divide the tree weight");
  }
  return std::nullopt;
}

std::optional<Failure> TangleInstance(Rng& rng) {
  const int n = std::uniform_int_distribution<int>(2, 3)(rng);
  const int crossings = std::uniform_int_distribution<int>(0, 5)(rng);
  const TangleCode tangle = RandomTangle(rng, n, crossings);
  const auto closures = ClosureDeterminants(tangle);
  std::vector<BigInt> dets;
  for (const auto& c : closures) dets.push_back(c.determinant);
  const BigInt gcd = GcdList(dets);
  for (const auto& c : closures) {
    if (!Divides(gcd, c.determinant)) {
      return Failure{"gcd " + ToString(gcd) + " does not divide closure " +
                         ToString(c.pattern),
                     {{"tangle.pd", FormatTangle(tangle)}}};
    }
    const PlanarDiagramCode link = CloseTangle(tangle, c.pattern);
    const BigInt dual = LinkDeterminant(link, {TaitSide::kUnshaded, {}});
    if (dual != c.determinant) {
      return Failure{"closure " + ToString(c.pattern) + " has determinant " +
                         ToString(c.determinant) + " but the dual Tait graph "
                         "gives " + ToString(dual),
                     {{"tangle.pd", FormatTangle(tangle)},
                      {"closure.pd", FormatPd(link)}}};
    }
  }
  return std::nullopt;
}

}  // namespace

SuiteResult RunSuite(Suite suite, const SelftestOptions& raw) {
  SelftestOptions options = raw;
  if (!options.laplacian) {
    options.laplacian = [](const WeightedMultigraph& g) {
      return LaplacianMatrix(g).matrix();
    };
  }
  Rng rng(options.seed + 1000003ULL * static_cast<std::uint64_t>(suite));
  SuiteResult result;
  result.suite = suite;
  for (int i = 0; i < options.iterations; ++i) {
    std::optional<Failure> failure;
    try {
      switch (suite) {
        case Suite::kMatrixTree:
          failure = MatrixTreeInstance(rng, options);
          break;
        case Suite::kTwoVertexGluing:
          failure = GluingInstance(rng, 2);
          break;
        case Suite::kThreeVertexGluing:
          failure = GluingInstance(rng, 3);
          break;
        case Suite::kTangleClosures:
          failure = TangleInstance(rng);
          break;
      }
    } catch (const std::exception& e) {
      failure = Failure{std::string("exception: ") + e.what(), {}};
    }
    if (!failure) {
      ++result.passed;
      continue;
    }
    ++result.failed;
    result.failures.push_back("iteration " + std::to_string(i) + ": " +
                              failure->what);
    if (options.dump_dir) {
      std::filesystem::create_directories(*options.dump_dir);
      for (const auto& [suffix, contents] : failure->files) {
        const auto path = *options.dump_dir / (ToString(suite) + "-" +
                                               std::to_string(i) + "-" + suffix);
        std::ofstream(path) << contents;
        result.dumps.push_back(path);
      }
    }
  }
  return result;
}

bool SelftestReport::ok() const {
  for (const SuiteResult& s : suites) {
    if (s.failed) return false;
  }
  return true;
}

std::string SelftestReport::Format() const {
  std::ostringstream out;
  for (const SuiteResult& s : suites) {
    out << ToString(s.suite) << ": " << s.passed << "/" << (s.passed + s.failed)
        << " passed\n";
    for (const std::string& f : s.failures) out << "  " << f << '\n';
    for (const auto& d : s.dumps) out << "  wrote " << d.string() << '\n';
  }
  out << (ok() ? "selftest passed" : "selftest FAILED") << '\n';
  return out.str();
}

SelftestReport RunSelftest(const SelftestOptions& options) {
  SelftestReport report;
  for (Suite s : AllSuites()) report.suites.push_back(RunSuite(s, options));
  return report;
}

}  // namespace tangletree
