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

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "tangletree/error.h"
#include "tangletree/laplacian.h"

namespace tangletree {

void ValidateGluedPair(const GluedPair& pair) {
  if (pair.shared.empty()) throw InvalidArgument("no shared vertices");
  std::set<VertexId> shared;
  for (VertexId v : pair.shared) {
    if (!shared.insert(v).second) {
      throw InvalidArgument("shared vertex " + ToString(v) + " repeated");
    }
    if (!pair.h.HasVertex(v) || !pair.k.HasVertex(v)) {
      throw InvalidArgument("shared vertex " + ToString(v) +
                            " missing from one side");
    }
  }
  for (VertexId v : pair.k.vertices()) {
    if (!shared.contains(v) && pair.h.HasVertex(v)) {
      throw InvalidArgument("vertex " + ToString(v) +
                            " is in both graphs but not shared");
    }
  }
}

namespace {

WeightedMultigraph Relabel(const WeightedMultigraph& g,
                           const std::map<VertexId, VertexId>& to) {
  std::vector<VertexId> vertices;
  for (VertexId v : g.vertices()) vertices.push_back(to.at(v));
  std::vector<EdgeSpec> edges;
  for (const WeightedEdge& e : g.edges()) {
    edges.push_back({to.at(e.u), to.at(e.v), e.weight});
  }
  return BuildGraph(std::move(vertices), edges);
}

}  // namespace

GluedPair NormalizeGluedPair(const GluedPair& pair) {
  ValidateGluedPair(pair);
  std::map<VertexId, VertexId> h_map, k_map;
  std::int64_t next = 1;
  for (VertexId v : pair.shared) {
    h_map[v] = k_map[v] = VertexId{next++};
  }
  for (VertexId v : pair.h.vertices()) {
    if (!h_map.contains(v)) h_map[v] = VertexId{next++};
  }
  for (VertexId v : pair.k.vertices()) {
    if (!k_map.contains(v)) k_map[v] = VertexId{next++};
  }
  GluedPair out;
  out.h = Relabel(pair.h, h_map);
  out.k = Relabel(pair.k, k_map);
  for (std::size_t i = 0; i < pair.shared.size(); ++i) {
    out.shared.push_back(VertexId{static_cast<std::int64_t>(i) + 1});
  }
  return out;
}

WeightedMultigraph GlueAlongShared(const GluedPair& pair) {
  ValidateGluedPair(pair);
  std::map<VertexId, VertexId> identity;
  for (VertexId v : pair.shared) identity[v] = v;
  return Glue(pair.h, pair.k, identity);
}

std::string WeightFactor::Describe() const {
  auto set = [](const std::vector<VertexId>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
      s += (i ? "," : "") + ToString(vs[i]);
    }
    return s + "}";
  };
  if (!roots) return "w_" + graph;
  if (roots->gamma == roots->gamma_prime) {
    return "w_{" + graph + "," + set(roots->gamma) + "}";
  }
  return "w_{" + graph + "," + set(roots->gamma) + "," +
         set(roots->gamma_prime) + "}";
}

namespace {

WeightFactor Evaluate(const WeightedMultigraph& g, std::string name,
                      std::optional<RootSpec> roots) {
  WeightFactor f;
  f.graph = std::move(name);
  f.roots = std::move(roots);
  if (!f.roots) {
    f.value = TreeWeightEnum(g);
    f.minor = TreeWeightMtt(g);
    f.witness_agrees = f.value == f.minor;
    return f;
  }
  f.value = ForestWeightEnum(g, *f.roots);
  f.minor = Minor(LaplacianMatrix(g), f.roots->gamma, f.roots->gamma_prime);
  f.witness_agrees = f.roots->gamma == f.roots->gamma_prime
                         ? f.value == f.minor
                         : Abs(f.value) == Abs(f.minor);
  return f;
}

std::vector<VertexId> Ids(std::initializer_list<std::int64_t> labels) {
  std::vector<VertexId> out;
  for (auto l : labels) out.push_back(VertexId{l});
  return out;
}

RootSpec Roots(std::initializer_list<std::int64_t> gamma,
               std::initializer_list<std::int64_t> gamma_prime) {
  return RootSpec{Ids(gamma), Ids(gamma_prime)};
}

// Pairs of (roots on H, roots on K); nullopt stands for the tree weight.
using TermSchema =
    std::vector<std::pair<std::optional<RootSpec>, std::optional<RootSpec>>>;

GluingReport Verify(const GluedPair& raw, std::size_t shared_count,
                    const TermSchema& schema) {
  if (raw.shared.size() != shared_count) {
    throw InvalidArgument("expected " + std::to_string(shared_count) +
                          " shared vertices, got " +
                          std::to_string(raw.shared.size()));
  }
  const GluedPair pair = NormalizeGluedPair(raw);
  const WeightedMultigraph g = GlueAlongShared(pair);

  GluingReport report;
  report.lhs = TreeWeightEnum(g);
  report.lhs_minor = TreeWeightMtt(g);
  report.witnesses_agree = report.lhs == report.lhs_minor;
  report.rhs = 0;
  for (const auto& [h_roots, k_roots] : schema) {
    IdentityTerm term{Evaluate(pair.h, "H", h_roots),
                      Evaluate(pair.k, "K", k_roots), 0};
    term.product = term.h.value * term.k.value;
    report.rhs += term.product;
    report.witnesses_agree = report.witnesses_agree &&
                             term.h.witness_agrees && term.k.witness_agrees;
    report.terms.push_back(std::move(term));
  }
  report.equal = report.lhs == report.rhs;
  return report;
}

}  // namespace

GluingReport VerifyTwoVertexGluing(const GluedPair& pair) {
  const RootSpec both = Roots({1, 2}, {1, 2});
  return Verify(pair, 2, {{std::nullopt, both}, {both, std::nullopt}});
}

GluingReport VerifyThreeVertexGluing(const GluedPair& pair) {
  const RootSpec all = Roots({1, 2, 3}, {1, 2, 3});
  return Verify(pair, 3,
                {
                    {std::nullopt, all},
                    {Roots({1, 2}, {1, 2}), Roots({1, 3}, {2, 3})},
                    {Roots({2, 3}, {2, 3}), Roots({1, 2}, {1, 3})},
                    {Roots({1, 3}, {1, 3}), Roots({1, 2}, {2, 3})},
                    {all, std::nullopt},
                });
}

BigInt GcdList(std::span<const BigInt> values) {
  if (values.empty()) throw InvalidArgument("gcd of an empty list");
  BigInt g = 0;
  for (const BigInt& v : values) {
    if (v < 0) throw InvalidArgument("gcd input must be nonnegative");
    g = boost::multiprecision::gcd(g, v);
  }
  return g;
}

std::string ToString(KrebesConclusion conclusion) {
  return conclusion == KrebesConclusion::kConsistent ? "consistent"
                                                     : "obstructed";
}

KrebesVerdict MakeKrebesVerdict(std::span<const BigInt> closure_determinants,
                                const BigInt& link_determinant) {
  if (link_determinant < 0) {
    throw InvalidArgument("link determinant must be nonnegative");
  }
  KrebesVerdict verdict;
  verdict.closure_determinants.assign(closure_determinants.begin(),
                                      closure_determinants.end());
  verdict.gcd = GcdList(closure_determinants);
  verdict.link_determinant = link_determinant;
  verdict.divides = verdict.gcd == 0 ? link_determinant == 0
                                     : link_determinant % verdict.gcd == 0;
  verdict.conclusion = verdict.divides ? KrebesConclusion::kConsistent
                                       : KrebesConclusion::kObstructed;
  return verdict;
}

}  // namespace tangletree
