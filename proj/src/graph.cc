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

#include "tangletree/graph.h"

#include <algorithm>
#include <set>
#include <utility>

#include "tangletree/error.h"
#include "union_find.h"

namespace tangletree {

std::string ToString(VertexId v) { return std::to_string(Label(v)); }

bool WeightedMultigraph::HasVertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t WeightedMultigraph::IndexOf(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw InvalidArgument("vertex " + ToString(v) + " is not in the graph");
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

WeightedMultigraph BuildGraph(std::vector<VertexId> vertices,
                              std::span<const EdgeSpec> edges) {
  WeightedMultigraph g;
  for (VertexId v : vertices) {
    if (Label(v) <= 0) {
      throw InvalidArgument("vertex labels must be positive, got " +
                            ToString(v));
    }
  }
  std::sort(vertices.begin(), vertices.end());
  auto dup = std::adjacent_find(vertices.begin(), vertices.end());
  if (dup != vertices.end()) {
    throw InvalidArgument("duplicate vertex label " + ToString(*dup));
  }
  g.vertices_ = std::move(vertices);
  g.edges_.reserve(edges.size());
  for (const EdgeSpec& e : edges) {
    if (!g.HasVertex(e.u) || !g.HasVertex(e.v)) {
      throw InvalidArgument("edge (" + ToString(e.u) + "," + ToString(e.v) +
                            ") has an endpoint outside the vertex set");
    }
    g.edges_.push_back(
        WeightedEdge{EdgeId{g.edges_.size()}, e.u, e.v, e.weight});
  }
  return g;
}

void ValidateRoots(const WeightedMultigraph& g, const RootSpec& roots) {
  if (roots.gamma.empty()) throw InvalidArgument("root set must be nonempty");
  if (roots.gamma.size() != roots.gamma_prime.size()) {
    throw InvalidArgument("gamma and gamma' must have equal size");
  }
  for (const auto* set : {&roots.gamma, &roots.gamma_prime}) {
    std::set<VertexId> seen;
    for (VertexId v : *set) {
      if (!g.HasVertex(v)) {
        throw InvalidArgument("root " + ToString(v) + " is not in the graph");
      }
      if (!seen.insert(v).second) {
        throw InvalidArgument("root " + ToString(v) + " repeated");
      }
    }
  }
}

namespace {

std::vector<EdgeSpec> SpecsOf(const WeightedMultigraph& g) {
  std::vector<EdgeSpec> specs;
  specs.reserve(g.num_edges());
  for (const WeightedEdge& e : g.edges()) specs.push_back({e.u, e.v, e.weight});
  return specs;
}

}  // namespace

WeightedMultigraph Glue(const WeightedMultigraph& h, const WeightedMultigraph& k,
                        const std::map<VertexId, VertexId>& identification) {
  std::set<VertexId> targets;
  for (const auto& [from, to] : identification) {
    if (!k.HasVertex(from)) {
      throw InvalidArgument("identified vertex " + ToString(from) +
                            " is not in the second graph");
    }
    if (!h.HasVertex(to)) {
      throw InvalidArgument("identified vertex " + ToString(to) +
                            " is not in the first graph");
    }
    if (!targets.insert(to).second) {
      throw InvalidArgument("two vertices glued onto " + ToString(to));
    }
  }
  auto relabel = [&](VertexId v) {
    auto it = identification.find(v);
    return it == identification.end() ? v : it->second;
  };

  std::vector<VertexId> vertices = h.vertices();
  for (VertexId v : k.vertices()) {
    if (identification.contains(v)) continue;
    if (h.HasVertex(v)) {
      throw InvalidArgument("label " + ToString(v) +
                            " occurs in both graphs but is not identified");
    }
    vertices.push_back(v);
  }
  std::vector<EdgeSpec> edges = SpecsOf(h);
  for (const WeightedEdge& e : k.edges()) {
    edges.push_back({relabel(e.u), relabel(e.v), e.weight});
  }
  return BuildGraph(std::move(vertices), edges);
}

WeightedMultigraph ContractVertices(const WeightedMultigraph& g,
                                    std::span<const VertexId> s) {
  if (s.empty()) throw InvalidArgument("contraction set must be nonempty");
  for (VertexId v : s) {
    if (!g.HasVertex(v)) {
      throw InvalidArgument("vertex " + ToString(v) + " is not in the graph");
    }
  }
  const std::set<VertexId> merged(s.begin(), s.end());
  const VertexId target = *merged.begin();
  auto relabel = [&](VertexId v) { return merged.contains(v) ? target : v; };

  std::vector<VertexId> vertices;
  for (VertexId v : g.vertices()) {
    if (v == target || !merged.contains(v)) vertices.push_back(v);
  }
  std::vector<EdgeSpec> edges;
  for (const WeightedEdge& e : g.edges()) {
    edges.push_back({relabel(e.u), relabel(e.v), e.weight});
  }
  return BuildGraph(std::move(vertices), edges);
}

namespace {

// Calls visit(edges) for every forest counted by roots. Each candidate is a
// (|V| - |gamma|)-subset of the non-loop edges; acyclicity is checked with a
// fresh union-find, and the root condition by requiring the gamma vertices
// (and separately the gamma' vertices) to sit in pairwise distinct trees.
// With exactly |gamma| trees that is the same as one root of each kind per
// tree.
template <typename Visit>
void ForEachForest(const WeightedMultigraph& g, const RootSpec& roots,
                   Visit&& visit) {
  ValidateRoots(g, roots);
  const std::size_t n = g.num_vertices();
  const std::size_t k = n - roots.gamma.size();

  std::vector<const WeightedEdge*> candidates;
  for (const WeightedEdge& e : g.edges()) {
    if (!e.is_loop()) candidates.push_back(&e);
  }
  if (k > candidates.size()) return;

  std::vector<std::size_t> gamma, gamma_prime;
  for (VertexId v : roots.gamma) gamma.push_back(g.IndexOf(v));
  for (VertexId v : roots.gamma_prime) gamma_prime.push_back(g.IndexOf(v));

  auto separated = [](internal::UnionFind& uf,
                      const std::vector<std::size_t>& set) {
    std::set<std::size_t> components;
    for (std::size_t v : set) {
      if (!components.insert(uf.Find(v)).second) return false;
    }
    return true;
  };

  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::vector<const WeightedEdge*> chosen(k);
  while (true) {
    internal::UnionFind uf(n);
    bool acyclic = true;
    for (std::size_t i = 0; i < k && acyclic; ++i) {
      const WeightedEdge& e = *candidates[pick[i]];
      acyclic = uf.Union(g.IndexOf(e.u), g.IndexOf(e.v));
      chosen[i] = &e;
    }
    if (acyclic && separated(uf, gamma) && separated(uf, gamma_prime)) {
      visit(std::span<const WeightedEdge* const>(chosen));
    }

    // Next k-combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == candidates.size() - k + (i - 1)) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::vector<SpanningForest> EnumerateForests(const WeightedMultigraph& g,
                                             const RootSpec& roots) {
  std::vector<SpanningForest> forests;
  ForEachForest(g, roots, [&](std::span<const WeightedEdge* const> edges) {
    SpanningForest f;
    for (const WeightedEdge* e : edges) f.edge_ids.push_back(e->id);
    forests.push_back(std::move(f));
  });
  return forests;
}

BigInt ForestWeightEnum(const WeightedMultigraph& g, const RootSpec& roots) {
  BigInt total = 0;
  ForEachForest(g, roots, [&](std::span<const WeightedEdge* const> edges) {
    BigInt product = 1;
    for (const WeightedEdge* e : edges) product *= e->weight;
    total += product;
  });
  return total;
}

BigInt TreeWeightEnum(const WeightedMultigraph& g) {
  if (g.empty()) return 0;
  return ForestWeightEnum(g, RootSpec::Rooted({g.vertices().front()}));
}

}  // namespace tangletree
