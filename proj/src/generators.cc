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

#include "tangletree/generators.h"

#include <algorithm>
#include <vector>

#include "tangletree/closure.h"
#include "tangletree/error.h"

namespace tangletree {
namespace {

int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

WeightedMultigraph RandomGraph(Rng& rng, const RandomGraphOptions& options,
                               std::int64_t first_label) {
  const int n = Uniform(rng, options.min_vertices, options.max_vertices);
  const int m = Uniform(rng, std::min(n - 1, options.max_edges),
                        options.max_edges);
  std::vector<VertexId> vertices;
  for (int i = 0; i < n; ++i) vertices.push_back(VertexId{first_label + i});
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < m; ++i) {
    edges.push_back({vertices[static_cast<std::size_t>(Uniform(rng, 0, n - 1))],
                     vertices[static_cast<std::size_t>(Uniform(rng, 0, n - 1))],
                     BigInt(Uniform(rng, options.min_weight, options.max_weight))});
  }
  return BuildGraph(std::move(vertices), edges);
}

GluedPair RandomGluedPair(Rng& rng, const RandomGluingOptions& options) {
  if (options.shared < 1 || options.max_side_vertices < options.shared) {
    throw InvalidArgument("side graphs must be able to hold the shared set");
  }
  std::int64_t next = options.shared + 1;
  auto side = [&]() {
    const int extra = Uniform(rng, 0, options.max_side_vertices - options.shared);
    std::vector<VertexId> vertices;
    for (int i = 1; i <= options.shared; ++i) vertices.push_back(VertexId{i});
    for (int i = 0; i < extra; ++i) vertices.push_back(VertexId{next++});
    const int n = static_cast<int>(vertices.size());
    const int m = Uniform(rng, std::min(n - 1, options.max_side_edges),
                          options.max_side_edges);
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < m; ++i) {
      edges.push_back(
          {vertices[static_cast<std::size_t>(Uniform(rng, 0, n - 1))],
           vertices[static_cast<std::size_t>(Uniform(rng, 0, n - 1))],
           BigInt(Uniform(rng, options.min_weight, options.max_weight))});
    }
    return BuildGraph(std::move(vertices), edges);
  };
  GluedPair pair;
  pair.h = side();
  pair.k = side();
  for (int i = 1; i <= options.shared; ++i) pair.shared.push_back(VertexId{i});
  return pair;
}

TangleCode RandomTangle(Rng& rng, int n, int crossings) {
  const auto matchings = EnumerateClosures(n);
  const ClosurePattern& start = matchings[static_cast<std::size_t>(
      Uniform(rng, 0, static_cast<int>(matchings.size()) - 1))];

  ArcLabel next = 1;
  std::vector<ArcLabel> boundary(static_cast<std::size_t>(2 * n));
  for (const auto& [a, b] : start.pairs) {
    boundary[static_cast<std::size_t>(a - 1)] = next;
    boundary[static_cast<std::size_t>(b - 1)] = next;
    ++next;
  }
  std::vector<Crossing> xs;
  for (int i = 0; i < crossings; ++i) {
    // Endpoints i (left) and i+1 (right) in clockwise order; the new crossing
    // sits outside between them and hands out two new endpoints p, q.
    const std::size_t left = static_cast<std::size_t>(Uniform(rng, 0, 2 * n - 1));
    const std::size_t right = (left + 1) % boundary.size();
    const ArcLabel a = boundary[left];
    const ArcLabel b = boundary[right];
    const ArcLabel p = next++;
    const ArcLabel q = next++;
    // Counterclockwise around the crossing: a, b, q, p. Strands a-q and b-p.
    xs.push_back(Uniform(rng, 0, 1) ? Crossing{{a, b, q, p}}
                                    : Crossing{{b, q, p, a}});
    boundary[left] = p;
    boundary[right] = q;
  }
  return TangleCode::Create(std::move(xs), std::move(boundary));
}

}  // namespace tangletree
