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

// Edge-weighted multigraphs and the brute-force forest enumeration that
// defines tree weights and rooted/two-sided forest weights.
//
// For a graph G with integer edge weights w_e, the tree weight is the sum over
// spanning trees T of the product of w_e over the edges of T. For equal-size
// vertex sets gamma and gamma', the forest weight sums the same products over
// spanning forests whose every tree holds exactly one vertex of gamma and
// exactly one vertex of gamma'. A vertex lying in both sets may play both
// roles inside one tree.

#ifndef TANGLETREE_GRAPH_H_
#define TANGLETREE_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tangletree/bigint.h"

namespace tangletree {

// Positive integer vertex label.
enum class VertexId : std::int64_t {};
// Position of an edge in its graph's edge list.
enum class EdgeId : std::size_t {};

constexpr std::int64_t Label(VertexId v) { return static_cast<std::int64_t>(v); }
constexpr std::size_t Index(EdgeId e) { return static_cast<std::size_t>(e); }

std::string ToString(VertexId v);

struct EdgeSpec {
  VertexId u;
  VertexId v;
  BigInt weight;
};

struct WeightedEdge {
  EdgeId id;
  VertexId u;
  VertexId v;
  BigInt weight;

  bool is_loop() const { return u == v; }

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Immutable after construction. Vertices are kept in ascending label order;
// edge ids are 0..m-1 in the order the edges were supplied.
class WeightedMultigraph {
 public:
  // The empty graph.
  WeightedMultigraph() = default;

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  bool HasVertex(VertexId v) const;
  // Position of v in vertices(). Throws InvalidArgument if v is absent.
  std::size_t IndexOf(VertexId v) const;

  friend bool operator==(const WeightedMultigraph&,
                         const WeightedMultigraph&) = default;

 private:
  friend WeightedMultigraph BuildGraph(std::vector<VertexId> vertices,
                                       std::span<const EdgeSpec> edges);

  std::vector<VertexId> vertices_;
  std::vector<WeightedEdge> edges_;
};

// Throws InvalidArgument on a duplicate or non-positive label, or on an edge
// endpoint outside the vertex list.
WeightedMultigraph BuildGraph(std::vector<VertexId> vertices,
                              std::span<const EdgeSpec> edges);

// Vertex sets selecting a forest class. gamma == gamma_prime is the rooted
// case.
struct RootSpec {
  std::vector<VertexId> gamma;
  std::vector<VertexId> gamma_prime;

  static RootSpec Rooted(std::vector<VertexId> roots) {
    return RootSpec{roots, roots};
  }
};

// Throws InvalidArgument unless both sets are nonempty, of equal size, free
// of repeats and contained in g's vertex set.
void ValidateRoots(const WeightedMultigraph& g, const RootSpec& roots);

struct SpanningForest {
  std::vector<EdgeId> edge_ids;  // ascending

  friend bool operator==(const SpanningForest&, const SpanningForest&) = default;
};

// Union of h and k along the shared vertices. identification maps each shared
// label of k to the label of the vertex of h it is glued to; every other label
// of k is carried over unchanged and must not occur in h. The result holds the
// edges of h followed by the (relabelled) edges of k.
WeightedMultigraph Glue(const WeightedMultigraph& h, const WeightedMultigraph& k,
                        const std::map<VertexId, VertexId>& identification);

// Merges every vertex of s into the lowest label of s. Edges with both ends in
// s become loops and are kept.
WeightedMultigraph ContractVertices(const WeightedMultigraph& g,
                                    std::span<const VertexId> s);

// All spanning forests of g selected by roots, in lexicographic order of their
// edge-id lists. Loops never take part.
std::vector<SpanningForest> EnumerateForests(const WeightedMultigraph& g,
                                             const RootSpec& roots);

// Sum over spanning trees of the product of edge weights. 0 for the empty and
// for disconnected graphs, 1 for a single vertex.
BigInt TreeWeightEnum(const WeightedMultigraph& g);

// Signed forest weight over EnumerateForests(g, roots).
BigInt ForestWeightEnum(const WeightedMultigraph& g, const RootSpec& roots);

}  // namespace tangletree

#endif  // TANGLETREE_GRAPH_H_
