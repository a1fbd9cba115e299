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

// Seeded random instances for the property suites.

#ifndef TANGLETREE_GENERATORS_H_
#define TANGLETREE_GENERATORS_H_

#include <cstdint>
#include <random>

#include "tangletree/composition.h"
#include "tangletree/diagram.h"
#include "tangletree/graph.h"

namespace tangletree {

using Rng = std::mt19937_64;

struct RandomGraphOptions {
  int min_vertices = 1;
  int max_vertices = 8;
  int max_edges = 12;
  int min_weight = -3;
  int max_weight = 3;
};

// Labels first_label, first_label+1, ... Endpoints are drawn uniformly, so
// loops and parallel edges occur.
WeightedMultigraph RandomGraph(Rng& rng, const RandomGraphOptions& options,
                               std::int64_t first_label = 1);

struct RandomGluingOptions {
  int shared = 2;
  int max_side_vertices = 6;  // shared vertices included
  int max_side_edges = 8;
  int min_weight = -3;
  int max_weight = 3;
};

// Shared vertices are 1..shared; the private vertices of h and k follow with
// disjoint labels.
GluedPair RandomGluedPair(Rng& rng, const RandomGluingOptions& options);

// A planar 2n-tangle: a random crossingless matching of the endpoints
// followed by the given number of crossings, each added just outside the disk
// between two cyclically adjacent endpoints with a random over/under choice.
TangleCode RandomTangle(Rng& rng, int n, int crossings);

}  // namespace tangletree

#endif  // TANGLETREE_GENERATORS_H_
