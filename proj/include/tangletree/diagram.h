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

// Planar diagram (PD) codes for links and tangles, face tracing, checkerboard
// shading and Tait graphs.
//
// A crossing lists the four arc labels around it counterclockwise, starting
// at the incoming understrand: slots 0 and 2 are the understrand, slots 1
// and 3 the overstrand. Corner k of a crossing is the quadrant between slot k
// and slot k+1 (mod 4).
//
// Tait edge signs: an edge gets weight +1 when rotating the understrand
// counterclockwise onto the overstrand sweeps the quadrants on the chosen
// side of the shading (corners 0 and 2), and -1 otherwise. Only |w| of the
// resulting tree weight is a link invariant; the convention just has to be
// applied uniformly.

#ifndef TANGLETREE_DIAGRAM_H_
#define TANGLETREE_DIAGRAM_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tangletree/bigint.h"
#include "tangletree/graph.h"

namespace tangletree {

using ArcLabel = std::int64_t;

struct Crossing {
  std::array<ArcLabel, 4> arcs;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// A validated link diagram: every arc label occurs in exactly two crossing
// slots, and every connected piece of the diagram traces to a planar face
// structure (crossings + 2 faces per piece). Crossingless components are kept
// as a count.
class PlanarDiagramCode {
 public:
  // Throws InvalidArgument on a non-positive label, a label multiplicity other
  // than two, a negative loop count, an empty diagram, or a code that does not
  // trace to a planar diagram.
  static PlanarDiagramCode Create(std::vector<Crossing> crossings,
                                  int free_loops = 0);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int free_loops() const { return free_loops_; }

  friend bool operator==(const PlanarDiagramCode&,
                         const PlanarDiagramCode&) = default;

 private:
  PlanarDiagramCode() = default;

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
};

struct Corner {
  std::size_t crossing;
  int index;  // 0..3, quadrant between slot index and slot index+1

  friend bool operator==(const Corner&, const Corner&) = default;
};

struct Face {
  std::vector<Corner> corners;  // in walk order; empty for free-loop faces
  // Connected piece of the diagram this face belongs to. Pieces with
  // crossings come first; each free loop is a piece of its own.
  std::size_t component = 0;
};

struct FaceStructure {
  std::vector<Face> faces;
  // face_of_corner[4 * crossing + index]
  std::vector<std::size_t> face_of_corner;
  std::size_t num_components = 0;
  // For the free loop j: faces[loop_faces[j][0]] is the disk it bounds,
  // faces[loop_faces[j][1]] the region outside it.
  std::vector<std::array<std::size_t, 2>> loop_faces;

  std::size_t FaceAt(std::size_t crossing, int index) const {
    return face_of_corner[4 * crossing + static_cast<std::size_t>(index)];
  }
};

// Faces are the orbits of the corner walk: leave corner (c, k) along slot
// k+1, arrive at the other occurrence (c', j) of that arc, continue in corner
// (c', j). Face ids follow the first corner reached when scanning corners in
// (crossing, index) order; free-loop faces come last, two per loop.
FaceStructure TraceFaces(const PlanarDiagramCode& code);

struct Shading {
  std::vector<bool> shaded;  // per face id
  // Per component, the face taken as the unbounded one (always unshaded).
  std::vector<std::size_t> outer_face;
};

// Two-colours the faces so that the two sides of every arc differ. In each
// component the unbounded face is the one with the most corners (lowest id on
// ties) unless outer_arc names an arc of that component, in which case it is
// the face on the counterclockwise side of the arc's first slot occurrence
// (lowest crossing, then lowest slot). Free-loop disks are shaded.
Shading CheckerboardShading(const PlanarDiagramCode& code,
                            const FaceStructure& faces,
                            std::optional<ArcLabel> outer_arc = std::nullopt);

enum class TaitSide { kShaded, kUnshaded };

struct TaitGraph {
  WeightedMultigraph graph;
  std::map<VertexId, std::size_t> face_of_vertex;
  std::vector<std::size_t> crossing_of_edge;  // indexed by edge id
};

struct TaitOptions {
  TaitSide side = TaitSide::kShaded;
  std::optional<ArcLabel> outer_arc;
};

// One vertex per face on the chosen side (labels 1, 2, ... in face id order),
// one edge per crossing joining the two chosen-side faces at it; a loop when
// both quadrants belong to the same face.
TaitGraph BuildTaitGraph(const PlanarDiagramCode& code,
                         const TaitOptions& options = {});

// |tree weight| of the Tait graph, through the Laplacian minor. A single free
// loop gives 1; any split diagram, free loops included, gives 0.
BigInt LinkDeterminant(const PlanarDiagramCode& code,
                       const TaitOptions& options = {});

// A 2n-tangle. boundary lists the arc labels at the endpoints clockwise from
// the top-left one. A label occurring twice on the boundary is a strand
// without crossings.
class TangleCode {
 public:
  // Throws InvalidArgument on an odd or empty boundary, a label whose total
  // multiplicity (crossing slots plus boundary) is not two, a negative loop
  // count, or a diagram that is not planar in the disk.
  static TangleCode Create(std::vector<Crossing> crossings,
                           std::vector<ArcLabel> boundary, int free_loops = 0);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<ArcLabel>& boundary() const { return boundary_; }
  int free_loops() const { return free_loops_; }
  // Half the number of endpoints.
  int n() const { return static_cast<int>(boundary_.size() / 2); }

  friend bool operator==(const TangleCode&, const TangleCode&) = default;

 private:
  TangleCode() = default;

  std::vector<Crossing> crossings_;
  std::vector<ArcLabel> boundary_;
  int free_loops_ = 0;
};

}  // namespace tangletree

#endif  // TANGLETREE_DIAGRAM_H_
