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

#include "tangletree/diagram.h"

#include <algorithm>
#include <string>
#include <utility>

#include "tangletree/error.h"
#include "tangletree/laplacian.h"
#include "union_find.h"

namespace tangletree {
namespace {

// Slot occurrence (vertex, slot) in a rotation system.
using Slot = std::pair<std::size_t, std::size_t>;

// Vertices with their incident arc labels listed counterclockwise. Each label
// occurs exactly twice overall.
struct RotationSystem {
  std::vector<std::vector<ArcLabel>> slots;
};

struct Orbits {
  // corners of each orbit; corner (v, k) sits between slots k and k+1 of v
  std::vector<std::vector<Slot>> faces;
  std::vector<std::vector<std::size_t>> face_of;  // [vertex][corner]
  std::vector<std::size_t> component_of_vertex;
  std::size_t num_components = 0;
};

void CheckMultiplicities(const std::map<ArcLabel, int>& counts) {
  for (const auto& [label, count] : counts) {
    if (label <= 0) {
      throw InvalidArgument("arc labels must be positive, got " +
                            std::to_string(label));
    }
    if (count != 2) {
      throw InvalidArgument("arc " + std::to_string(label) + " occurs " +
                            std::to_string(count) + " times, expected 2");
    }
  }
}

// Traces the corner walk and checks the Euler relation faces = E - V + 2 on
// every connected component, which holds exactly when the rotation system is
// planar.
Orbits TraceOrbits(const RotationSystem& rs) {
  const std::size_t nv = rs.slots.size();
  std::map<ArcLabel, std::vector<Slot>> occurrences;
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t k = 0; k < rs.slots[v].size(); ++k) {
      occurrences[rs.slots[v][k]].push_back({v, k});
    }
  }
  auto partner = [&](Slot s) {
    const auto& occ = occurrences.at(rs.slots[s.first][s.second]);
    return occ[0] == s ? occ[1] : occ[0];
  };

  Orbits out;
  internal::UnionFind uf(nv);
  for (const auto& [label, occ] : occurrences) uf.Union(occ[0].first, occ[1].first);
  std::map<std::size_t, std::size_t> component_index;
  out.component_of_vertex.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    auto [it, inserted] =
        component_index.try_emplace(uf.Find(v), component_index.size());
    out.component_of_vertex[v] = it->second;
  }
  out.num_components = component_index.size();

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  out.face_of.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    out.face_of[v].assign(rs.slots[v].size(), kUnset);
  }
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t k = 0; k < rs.slots[v].size(); ++k) {
      if (out.face_of[v][k] != kUnset) continue;
      const std::size_t id = out.faces.size();
      std::vector<Slot> orbit;
      Slot corner{v, k};
      while (out.face_of[corner.first][corner.second] == kUnset) {
        out.face_of[corner.first][corner.second] = id;
        orbit.push_back(corner);
        const std::size_t degree = rs.slots[corner.first].size();
        corner = partner({corner.first, (corner.second + 1) % degree});
      }
      out.faces.push_back(std::move(orbit));
    }
  }

  std::vector<long> half_edges(out.num_components, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    half_edges[out.component_of_vertex[v]] +=
        static_cast<long>(rs.slots[v].size());
  }
  std::vector<long> vertices(out.num_components, 0);
  for (std::size_t v = 0; v < nv; ++v) ++vertices[out.component_of_vertex[v]];
  std::vector<long> faces(out.num_components, 0);
  for (const auto& orbit : out.faces) {
    ++faces[out.component_of_vertex[orbit.front().first]];
  }
  for (std::size_t c = 0; c < out.num_components; ++c) {
    const long want = half_edges[c] / 2 - vertices[c] + 2;
    if (faces[c] != want) {
      throw InvalidArgument("code is not planar: a component traces " +
                            std::to_string(faces[c]) + " faces, expected " +
                            std::to_string(want));
    }
  }
  return out;
}

RotationSystem RotationOf(const std::vector<Crossing>& crossings) {
  RotationSystem rs;
  for (const Crossing& x : crossings) {
    rs.slots.emplace_back(x.arcs.begin(), x.arcs.end());
  }
  return rs;
}

}  // namespace

PlanarDiagramCode PlanarDiagramCode::Create(std::vector<Crossing> crossings,
                                            int free_loops) {
  if (free_loops < 0) throw InvalidArgument("negative free loop count");
  if (crossings.empty() && free_loops == 0) {
    throw InvalidArgument("empty diagram");
  }
  std::map<ArcLabel, int> counts;
  for (const Crossing& x : crossings) {
    for (ArcLabel a : x.arcs) ++counts[a];
  }
  CheckMultiplicities(counts);
  TraceOrbits(RotationOf(crossings));

  PlanarDiagramCode code;
  code.crossings_ = std::move(crossings);
  code.free_loops_ = free_loops;
  return code;
}

FaceStructure TraceFaces(const PlanarDiagramCode& code) {
  const Orbits orbits = TraceOrbits(RotationOf(code.crossings()));
  FaceStructure out;
  out.num_components = orbits.num_components;
  out.face_of_corner.resize(4 * code.crossings().size());
  for (std::size_t c = 0; c < code.crossings().size(); ++c) {
    for (int k = 0; k < 4; ++k) {
      out.face_of_corner[4 * c + static_cast<std::size_t>(k)] =
          orbits.face_of[c][static_cast<std::size_t>(k)];
    }
  }
  for (const auto& orbit : orbits.faces) {
    Face face;
    face.component = orbits.component_of_vertex[orbit.front().first];
    for (const auto& [c, k] : orbit) {
      face.corners.push_back(Corner{c, static_cast<int>(k)});
    }
    out.faces.push_back(std::move(face));
  }
  for (int j = 0; j < code.free_loops(); ++j) {
    const std::size_t component = out.num_components++;
    const std::size_t disk = out.faces.size();
    out.faces.push_back(Face{{}, component});
    out.faces.push_back(Face{{}, component});
    out.loop_faces.push_back({disk, disk + 1});
  }
  return out;
}

Shading CheckerboardShading(const PlanarDiagramCode& code,
                            const FaceStructure& faces,
                            std::optional<ArcLabel> outer_arc) {
  const std::size_t nf = faces.faces.size();
  const std::size_t nc = faces.num_components;

  // Faces on the two sides of an arc must differ: corners k and k+1 of a
  // crossing lie on opposite sides of slot k+1.
  std::vector<std::vector<std::size_t>> neighbours(nf);
  for (std::size_t c = 0; c < code.crossings().size(); ++c) {
    for (int k = 0; k < 4; ++k) {
      const std::size_t a = faces.FaceAt(c, k);
      const std::size_t b = faces.FaceAt(c, (k + 1) % 4);
      neighbours[a].push_back(b);
      neighbours[b].push_back(a);
    }
  }
  for (const auto& [disk, outside] : faces.loop_faces) {
    neighbours[disk].push_back(outside);
    neighbours[outside].push_back(disk);
  }

  std::vector<int> colour(nf, -1);
  for (std::size_t start = 0; start < nf; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t f = stack.back();
      stack.pop_back();
      for (std::size_t g : neighbours[f]) {
        if (colour[g] == -1) {
          colour[g] = 1 - colour[f];
          stack.push_back(g);
        } else if (colour[g] == colour[f]) {
          throw InternalError("face adjacency is not 2-colourable");
        }
      }
    }
  }

  Shading shading;
  shading.outer_face.assign(nc, nf);
  for (std::size_t f = 0; f < nf; ++f) {
    const std::size_t c = faces.faces[f].component;
    std::size_t& best = shading.outer_face[c];
    if (best == nf ||
        faces.faces[f].corners.size() > faces.faces[best].corners.size()) {
      best = f;
    }
  }
  for (const auto& [disk, outside] : faces.loop_faces) {
    shading.outer_face[faces.faces[disk].component] = outside;
  }
  if (outer_arc) {
    std::optional<std::size_t> chosen;
    for (std::size_t c = 0; c < code.crossings().size() && !chosen; ++c) {
      for (int k = 0; k < 4 && !chosen; ++k) {
        if (code.crossings()[c].arcs[static_cast<std::size_t>(k)] ==
            *outer_arc) {
          chosen = faces.FaceAt(c, k);
        }
      }
    }
    if (!chosen) {
      throw InvalidArgument("arc " + std::to_string(*outer_arc) +
                            " does not occur in the diagram");
    }
    shading.outer_face[faces.faces[*chosen].component] = *chosen;
  }

  shading.shaded.resize(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    const std::size_t outer = shading.outer_face[faces.faces[f].component];
    shading.shaded[f] = colour[f] != colour[outer];
  }
  return shading;
}

TaitGraph BuildTaitGraph(const PlanarDiagramCode& code,
                         const TaitOptions& options) {
  const FaceStructure faces = TraceFaces(code);
  const Shading shading = CheckerboardShading(code, faces, options.outer_arc);
  const bool want_shaded = options.side == TaitSide::kShaded;
  auto on_side = [&](std::size_t f) { return shading.shaded[f] == want_shaded; };

  TaitGraph tait;
  std::map<std::size_t, VertexId> vertex_of_face;
  std::vector<VertexId> vertices;
  for (std::size_t f = 0; f < faces.faces.size(); ++f) {
    if (!on_side(f)) continue;
    const VertexId v{static_cast<std::int64_t>(vertices.size()) + 1};
    vertices.push_back(v);
    vertex_of_face[f] = v;
    tait.face_of_vertex[v] = f;
  }

  std::vector<EdgeSpec> edges;
  for (std::size_t c = 0; c < code.crossings().size(); ++c) {
    const int q = on_side(faces.FaceAt(c, 0)) ? 0 : 1;
    const std::size_t a = faces.FaceAt(c, q);
    const std::size_t b = faces.FaceAt(c, q + 2);
    if (!on_side(a) || !on_side(b)) {
      throw InternalError("crossing quadrants do not alternate");
    }
    edges.push_back({vertex_of_face.at(a), vertex_of_face.at(b),
                     BigInt(q == 0 ? 1 : -1)});
    tait.crossing_of_edge.push_back(c);
  }
  tait.graph = BuildGraph(std::move(vertices), edges);
  return tait;
}

BigInt LinkDeterminant(const PlanarDiagramCode& code,
                       const TaitOptions& options) {
  const TaitGraph tait = BuildTaitGraph(code, options);
  return Abs(TreeWeightMtt(tait.graph));
}

TangleCode TangleCode::Create(std::vector<Crossing> crossings,
                              std::vector<ArcLabel> boundary, int free_loops) {
  if (free_loops < 0) throw InvalidArgument("negative free loop count");
  if (boundary.empty() || boundary.size() % 2 != 0) {
    throw InvalidArgument("a tangle needs an even, nonzero number of "
                          "boundary points, got " +
                          std::to_string(boundary.size()));
  }
  std::map<ArcLabel, int> counts;
  for (const Crossing& x : crossings) {
    for (ArcLabel a : x.arcs) ++counts[a];
  }
  for (ArcLabel a : boundary) ++counts[a];
  CheckMultiplicities(counts);

  // Collapsing the outside of the disk to a point gives one more vertex whose
  // counterclockwise rotation is the clockwise boundary order.
  RotationSystem rs = RotationOf(crossings);
  rs.slots.push_back(boundary);
  TraceOrbits(rs);

  TangleCode t;
  t.crossings_ = std::move(crossings);
  t.boundary_ = std::move(boundary);
  t.free_loops_ = free_loops;
  return t;
}

}  // namespace tangletree
