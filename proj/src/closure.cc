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
#include <map>
#include <set>

#include "tangletree/error.h"
#include "union_find.h"

namespace tangletree {

std::string ToString(const ClosurePattern& pattern) {
  std::string s;
  for (const auto& [a, b] : pattern.pairs) {
    s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return s;
}

std::string ClosureName(const ClosurePattern& pattern) {
  if (pattern.pairs == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}}) {
    return "numerator";
  }
  if (pattern.pairs == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}}) {
    return "denominator";
  }
  return ToString(pattern);
}

namespace {

// Non-crossing matchings of the consecutive positions lo..hi.
std::vector<std::vector<std::pair<int, int>>> Matchings(int lo, int hi) {
  if (lo > hi) return {{}};
  std::vector<std::vector<std::pair<int, int>>> out;
  for (int partner = lo + 1; partner <= hi; partner += 2) {
    for (const auto& inside : Matchings(lo + 1, partner - 1)) {
      for (const auto& outside : Matchings(partner + 1, hi)) {
        std::vector<std::pair<int, int>> m{{lo, partner}};
        m.insert(m.end(), inside.begin(), inside.end());
        m.insert(m.end(), outside.begin(), outside.end());
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<ClosurePattern> EnumerateClosures(int n) {
  if (n < 1) throw InvalidArgument("closures need n >= 1");
  std::vector<ClosurePattern> out;
  for (auto& m : Matchings(1, 2 * n)) {
    std::sort(m.begin(), m.end());
    out.push_back(ClosurePattern{std::move(m)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

void ValidateClosurePattern(const ClosurePattern& pattern, int n) {
  if (pattern.n() != n) {
    throw InvalidArgument("closure has " + std::to_string(pattern.n()) +
                          " arcs but the tangle has " + std::to_string(2 * n) +
                          " endpoints");
  }
  std::set<int> used;
  for (const auto& [a, b] : pattern.pairs) {
    for (int p : {a, b}) {
      if (p < 1 || p > 2 * n || !used.insert(p).second) {
        throw InvalidArgument("closure " + ToString(pattern) +
                              " is not a perfect matching");
      }
    }
  }
  for (const auto& [a, b] : pattern.pairs) {
    const auto [lo, hi] = std::minmax(a, b);
    for (const auto& [c, d] : pattern.pairs) {
      const bool c_in = lo < c && c < hi;
      const bool d_in = lo < d && d < hi;
      if (c_in != d_in) {
        throw InvalidArgument("closure " + ToString(pattern) +
                              " has crossing arcs");
      }
    }
  }
}

PlanarDiagramCode CloseTangle(const TangleCode& tangle,
                              const ClosurePattern& pattern) {
  ValidateClosurePattern(pattern, tangle.n());

  std::map<ArcLabel, std::size_t> index;
  std::vector<ArcLabel> labels;
  auto index_of = [&](ArcLabel a) {
    auto [it, inserted] = index.try_emplace(a, labels.size());
    if (inserted) labels.push_back(a);
    return it->second;
  };
  for (ArcLabel a : tangle.boundary()) index_of(a);
  for (const Crossing& x : tangle.crossings()) {
    for (ArcLabel a : x.arcs) index_of(a);
  }

  internal::UnionFind uf(labels.size());
  for (const auto& [a, b] : pattern.pairs) {
    uf.Union(index_of(tangle.boundary()[static_cast<std::size_t>(a - 1)]),
             index_of(tangle.boundary()[static_cast<std::size_t>(b - 1)]));
  }
  // Each merged class becomes one arc named by its smallest label.
  std::map<std::size_t, ArcLabel> name;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = name.try_emplace(uf.Find(i), labels[i]);
    if (!inserted) it->second = std::min(it->second, labels[i]);
  }
  std::set<std::size_t> touches_crossing;
  std::vector<Crossing> crossings = tangle.crossings();
  for (Crossing& x : crossings) {
    for (ArcLabel& a : x.arcs) {
      const std::size_t root = uf.Find(index.at(a));
      touches_crossing.insert(root);
      a = name.at(root);
    }
  }
  int loops = tangle.free_loops();
  for (const auto& [root, label] : name) {
    if (!touches_crossing.contains(root)) ++loops;
  }
  return PlanarDiagramCode::Create(std::move(crossings), loops);
}

std::vector<ClosureDeterminant> ClosureDeterminants(const TangleCode& tangle) {
  std::vector<ClosureDeterminant> out;
  for (ClosurePattern& p : EnumerateClosures(tangle.n())) {
    BigInt det = LinkDeterminant(CloseTangle(tangle, p));
    out.push_back({std::move(p), std::move(det)});
  }
  return out;
}

KrebesVerdict KrebesCheck(const TangleCode& tangle,
                          const PlanarDiagramCode& link) {
  std::vector<BigInt> dets;
  for (const auto& c : ClosureDeterminants(tangle)) dets.push_back(c.determinant);
  KrebesVerdict verdict = MakeKrebesVerdict(dets, LinkDeterminant(link));
  verdict.theorem_applies = tangle.n() == 2 || tangle.n() == 3;
  return verdict;
}

}  // namespace tangletree
