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

// Randomized property suites behind the `selftest` command.

#ifndef TANGLETREE_SELFTEST_H_
#define TANGLETREE_SELFTEST_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tangletree/graph.h"
#include "tangletree/laplacian.h"

namespace tangletree {

inline constexpr std::uint64_t kDefaultSeed = 20260115;

enum class Suite {
  kMatrixTree,    // enumeration vs principal minors, contraction identity
  kTwoVertexGluing,
  kThreeVertexGluing,
  kTangleClosures,  // gcd of closure dets divides each; dual shading
};

std::string ToString(Suite suite);
std::vector<Suite> AllSuites();

struct SelftestOptions {
  int iterations = 100;
  std::uint64_t seed = kDefaultSeed;
  // Where counterexamples are written; nothing is written when unset.
  std::optional<std::filesystem::path> dump_dir;
  // Laplacian used by the minor-based checks. Replaceable so the harness
  // itself can be mutation tested. Must return a labelled matrix.
  std::function<IntegerMatrix(const WeightedMultigraph&)> laplacian;
};

struct SuiteResult {
  Suite suite;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // one line per failed iteration
  std::vector<std::filesystem::path> dumps;
};

// Runs options.iterations instances of one suite. The instance stream depends
// only on (suite, seed).
SuiteResult RunSuite(Suite suite, const SelftestOptions& options);

struct SelftestReport {
  std::vector<SuiteResult> suites;

  bool ok() const;
  std::string Format() const;
};

SelftestReport RunSelftest(const SelftestOptions& options);

}  // namespace tangletree

#endif  // TANGLETREE_SELFTEST_H_
