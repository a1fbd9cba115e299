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

// JSON forms of graphs and verifier reports.
//
// Graph files: {"vertices":[1,2,...],"edges":[{"u":1,"v":2,"w":-1},...]}.
// Weights may also be given as decimal strings when they do not fit in 64
// bits; on output, integers that fit in int64 are written as JSON numbers and
// larger ones as decimal strings.

#ifndef TANGLETREE_JSON_IO_H_
#define TANGLETREE_JSON_IO_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "tangletree/bigint.h"
#include "tangletree/composition.h"
#include "tangletree/graph.h"

namespace tangletree {

nlohmann::json ToJson(const BigInt& value);
// Accepts a JSON integer or a decimal string.
BigInt BigIntFromJson(const nlohmann::json& value);

// Throws InvalidArgument on malformed JSON or a graph that fails BuildGraph.
WeightedMultigraph ParseGraphJson(std::string_view text);
nlohmann::json ToJson(const WeightedMultigraph& g);

// {"lhs":..., "lhs_minor":..., "terms":[...], "rhs":..., "equal":...,
//  "witnesses_agree":...}
nlohmann::json ToJson(const GluingReport& report);
nlohmann::json ToJson(const KrebesVerdict& verdict);

}  // namespace tangletree

#endif  // TANGLETREE_JSON_IO_H_
