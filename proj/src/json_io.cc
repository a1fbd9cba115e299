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

#include "tangletree/json_io.h"

#include <cstdint>
#include <limits>
#include <vector>

#include "tangletree/error.h"

namespace tangletree {

using nlohmann::json;

json ToJson(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(value));
  }
  return json(value.str());
}

BigInt BigIntFromJson(const json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return BigInt(value.get<std::uint64_t>());
    return BigInt(value.get<std::int64_t>());
  }
  if (value.is_string()) return ParseBigInt(value.get<std::string>());
  throw InvalidArgument("expected an integer, got " + value.dump());
}

namespace {

VertexId VertexFromJson(const json& value) {
  if (!value.is_number_integer()) {
    throw InvalidArgument("vertex labels must be integers, got " +
                          value.dump());
  }
  return VertexId{value.get<std::int64_t>()};
}

json RootsToJson(const std::vector<VertexId>& vs) {
  json out = json::array();
  for (VertexId v : vs) out.push_back(Label(v));
  return out;
}

json FactorJson(const WeightFactor& f) {
  json out{{"weight", f.Describe()}, {"graph", f.graph}};
  if (f.roots) {
    out["gamma"] = RootsToJson(f.roots->gamma);
    out["gamma_prime"] = RootsToJson(f.roots->gamma_prime);
  }
  out["value"] = ToJson(f.value);
  out["minor"] = ToJson(f.minor);
  out["witness_agrees"] = f.witness_agrees;
  return out;
}

}  // namespace

WeightedMultigraph ParseGraphJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("graph file is not valid JSON: ") +
                          e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") ||
      !doc["vertices"].is_array()) {
    throw InvalidArgument("graph file needs a \"vertices\" array");
  }
  std::vector<VertexId> vertices;
  for (const json& v : doc["vertices"]) vertices.push_back(VertexFromJson(v));

  std::vector<EdgeSpec> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) {
      throw InvalidArgument("\"edges\" must be an array");
    }
    for (const json& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("u") || !e.contains("v") ||
          !e.contains("w")) {
        throw InvalidArgument("each edge needs \"u\", \"v\" and \"w\"");
      }
      edges.push_back({VertexFromJson(e["u"]), VertexFromJson(e["v"]),
                       BigIntFromJson(e["w"])});
    }
  }
  return BuildGraph(std::move(vertices), edges);
}

json ToJson(const WeightedMultigraph& g) {
  json vertices = json::array();
  for (VertexId v : g.vertices()) vertices.push_back(Label(v));
  json edges = json::array();
  for (const WeightedEdge& e : g.edges()) {
    edges.push_back({{"u", Label(e.u)}, {"v", Label(e.v)}, {"w", ToJson(e.weight)}});
  }
  return json{{"vertices", vertices}, {"edges", edges}};
}

json ToJson(const GluingReport& report) {
  json terms = json::array();
  for (const IdentityTerm& t : report.terms) {
    terms.push_back({{"h", FactorJson(t.h)},
                     {"k", FactorJson(t.k)},
                     {"product", ToJson(t.product)}});
  }
  return json{{"lhs", ToJson(report.lhs)},
              {"lhs_minor", ToJson(report.lhs_minor)},
              {"terms", terms},
              {"rhs", ToJson(report.rhs)},
              {"equal", report.equal},
              {"witnesses_agree", report.witnesses_agree}};
}

json ToJson(const KrebesVerdict& verdict) {
  json dets = json::array();
  for (const BigInt& d : verdict.closure_determinants) dets.push_back(ToJson(d));
  return json{{"closure_determinants", dets},
              {"gcd", ToJson(verdict.gcd)},
              {"link_determinant", ToJson(verdict.link_determinant)},
              {"divides", verdict.divides},
              {"conclusion", ToString(verdict.conclusion)},
              {"theorem_applies", verdict.theorem_applies}};
}

}  // namespace tangletree
