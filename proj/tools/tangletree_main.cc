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

// Command-line front end: tree and forest weights, link determinants, Tait
// graphs, tangle closures, embedding obstructions and the property suites.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tangletree/closure.h"
#include "tangletree/composition.h"
#include "tangletree/diagram.h"
#include "tangletree/error.h"
#include "tangletree/graph.h"
#include "tangletree/json_io.h"
#include "tangletree/laplacian.h"
#include "tangletree/pd_io.h"
#include "tangletree/selftest.h"

namespace tangletree {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitObstructed = 1;
constexpr int kExitSelftestFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDisagreement = 3;

constexpr char kFormatHelp[] = R"(Input formats
  Graph files are JSON:
    {"vertices":[1,2,3],"edges":[{"u":1,"v":2,"w":-1},...]}
  Vertex labels are positive integers, weights any integer (decimal strings
  allowed for large values); repeated edges are parallel edges.

  PD files hold one statement per line:
    X a b c d     crossing; arcs listed counterclockwise starting at the
                  incoming understrand (a, c under; b, d over)
    L k           k crossingless loops
    B p1 ... p2n  tangle boundary, clockwise from the top-left endpoint
                  (tangle files only, exactly once)
  '#' starts a comment; blank lines are ignored.

Tait graph sign convention
  Vertices are the shaded faces; the unbounded face (most corners unless
  --outer-arc says otherwise) is unshaded. A crossing's edge weighs +1 when
  turning the understrand counterclockwise onto the overstrand sweeps the
  shaded quadrants, -1 otherwise.

Exit codes: 0 success, 1 obstructed / selftest failure, 2 bad input,
3 disagreement between computation routes.)";

class IoError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<VertexId> ToVertices(const std::vector<std::int64_t>& labels) {
  std::vector<VertexId> out;
  for (auto l : labels) out.push_back(VertexId{l});
  return out;
}

int TreeWeight(const std::string& path, const std::string& method,
               bool print_laplacian) {
  const WeightedMultigraph g = ParseGraphJson(ReadFile(path));
  if (print_laplacian) std::cout << FormatMatrix(LaplacianMatrix(g).matrix());
  if (method == "enum") {
    std::cout << TreeWeightEnum(g) << '\n';
    return kExitOk;
  }
  if (g.empty()) throw InvalidArgument("the matrix-tree route needs a vertex");
  if (method == "mtt") {
    std::cout << TreeWeightMtt(g) << '\n';
    return kExitOk;
  }
  const BigInt by_enum = TreeWeightEnum(g);
  const BigInt by_minor = TreeWeightMtt(g);
  std::cout << "enum: " << by_enum << '\n'
            << "mtt: " << by_minor << '\n'
            << "agree: " << (by_enum == by_minor ? "yes" : "no") << '\n';
  return by_enum == by_minor ? kExitOk : kExitDisagreement;
}

int ForestWeight(const std::string& path, const std::vector<std::int64_t>& gamma,
                 const std::vector<std::int64_t>& gamma_prime) {
  const WeightedMultigraph g = ParseGraphJson(ReadFile(path));
  RootSpec roots{ToVertices(gamma),
                 ToVertices(gamma_prime.empty() ? gamma : gamma_prime)};
  const BigInt weight = ForestWeightEnum(g, roots);
  std::cout << weight << '\n';
  if (roots.gamma != roots.gamma_prime) return kExitOk;
  const BigInt minor = RootedForestWeightMtt(g, roots.gamma);
  std::cout << "principal minor: " << minor << " ("
            << (minor == weight ? "agrees" : "DISAGREES") << ")\n";
  return minor == weight ? kExitOk : kExitDisagreement;
}

TaitOptions MakeTaitOptions(bool dual, std::int64_t outer_arc) {
  TaitOptions options;
  options.side = dual ? TaitSide::kUnshaded : TaitSide::kShaded;
  if (outer_arc > 0) options.outer_arc = outer_arc;
  return options;
}

int Det(const std::string& path, const TaitOptions& options) {
  std::cout << LinkDeterminant(ParsePd(ReadFile(path)), options) << '\n';
  return kExitOk;
}

int Tait(const std::string& path, const std::string& out_path,
         const TaitOptions& options) {
  const TaitGraph tait = BuildTaitGraph(ParsePd(ReadFile(path)), options);
  std::cout << "vertices: " << tait.graph.num_vertices() << '\n'
            << "edges: " << tait.graph.num_edges() << '\n'
            << "goeritz matrix:\n"
            << FormatMatrix(LaplacianMatrix(tait.graph).matrix());
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot write " + out_path);
    out << ToJson(tait.graph).dump(2) << '\n';
  }
  return kExitOk;
}

int Closures(const std::string& path) {
  const TangleCode tangle = ParseTangle(ReadFile(path));
  std::vector<BigInt> dets;
  for (const auto& c : ClosureDeterminants(tangle)) {
    const std::string name = ClosureName(c.pattern);
    if (name != ToString(c.pattern)) std::cout << name << ' ';
    std::cout << ToString(c.pattern) << ' ' << c.determinant << '\n';
    dets.push_back(c.determinant);
  }
  std::cout << "gcd " << GcdList(dets) << '\n';
  return kExitOk;
}

int Krebes(const std::string& tangle_path, const std::string& link_path,
           bool as_json) {
  const TangleCode tangle = ParseTangle(ReadFile(tangle_path));
  const PlanarDiagramCode link = ParsePd(ReadFile(link_path));
  const KrebesVerdict verdict = KrebesCheck(tangle, link);
  if (as_json) {
    std::cout << ToJson(verdict).dump() << '\n';
  } else {
    std::cout << "closure determinants:";
    for (const BigInt& d : verdict.closure_determinants) std::cout << ' ' << d;
    std::cout << '\n'
              << "gcd: " << verdict.gcd << '\n'
              << "link determinant: " << verdict.link_determinant << '\n';
  }
  if (!verdict.theorem_applies) {
    std::cerr << "gcd computed, theorem not asserted by this tool ("
              << 2 * tangle.n() << " endpoints; only 4 and 6 are covered)\n";
    return kExitBadInput;
  }
  if (!as_json) std::cout << ToString(verdict.conclusion) << '\n';
  return verdict.conclusion == KrebesConclusion::kConsistent ? kExitOk
                                                             : kExitObstructed;
}

int VerifyGluing(const std::string& h_path, const std::string& k_path,
                 const std::vector<std::int64_t>& shared) {
  GluedPair pair{ParseGraphJson(ReadFile(h_path)),
                 ParseGraphJson(ReadFile(k_path)), ToVertices(shared)};
  GluingReport report;
  if (shared.size() == 2) {
    report = VerifyTwoVertexGluing(pair);
  } else if (shared.size() == 3) {
    report = VerifyThreeVertexGluing(pair);
  } else {
    throw InvalidArgument("gluing identities cover 2 or 3 shared vertices");
  }
  std::cout << ToJson(report).dump() << '\n';
  return report.equal && report.witnesses_agree ? kExitOk : kExitDisagreement;
}

int Selftest(int iterations, std::uint64_t seed, const std::string& dump_dir) {
  SelftestOptions options;
  options.iterations = iterations;
  options.seed = seed;
  if (!dump_dir.empty()) options.dump_dir = dump_dir;
  const SelftestReport report = RunSelftest(options);
  std::cout << "seed " << seed << ", " << iterations << " iterations\n"
            << report.Format();
  return report.ok() ? kExitOk : kExitSelftestFailed;
}

int Main(int argc, char** argv) {
  CLI::App app{"Spanning-forest weights, link determinants and tangle "
               "embedding obstructions"};
  app.footer(kFormatHelp);
  app.require_subcommand(1);

  std::string graph_path, pd_path, out_path, tangle_path, link_path;
  std::string h_path, k_path, dump_dir;
  std::string method = "mtt";
  bool print_laplacian = false, dual = false, as_json = false;
  std::int64_t outer_arc = 0;
  std::vector<std::int64_t> gamma, gamma_prime, shared;
  int iterations = 100;
  std::uint64_t seed = kDefaultSeed;

  auto* tree = app.add_subcommand("tree-weight", "Tree weight of a graph");
  tree->add_option("graph", graph_path, "Graph JSON file")->required();
  tree->add_option("--method", method, "enum, mtt or both")
      ->check(CLI::IsMember({"enum", "mtt", "both"}));
  tree->add_flag("--print-laplacian", print_laplacian,
                 "Print the Laplacian before the weight");

  auto* forest = app.add_subcommand("forest-weight",
                                    "Forest weight for root sets gamma, gamma'");
  forest->add_option("graph", graph_path, "Graph JSON file")->required();
  forest->add_option("--gamma", gamma, "Root labels, comma separated")
      ->required()
      ->delimiter(',');
  forest->add_option("--gamma-prime", gamma_prime,
                     "Second root set (defaults to gamma)")
      ->delimiter(',');

  auto* det = app.add_subcommand("det", "Determinant of a link diagram");
  det->add_option("pd", pd_path, "PD file")->required();

  auto* tait = app.add_subcommand("tait", "Tait graph and Goeritz matrix");
  tait->add_option("pd", pd_path, "PD file")->required();
  tait->add_option("--out", out_path, "Write the Tait graph as graph JSON");

  for (auto* sub : {det, tait}) {
    sub->add_option("--outer-arc", outer_arc,
                    "Take the face on the counterclockwise side of this arc "
                    "as unbounded");
    sub->add_flag("--dual", dual, "Use the unshaded faces");
  }

  auto* closures = app.add_subcommand("closures",
                                      "Determinants of every closure of a tangle");
  closures->add_option("tangle", tangle_path, "Tangle PD file")->required();

  auto* krebes = app.add_subcommand(
      "krebes", "Closure-determinant obstruction for a tangle in a link");
  krebes->add_option("--tangle", tangle_path, "Tangle PD file")->required();
  krebes->add_option("--link", link_path, "Link PD file")->required();
  krebes->add_flag("--json", as_json, "Print the verdict as JSON");

  auto* gluing = app.add_subcommand(
      "verify-gluing", "Check the gluing identity for two graphs");
  gluing->add_option("--first", h_path, "First graph JSON (H)")->required();
  gluing->add_option("--second", k_path, "Second graph JSON (K)")->required();
  gluing->add_option("--shared", shared, "Shared labels (2 or 3)")
      ->required()
      ->delimiter(',');

  auto* selftest = app.add_subcommand("selftest", "Randomized property suites");
  selftest->add_option("--iterations", iterations, "Instances per suite")
      ->check(CLI::PositiveNumber);
  selftest->add_option("--seed", seed, "Random seed");
  selftest->add_option("--dump-dir", dump_dir,
                       "Directory for counterexample files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*tree) return TreeWeight(graph_path, method, print_laplacian);
    if (*forest) return ForestWeight(graph_path, gamma, gamma_prime);
    if (*det) return Det(pd_path, MakeTaitOptions(dual, outer_arc));
    if (*tait) return Tait(pd_path, out_path, MakeTaitOptions(dual, outer_arc));
    if (*closures) return Closures(tangle_path);
    if (*krebes) return Krebes(tangle_path, link_path, as_json);
    if (*gluing) return VerifyGluing(h_path, k_path, shared);
    if (*selftest) return Selftest(iterations, seed, dump_dir);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace
}  // namespace tangletree

int main(int argc, char** argv) { return tangletree::Main(argc, argv); }
