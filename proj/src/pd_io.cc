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

#include "tangletree/pd_io.h"

#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "tangletree/error.h"

namespace tangletree {
namespace {

struct Statements {
  std::vector<Crossing> crossings;
  int free_loops = 0;
  std::optional<std::vector<ArcLabel>> boundary;
};

[[noreturn]] void SyntaxError(std::size_t line, const std::string& what) {
  throw InvalidArgument("line " + std::to_string(line) + ": " + what);
}

std::int64_t ParseInt(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    SyntaxError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

Statements ParseStatements(std::string_view text) {
  Statements out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      if (end > pos) tokens.push_back(line.substr(pos, end - pos));
      pos = end;
    }
    if (tokens.empty()) continue;

    std::vector<std::int64_t> args;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      args.push_back(ParseInt(tokens[i], line_no));
    }
    if (tokens[0] == "X") {
      if (args.size() != 4) SyntaxError(line_no, "X takes four arc labels");
      Crossing x{};
      for (std::size_t i = 0; i < 4; ++i) {
        if (args[i] <= 0) SyntaxError(line_no, "arc labels must be positive");
        x.arcs[i] = args[i];
      }
      out.crossings.push_back(x);
    } else if (tokens[0] == "L") {
      if (args.size() != 1 || args[0] < 0 ||
          args[0] > std::numeric_limits<int>::max() - out.free_loops) {
        SyntaxError(line_no, "L takes one nonnegative count");
      }
      out.free_loops += static_cast<int>(args[0]);
    } else if (tokens[0] == "B") {
      if (out.boundary) SyntaxError(line_no, "more than one B line");
      for (std::int64_t a : args) {
        if (a <= 0) SyntaxError(line_no, "arc labels must be positive");
      }
      out.boundary = std::vector<ArcLabel>(args.begin(), args.end());
    } else {
      SyntaxError(line_no, "unknown statement '" + std::string(tokens[0]) + "'");
    }
  }
  return out;
}

void AppendBody(std::ostringstream& out, const std::vector<Crossing>& crossings,
                int free_loops) {
  for (const Crossing& x : crossings) {
    out << "X " << x.arcs[0] << ' ' << x.arcs[1] << ' ' << x.arcs[2] << ' '
        << x.arcs[3] << '\n';
  }
  if (free_loops > 0) out << "L " << free_loops << '\n';
}

}  // namespace

PlanarDiagramCode ParsePd(std::string_view text) {
  Statements s = ParseStatements(text);
  if (s.boundary) {
    throw InvalidArgument("B statements are only allowed in tangle files");
  }
  return PlanarDiagramCode::Create(std::move(s.crossings), s.free_loops);
}

TangleCode ParseTangle(std::string_view text) {
  Statements s = ParseStatements(text);
  if (!s.boundary) throw InvalidArgument("tangle file has no B line");
  return TangleCode::Create(std::move(s.crossings), std::move(*s.boundary),
                            s.free_loops);
}

std::string FormatPd(const PlanarDiagramCode& code) {
  std::ostringstream out;
  AppendBody(out, code.crossings(), code.free_loops());
  return out.str();
}

std::string FormatTangle(const TangleCode& tangle) {
  std::ostringstream out;
  AppendBody(out, tangle.crossings(), tangle.free_loops());
  out << 'B';
  for (ArcLabel a : tangle.boundary()) out << ' ' << a;
  out << '\n';
  return out.str();
}

}  // namespace tangletree
