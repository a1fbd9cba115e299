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

// Text format for link and tangle codes. One statement per line:
//
//   X a b c d      crossing, four positive arc labels
//   L k            k crossingless loops (may repeat; counts add up)
//   B p1 ... p2n   tangle boundary, clockwise from the top-left endpoint
//
// '#' starts a comment, blank lines are ignored. Tangle files hold exactly
// one B line; link files none.

#ifndef TANGLETREE_PD_IO_H_
#define TANGLETREE_PD_IO_H_

#include <string>
#include <string_view>

#include "tangletree/diagram.h"

namespace tangletree {

// Throws InvalidArgument with the offending line number on syntax errors, and
// propagates validation errors from PlanarDiagramCode::Create.
PlanarDiagramCode ParsePd(std::string_view text);
TangleCode ParseTangle(std::string_view text);

std::string FormatPd(const PlanarDiagramCode& code);
std::string FormatTangle(const TangleCode& tangle);

}  // namespace tangletree

#endif  // TANGLETREE_PD_IO_H_
