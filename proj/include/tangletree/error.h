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

#ifndef TANGLETREE_ERROR_H_
#define TANGLETREE_ERROR_H_

#include <stdexcept>
#include <string>

namespace tangletree {

// Raised when an input violates an operation's precondition: malformed
// graphs, bad root sets, unrealizable diagram codes, syntax errors.
class InvalidArgument : public std::invalid_argument {
 public:
  explicit InvalidArgument(const std::string& what)
      : std::invalid_argument(what) {}
};

// Raised when an internal consistency check fails. Seeing one of these means
// a bug in this library, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tangletree

#endif  // TANGLETREE_ERROR_H_
