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

#include "tangletree/bigint.h"

#include <string>

#include "tangletree/error.h"

namespace tangletree {

BigInt ParseBigInt(std::string_view text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) {
    throw InvalidArgument("not an integer: '" + std::string(text) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw InvalidArgument("not an integer: '" + std::string(text) + "'");
    }
  }
  BigInt value(std::string(text.substr(start)));
  return text[0] == '-' ? BigInt(-value) : value;
}

}  // namespace tangletree
