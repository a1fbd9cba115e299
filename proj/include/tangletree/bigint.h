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

#ifndef TANGLETREE_BIGINT_H_
#define TANGLETREE_BIGINT_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tangletree {

// Arbitrary-precision signed integer used for every weight, matrix entry and
// determinant in the library.
using BigInt = boost::multiprecision::cpp_int;

inline std::string ToString(const BigInt& value) { return value.str(); }

// Parses an optionally signed decimal integer. Throws InvalidArgument on
// anything else (no whitespace, no exponent, no leading '+' with no digits).
BigInt ParseBigInt(std::string_view text);

inline BigInt Abs(const BigInt& value) { return value < 0 ? BigInt(-value) : value; }

}  // namespace tangletree

#endif  // TANGLETREE_BIGINT_H_
