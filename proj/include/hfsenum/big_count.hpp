// Copyright 2026 The hfsenum Authors
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

#ifndef HFSENUM_BIG_COUNT_HPP_
#define HFSENUM_BIG_COUNT_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hfs {

// Arbitrary-precision natural number used for every sequence value.
using BigCount = mpz_class;

inline std::string to_decimal(const BigCount& value) { return value.get_str(10); }

// Parses a non-negative decimal string. Signs, whitespace and empty input are
// rejected.
inline BigCount from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw std::invalid_argument("not a decimal natural: '" + std::string(text) + "'");
    }
  }
  return BigCount(std::string(text), 10);
}

inline std::vector<std::string> to_decimals(const std::vector<BigCount>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

}  // namespace hfs

#endif  // HFSENUM_BIG_COUNT_HPP_
