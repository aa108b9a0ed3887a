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

#include "hfsenum/bound_function.hpp"

#include <bit>
#include <charconv>

namespace hfs {

std::size_t integer_sqrt(std::size_t n) {
  if (n < 2) return n;
  std::size_t lo = 1;
  std::size_t hi = std::size_t{1} << ((std::bit_width(n) + 1) / 2);
  // invariant: lo*lo <= n < hi*hi
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (mid <= n / mid) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::size_t BoundFunction::operator()(std::size_t n) const {
  switch (kind_) {
    case Kind::kIdentity: return n;
    case Kind::kHalf: return n / 2 + n % 2;
    case Kind::kSqrt: return integer_sqrt(n);
    case Kind::kLog2: return static_cast<std::size_t>(std::bit_width(n + 1)) - 1;
    case Kind::kTable:
      if (n >= values_.size()) {
        throw BoundFunctionError("bound function range exhausted: f(" + std::to_string(n) +
                                 ") is undefined, table covers 0.." +
                                 std::to_string(values_.size()) + "-1");
      }
      return values_[n];
  }
  return 0;
}

void BoundFunction::validate(std::size_t n_max) const {
  if (kind_ == Kind::kTable && values_.size() < n_max) {
    throw BoundFunctionError("unboundedness: table defines f(0.." +
                             std::to_string(values_.size() == 0 ? 0 : values_.size() - 1) +
                             ") but f is needed up to f(" + std::to_string(n_max - 1) +
                             ") (range exhausted)");
  }
  std::size_t previous = 0;
  for (std::size_t n = 0; n < n_max; ++n) {
    const std::size_t v = (*this)(n);
    if (v > n) {
      throw BoundFunctionError("sublinearity violated at index " + std::to_string(n) + ": f(" +
                               std::to_string(n) + ") = " + std::to_string(v));
    }
    if (n > 0 && v < previous) {
      throw BoundFunctionError("monotonicity violated at index " + std::to_string(n) + ": f(" +
                               std::to_string(n) + ") = " + std::to_string(v) + " < f(" +
                               std::to_string(n - 1) + ")");
    }
    previous = v;
  }
}

std::string BoundFunction::describe() const {
  switch (kind_) {
    case Kind::kIdentity: return "identity";
    case Kind::kHalf: return "half";
    case Kind::kSqrt: return "sqrt";
    case Kind::kLog2: return "log2";
    case Kind::kTable: {
      std::string out = "table:";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
      }
      return out;
    }
  }
  return "?";
}

BoundFunction BoundFunction::from_descriptor(std::string_view text) {
  if (text == "identity") return identity();
  if (text == "half") return half();
  if (text == "sqrt") return sqrt();
  if (text == "log2") return log2();
  constexpr std::string_view kTablePrefix = "table:";
  if (text.starts_with(kTablePrefix)) {
    std::vector<std::size_t> values;
    std::string_view rest = text.substr(kTablePrefix.size());
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc{} || ptr != item.data() + item.size()) {
        throw BoundFunctionError("bad table entry '" + std::string(item) + "'");
      }
      values.push_back(v);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return table(std::move(values));
  }
  throw BoundFunctionError("unknown bound function '" + std::string(text) +
                           "' (expected identity | half | sqrt | log2 | file:<path>)");
}

}  // namespace hfs
