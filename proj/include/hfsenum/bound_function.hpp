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

#ifndef HFSENUM_BOUND_FUNCTION_HPP_
#define HFSENUM_BOUND_FUNCTION_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hfs {

class BoundFunctionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A sublinear, unbounded f : N -> N limiting the level from which the
// adjoined element is drawn. Built-ins use exact integer arithmetic.
class BoundFunction {
 public:
  enum class Kind { kIdentity, kHalf, kSqrt, kLog2, kTable };

  static BoundFunction identity() { return BoundFunction(Kind::kIdentity, {}); }
  // ceil(n / 2)
  static BoundFunction half() { return BoundFunction(Kind::kHalf, {}); }
  // floor(sqrt(n))
  static BoundFunction sqrt() { return BoundFunction(Kind::kSqrt, {}); }
  // floor(log2(n + 1))
  static BoundFunction log2() { return BoundFunction(Kind::kLog2, {}); }
  // f(i) = values[i] on the finite range covered by `values`.
  static BoundFunction table(std::vector<std::size_t> values) {
    return BoundFunction(Kind::kTable, std::move(values));
  }

  // Accepts identity | half | sqrt | log2 | table:v0,v1,... (the form
  // produced by describe()).
  static BoundFunction from_descriptor(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& values() const noexcept { return values_; }

  // Throws BoundFunctionError when a table is evaluated past its range.
  std::size_t operator()(std::size_t n) const;

  // Checks f on 0..n_max-1: defined, f(n) <= n, non-decreasing. The error
  // message names the first violated property and its index.
  void validate(std::size_t n_max) const;

  std::string describe() const;

  friend bool operator==(const BoundFunction&, const BoundFunction&) = default;

 private:
  BoundFunction(Kind kind, std::vector<std::size_t> values)
      : kind_(kind), values_(std::move(values)) {}

  Kind kind_;
  std::vector<std::size_t> values_;
};

std::size_t integer_sqrt(std::size_t n);

}  // namespace hfs

#endif  // HFSENUM_BOUND_FUNCTION_HPP_
