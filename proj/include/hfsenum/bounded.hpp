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

#ifndef HFSENUM_BOUNDED_HPP_
#define HFSENUM_BOUNDED_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hfsenum/big_count.hpp"
#include "hfsenum/bound_function.hpp"
#include "hfsenum/recurrence.hpp"

namespace hfs {

class InsufficientDepthError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// g(m) = min{t : f(t) >= m}, scanning t upward from a memoized frontier.
class InverseBound {
 public:
  explicit InverseBound(BoundFunction f) : f_(std::move(f)) {}

  // Throws BoundFunctionError when a table-kind f never reaches m.
  std::size_t operator()(std::size_t m);

  const BoundFunction& function() const noexcept { return f_; }

 private:
  BoundFunction f_;
  std::vector<std::size_t> memo_;
  std::size_t frontier_ = 0;
};

std::size_t inverse_g(const BoundFunction& f, std::size_t m);

// b^f_{n,m} and a^f_n for the hierarchy bounded by f. Row n stores columns
// m = -1 .. f(n-1); the increment of level n is b^f_{n,f(n-1)}.
struct BoundedTable {
  BoundFunction f;
  BTable table;

  const std::vector<BigCount>& a() const noexcept { return table.a(); }
};

BoundedTable compute_bounded_table(const BoundFunction& f, std::size_t n_max);

// Indices n where a_n differs from a_{n-1} (always including 0): the rows that
// remain once repeated levels are skipped.
std::vector<std::size_t> distinct_level_indices(const std::vector<BigCount>& a);

// The minimally bounded hierarchy: b̄_{n,m}, ā_n and the derived f̄, ḡ.
class MinBoundedTable {
 public:
  explicit MinBoundedTable(BTable table) : table_(std::move(table)) {}

  const BTable& table() const noexcept { return table_; }
  std::size_t n_max() const noexcept { return table_.n_max(); }
  const std::vector<BigCount>& a() const noexcept { return table_.a(); }

  // f̄(n) = min{m : ā_m > n}.
  std::size_t fbar(std::size_t n) const;
  // ḡ(n) = ā_{n-1}, ḡ(0) = 0.
  BigCount gbar(std::size_t n) const;

  // ā_index: from the computed prefix, or through ā_{ā_j} = 2^{ā_j} when
  // index is itself some ā_j of the prefix.
  BigCount abar_at(const BigCount& index) const;

  // f̄ on 0..n_max-1 as a table-kind bound function.
  BoundFunction fbar_function() const;

 private:
  BTable table_;
};

MinBoundedTable compute_minbounded(std::size_t n_max);

// Empirical check of whether a^f, with repeated levels removed, runs through
// the same values as ā on their common length.
struct SequenceComparison {
  bool equal = true;
  std::size_t compared = 0;
  std::optional<std::size_t> first_mismatch;  // position in the deduplicated sequence
};
SequenceComparison compare_with_minbounded(const BoundedTable& bounded,
                                           const MinBoundedTable& minbounded);

}  // namespace hfs

#endif  // HFSENUM_BOUNDED_HPP_
