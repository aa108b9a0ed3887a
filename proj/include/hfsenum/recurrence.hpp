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

#ifndef HFSENUM_RECURRENCE_HPP_
#define HFSENUM_RECURRENCE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "hfsenum/big_count.hpp"
#include "hfsenum/hierarchy_spec.hpp"

namespace hfs {

// Binomial coefficient C(a, k) for a natural a: the falling factorial
// a(a-1)...(a-k+1) divided once by k!. Zero when a < k, one when k = 0.
BigCount binomial_big(const BigCount& a, std::size_t k);

// Triangular table of b_{n,m} = |{x in A_n \ A_{n-1} : x ⊆ A_m}| for one
// hierarchy variant, with the cumulative level sizes a_n.
//
// Row n stores columns m = -1 .. last_column(n). For the plain and atoms
// variants last_column(n) = n-1; bounded variants stop at the column past
// which every cell is equal, and reads beyond it return that cell. Row 0
// holds the single base cell b_{0,-1}.
class BTable {
 public:
  explicit BTable(HierarchySpec variant) : variant_(std::move(variant)) {}

  const HierarchySpec& variant() const noexcept { return variant_; }
  bool empty() const noexcept { return rows_.empty(); }
  // Deepest level held; requires a non-empty table.
  std::size_t n_max() const noexcept { return rows_.size() - 1; }

  // b_{n,m} for m >= -1, clamped to the last stored column.
  const BigCount& cell(std::size_t n, long m) const;
  std::span<const BigCount> row(std::size_t n) const;
  long last_column(std::size_t n) const { return static_cast<long>(row(n).size()) - 2; }

  // New sets at level n: b_{n, last_column(n)} (= b_{n,n-1}).
  const BigCount& increment(std::size_t n) const { return row(n).back(); }
  // a_n, the size of level n.
  const BigCount& level_size(std::size_t n) const { return a_.at(n); }
  const std::vector<BigCount>& a() const noexcept { return a_; }

  // Appends row n_max()+1 (columns from m = -1) and extends a.
  void append_row(std::vector<BigCount> row);

  friend bool operator==(const BTable&, const BTable&) = default;

 private:
  HierarchySpec variant_;
  std::vector<std::vector<BigCount>> rows_;
  std::vector<BigCount> a_;
};

// Plain hierarchy, rows 0..n_max.
BTable compute_b_table(std::size_t n_max);

// c_0 = b_{0,-1}, c_n = b_{n,n-1}.
std::vector<BigCount> c_sequence(const BTable& table);
// a_0 .. a_n_max.
std::vector<BigCount> a_sequence(const BTable& table);

// Recomputes row n of any variant's table from rows 0..n-1 of `table`
// (used to spot-check cached tables).
std::vector<BigCount> recompute_row(const BTable& table, std::size_t n);

}  // namespace hfs

#endif  // HFSENUM_RECURRENCE_HPP_
