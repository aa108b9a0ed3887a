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

#ifndef HFSENUM_REFINEMENTS_HPP_
#define HFSENUM_REFINEMENTS_HPP_

#include <cstddef>
#include <map>
#include <vector>

#include "hfsenum/big_count.hpp"
#include "hfsenum/recurrence.hpp"

namespace hfs {

enum class RefinementKind { kRank, kCardinality };

// r^t_{n,m} (sets of B_{n,m} with rank <= t) or d^t_{n,m} (cardinality <= t).
//
// Stored t ranges are 0..m+1 for rank and 0..n for cardinality. Reads with
// t < 0 give 0 and reads past the top give the top cell, which equals b_{n,m}.
class RefinedTable {
 public:
  explicit RefinedTable(RefinementKind kind) : kind_(kind) {}

  RefinementKind kind() const noexcept { return kind_; }
  std::size_t n_max() const noexcept { return cells_.size() - 1; }

  const BigCount& at(std::size_t n, long m, long t) const;
  long top_t(std::size_t n, long m) const;

 private:
  friend RefinedTable compute_r_table(std::size_t n_max);
  friend RefinedTable compute_d_table(const BTable& plain);

  RefinementKind kind_;
  // cells_[n][m + 1][t]
  std::vector<std::vector<std::vector<BigCount>>> cells_;
  BigCount zero_ = 0;
};

RefinedTable compute_r_table(std::size_t n_max);

// The cardinality recurrence takes its binomial bases b_{m,m-1} from the
// plain table; rows 0..plain.n_max() are filled.
RefinedTable compute_d_table(const BTable& plain);
RefinedTable compute_d_table(std::size_t n_max);

// r^t_n = |{x in A_n : rk(x) = t}| for t = 0..n.
std::map<std::size_t, BigCount> r_profile(const RefinedTable& table, std::size_t n);
// d^t_n = |{x in A_n : |x| = t}| for t = 0..n.
std::map<std::size_t, BigCount> d_profile(const RefinedTable& table, std::size_t n);

// b^u_{n,m} for u atoms; level sizes |A^U_n| are the table's a().
BTable compute_atoms_table(std::size_t u, std::size_t n_max);

}  // namespace hfs

#endif  // HFSENUM_REFINEMENTS_HPP_
