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

#ifndef HFSENUM_SRC_ROW_KERNEL_HPP_
#define HFSENUM_SRC_ROW_KERNEL_HPP_

// Shared evaluation of one row of the b-table family. All four variants use
// the same cell step
//
//   b_{n,m} = b_{n,m-1} + sum_{k=1}^{n-lower-1} b_{n-k,m-1} C(inc, k)
//                       + C(inc, n-lower) * tail
//
// and differ only in lower (m, g(m) or ā_{m-1}), the tail factor and the
// base cells.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hfsenum/big_count.hpp"
#include "hfsenum/recurrence.hpp"

namespace hfs {

class InverseBound;
class BoundFunction;

namespace detail {

// Memoizes C(base, k) per caller-chosen key; the base for a key never changes.
class BinomialCache {
 public:
  // Zero once k exceeds base.
  const BigCount& get(std::uint64_t key, const BigCount& base, std::size_t k);

 private:
  std::unordered_map<std::uint64_t, std::vector<BigCount>> cache_;
  BigCount zero_ = 0;
};

BigCount step_cell(const BTable& table, const BigCount& left, std::size_t n, long m,
                   std::size_t lower, const BigCount& increment, const BigCount& tail,
                   std::uint64_t binomial_key, BinomialCache& binomials);

std::vector<BigCount> plain_row(const BTable& table, std::size_t n, BinomialCache& binomials);
std::vector<BigCount> atoms_row(const BTable& table, std::size_t u, std::size_t n,
                                BinomialCache& binomials);
std::vector<BigCount> bounded_row(const BTable& table, const BoundFunction& f, InverseBound& g,
                                  std::size_t n, BinomialCache& binomials);
std::vector<BigCount> minbounded_row(const BTable& table, std::size_t n,
                                     BinomialCache& binomials);

}  // namespace detail
}  // namespace hfs

#endif  // HFSENUM_SRC_ROW_KERNEL_HPP_
