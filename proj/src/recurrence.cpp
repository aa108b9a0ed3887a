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

#include "hfsenum/recurrence.hpp"

#include <stdexcept>
#include <string>

#include "hfsenum/bounded.hpp"
#include "row_kernel.hpp"

namespace hfs {

BigCount binomial_big(const BigCount& a, std::size_t k) {
  if (a < 0) throw std::invalid_argument("binomial_big of a negative number");
  if (k == 0) return 1;
  if (a < BigCount(static_cast<unsigned long>(k))) return 0;
  BigCount numerator = 1;
  BigCount factor = a;
  for (std::size_t i = 0; i < k; ++i) {
    numerator *= factor;
    --factor;
  }
  BigCount denominator;
  mpz_fac_ui(denominator.get_mpz_t(), static_cast<unsigned long>(k));
  BigCount result;
  mpz_divexact(result.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  return result;
}

const BigCount& BTable::cell(std::size_t n, long m) const {
  if (m < -1) throw std::out_of_range("b-table column below -1");
  auto r = row(n);
  const auto index = static_cast<std::size_t>(m + 1);
  return index < r.size() ? r[index] : r.back();
}

std::span<const BigCount> BTable::row(std::size_t n) const {
  if (n >= rows_.size()) {
    throw std::out_of_range("b-table row " + std::to_string(n) + " not computed");
  }
  return rows_[n];
}

void BTable::append_row(std::vector<BigCount> row) {
  if (row.empty()) throw std::invalid_argument("b-table row needs at least the m = -1 cell");
  BigCount next = rows_.empty() ? row.back() : a_.back() + row.back();
  rows_.push_back(std::move(row));
  a_.push_back(std::move(next));
}

namespace detail {

const BigCount& BinomialCache::get(std::uint64_t key, const BigCount& base, std::size_t k) {
  auto& column = cache_[key];
  while (column.size() <= k) {
    const std::size_t next = column.size();
    if (next > 0 && column.back() == 0) return zero_;
    column.push_back(binomial_big(base, next));
  }
  return column[k];
}

BigCount step_cell(const BTable& table, const BigCount& left, std::size_t n, long m,
                   std::size_t lower, const BigCount& increment, const BigCount& tail,
                   std::uint64_t binomial_key, BinomialCache& binomials) {
  BigCount value = left;
  if (n <= lower) return value;
  const std::size_t span = n - lower;
  for (std::size_t k = 1; k < span; ++k) {
    const BigCount& choose = binomials.get(binomial_key, increment, k);
    if (choose == 0) break;
    value += table.cell(n - k, m - 1) * choose;
  }
  const BigCount& last = binomials.get(binomial_key, increment, span);
  if (last != 0) value += last * tail;
  return value;
}

std::vector<BigCount> plain_row(const BTable& table, std::size_t n, BinomialCache& binomials) {
  if (n == 0) return {BigCount(1)};
  std::vector<BigCount> row{BigCount(0)};
  row.reserve(n + 1);
  for (std::size_t m = 0; m < n; ++m) {
    row.push_back(step_cell(table, row.back(), n, static_cast<long>(m), m, table.increment(m),
                            table.level_size(m), m, binomials));
  }
  return row;
}

}  // namespace detail

BTable compute_b_table(std::size_t n_max) {
  BTable table(HierarchySpec::plain());
  detail::BinomialCache binomials;
  for (std::size_t n = 0; n <= n_max; ++n) table.append_row(detail::plain_row(table, n, binomials));
  return table;
}

std::vector<BigCount> c_sequence(const BTable& table) {
  std::vector<BigCount> c;
  if (table.empty()) return c;
  for (std::size_t n = 0; n <= table.n_max(); ++n) c.push_back(table.increment(n));
  return c;
}

std::vector<BigCount> a_sequence(const BTable& table) { return table.a(); }

std::vector<BigCount> recompute_row(const BTable& table, std::size_t n) {
  if (n > table.n_max()) throw std::out_of_range("recompute_row past the table");
  detail::BinomialCache binomials;
  const HierarchySpec& v = table.variant();
  switch (v.kind) {
    case HierarchySpec::Kind::kPlain: return detail::plain_row(table, n, binomials);
    case HierarchySpec::Kind::kAtoms: return detail::atoms_row(table, v.atoms, n, binomials);
    case HierarchySpec::Kind::kBounded: {
      InverseBound g(*v.bound);
      return detail::bounded_row(table, *v.bound, g, n, binomials);
    }
    case HierarchySpec::Kind::kMinBounded: return detail::minbounded_row(table, n, binomials);
    case HierarchySpec::Kind::kCumulative: break;
  }
  throw std::invalid_argument("no recurrence for variant " + v.describe());
}

}  // namespace hfs
