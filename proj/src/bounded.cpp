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

#include "hfsenum/bounded.hpp"

#include <string>

#include "hfsenum/hfs_core.hpp"
#include "row_kernel.hpp"

namespace hfs {
namespace {

std::size_t to_index(const BigCount& value) {
  if (!value.fits_ulong_p()) throw std::overflow_error("index does not fit a machine word");
  return value.get_ui();
}

std::size_t fbar_from_prefix(const std::vector<BigCount>& a, std::size_t n) {
  const BigCount bound(static_cast<unsigned long>(n));
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a[m] > bound) return m;
  }
  throw InsufficientDepthError("f̄(" + std::to_string(n) + ") needs ā beyond index " +
                               std::to_string(a.size() - 1));
}

BigCount abar_from_prefix(const std::vector<BigCount>& a, const BigCount& index) {
  if (index < BigCount(static_cast<unsigned long>(a.size()))) return a[index.get_ui()];
  for (const BigCount& value : a) {
    if (value == index) {
      constexpr unsigned long kMaxExponent = 1ul << 32;
      if (value > kMaxExponent) throw ResourceError("2^ā_j too large to materialize");
      BigCount power;
      mpz_ui_pow_ui(power.get_mpz_t(), 2, value.get_ui());
      return power;
    }
  }
  throw InsufficientDepthError("ā_" + to_decimal(index) +
                               " is neither computed nor of the form ā_{ā_j}");
}

}  // namespace

std::size_t InverseBound::operator()(std::size_t m) {
  if (m == 0) return 0;
  while (memo_.size() <= m) {
    const std::size_t target = memo_.size();
    if (target == 0) {
      memo_.push_back(0);
      continue;
    }
    // g is non-decreasing, so the scan for the next target resumes here.
    while (f_(frontier_) < target) ++frontier_;
    memo_.push_back(frontier_);
  }
  return memo_[m];
}

std::size_t inverse_g(const BoundFunction& f, std::size_t m) { return InverseBound(f)(m); }

namespace detail {

std::vector<BigCount> bounded_row(const BTable& table, const BoundFunction& f, InverseBound& g,
                                  std::size_t n, BinomialCache& binomials) {
  if (n == 0) return {BigCount(1)};
  const std::size_t top = f(n - 1);
  std::vector<BigCount> row{BigCount(0)};
  row.reserve(top + 2);
  for (std::size_t m = 0; m <= top; ++m) {
    const std::size_t lower = g(m);
    row.push_back(step_cell(table, row.back(), n, static_cast<long>(m), lower,
                            table.increment(m), table.level_size(lower), m, binomials));
  }
  return row;
}

std::vector<BigCount> minbounded_row(const BTable& table, std::size_t n,
                                     BinomialCache& binomials) {
  if (n == 0) return {BigCount(1)};
  const std::size_t top = fbar_from_prefix(table.a(), n - 1);
  std::vector<BigCount> row{BigCount(0)};
  row.reserve(top + 2);
  for (std::size_t m = 0; m <= top; ++m) {
    const BigCount lower_big = m == 0 ? BigCount(0) : table.level_size(m - 1);
    const std::size_t lower = to_index(lower_big);
    // ā_{ā_{m-1}}: lower <= n-1 holds for every stored column, so the prefix
    // serves it; abar_at covers the power-set path otherwise.
    const BigCount tail = lower < n ? table.level_size(lower) : abar_from_prefix(table.a(), lower_big);
    row.push_back(step_cell(table, row.back(), n, static_cast<long>(m), lower,
                            table.increment(m), tail, m, binomials));
  }
  return row;
}

}  // namespace detail

BoundedTable compute_bounded_table(const BoundFunction& f, std::size_t n_max) {
  f.validate(n_max);
  BoundedTable out{f, BTable(HierarchySpec::bounded_by(f))};
  InverseBound g(f);
  detail::BinomialCache binomials;
  for (std::size_t n = 0; n <= n_max; ++n) {
    out.table.append_row(detail::bounded_row(out.table, f, g, n, binomials));
  }
  return out;
}

std::vector<std::size_t> distinct_level_indices(const std::vector<BigCount>& a) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (n == 0 || a[n] != a[n - 1]) out.push_back(n);
  }
  return out;
}

std::size_t MinBoundedTable::fbar(std::size_t n) const { return fbar_from_prefix(a(), n); }

BigCount MinBoundedTable::gbar(std::size_t n) const {
  if (n == 0) return 0;
  if (n - 1 > n_max()) {
    throw InsufficientDepthError("ḡ(" + std::to_string(n) + ") needs ā_" + std::to_string(n - 1));
  }
  return table_.a()[n - 1];
}

BigCount MinBoundedTable::abar_at(const BigCount& index) const {
  return abar_from_prefix(a(), index);
}

BoundFunction MinBoundedTable::fbar_function() const {
  std::vector<std::size_t> values;
  for (std::size_t n = 0; n < n_max(); ++n) values.push_back(fbar(n));
  return BoundFunction::table(std::move(values));
}

MinBoundedTable compute_minbounded(std::size_t n_max) {
  BTable table(HierarchySpec::minimally_bounded());
  detail::BinomialCache binomials;
  for (std::size_t n = 0; n <= n_max; ++n) {
    table.append_row(detail::minbounded_row(table, n, binomials));
  }
  return MinBoundedTable(std::move(table));
}

SequenceComparison compare_with_minbounded(const BoundedTable& bounded,
                                           const MinBoundedTable& minbounded) {
  SequenceComparison out;
  const auto& a = bounded.a();
  const auto& abar = minbounded.a();
  const auto indices = distinct_level_indices(a);
  for (std::size_t i = 0; i < indices.size() && i < abar.size(); ++i) {
    ++out.compared;
    if (a[indices[i]] != abar[i]) {
      out.equal = false;
      out.first_mismatch = i;
      break;
    }
  }
  return out;
}

}  // namespace hfs
