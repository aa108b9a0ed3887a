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

#include "hfsenum/refinements.hpp"

#include <stdexcept>
#include <string>

#include "row_kernel.hpp"

namespace hfs {
namespace {

std::uint64_t column_key(long m, long t) {
  return (static_cast<std::uint64_t>(m) << 32) | static_cast<std::uint32_t>(t + 1);
}

std::map<std::size_t, BigCount> profile(const RefinedTable& table, std::size_t n) {
  if (n > table.n_max()) {
    throw std::out_of_range("profile row " + std::to_string(n) + " past n_max " +
                            std::to_string(table.n_max()));
  }
  std::map<std::size_t, BigCount> out;
  for (std::size_t t = 0; t <= n; ++t) {
    BigCount sum = 0;
    for (std::size_t m = 0; m <= n; ++m) {
      const long mm = static_cast<long>(m) - 1;
      const long tt = static_cast<long>(t);
      sum += table.at(m, mm, tt) - table.at(m, mm, tt - 1);
    }
    out[t] = std::move(sum);
  }
  return out;
}

}  // namespace

long RefinedTable::top_t(std::size_t n, long m) const {
  return kind_ == RefinementKind::kRank ? m + 1 : static_cast<long>(n);
}

const BigCount& RefinedTable::at(std::size_t n, long m, long t) const {
  if (t < 0) return zero_;
  if (n >= cells_.size()) throw std::out_of_range("refined row " + std::to_string(n));
  const auto& row = cells_[n];
  const auto column = static_cast<std::size_t>(m + 1);
  if (m < -1 || column >= row.size()) {
    throw std::out_of_range("refined column " + std::to_string(m) + " in row " +
                            std::to_string(n));
  }
  const auto& cells = row[column];
  const auto index = static_cast<std::size_t>(t);
  return index < cells.size() ? cells[index] : cells.back();
}

RefinedTable compute_r_table(std::size_t n_max) {
  RefinedTable out(RefinementKind::kRank);
  detail::BinomialCache binomials;
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto& row = out.cells_.emplace_back();
    // m = -1: r^t_{0,-1} = 1, r^t_{n,-1} = 0.
    row.push_back({BigCount(n == 0 ? 1 : 0)});
    const long nn = static_cast<long>(n);
    for (long m = 0; m < nn; ++m) {
      std::vector<BigCount> cells;
      for (long t = 0; t <= m + 1; ++t) {
        const BigCount& base = out.at(static_cast<std::size_t>(m), m - 1, t - 1);
        BigCount tail = 0;
        for (long k = 0; k <= m; ++k) tail += out.at(static_cast<std::size_t>(k), k - 1, t);
        BigCount value = out.at(n, m - 1, t);
        const long span = nn - m;
        for (long k = 1; k < span; ++k) {
          const BigCount& choose =
              binomials.get(column_key(m, t), base, static_cast<std::size_t>(k));
          if (choose == 0) break;
          value += out.at(static_cast<std::size_t>(nn - k), m - 1, t) * choose;
        }
        value += binomials.get(column_key(m, t), base, static_cast<std::size_t>(span)) * tail;
        cells.push_back(std::move(value));
      }
      row.push_back(std::move(cells));
    }
  }
  return out;
}

RefinedTable compute_d_table(const BTable& plain) {
  if (plain.variant().kind != HierarchySpec::Kind::kPlain) {
    throw std::invalid_argument("compute_d_table needs the plain b-table");
  }
  RefinedTable out(RefinementKind::kCardinality);
  detail::BinomialCache binomials;
  const std::size_t n_max = plain.n_max();
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto& row = out.cells_.emplace_back();
    const long nn = static_cast<long>(n);
    // m = -1: d^t_{0,-1} = 1, d^t_{n,-1} = 0.
    row.emplace_back(n + 1, BigCount(n == 0 ? 1 : 0));
    for (long m = 0; m < nn; ++m) {
      const BigCount& base = plain.increment(static_cast<std::size_t>(m));
      const long span = nn - m;
      std::vector<BigCount> cells;
      for (long t = 0; t <= nn; ++t) {
        BigCount value = out.at(n, m - 1, t);
        for (long k = 1; k < span; ++k) {
          const BigCount& choose =
              binomials.get(static_cast<std::uint64_t>(m), base, static_cast<std::size_t>(k));
          if (choose == 0) break;
          value += out.at(static_cast<std::size_t>(nn - k), m - 1, t - k) * choose;
        }
        const BigCount& last =
            binomials.get(static_cast<std::uint64_t>(m), base, static_cast<std::size_t>(span));
        if (last != 0) {
          BigCount tail = 0;
          for (long k = 0; k <= m; ++k) {
            tail += out.at(static_cast<std::size_t>(k), k - 1, t - span);
          }
          value += last * tail;
        }
        cells.push_back(std::move(value));
      }
      row.push_back(std::move(cells));
    }
  }
  return out;
}

RefinedTable compute_d_table(std::size_t n_max) { return compute_d_table(compute_b_table(n_max)); }

std::map<std::size_t, BigCount> r_profile(const RefinedTable& table, std::size_t n) {
  if (table.kind() != RefinementKind::kRank) throw std::invalid_argument("not a rank table");
  return profile(table, n);
}

std::map<std::size_t, BigCount> d_profile(const RefinedTable& table, std::size_t n) {
  if (table.kind() != RefinementKind::kCardinality) {
    throw std::invalid_argument("not a cardinality table");
  }
  return profile(table, n);
}

namespace detail {

std::vector<BigCount> atoms_row(const BTable& table, std::size_t u, std::size_t n,
                                BinomialCache& binomials) {
  const BigCount base_size(static_cast<unsigned long>(u + 1));
  if (n == 0) return {base_size};
  std::vector<BigCount> row{BigCount(0), binomial_big(base_size, n)};
  const BigCount atoms(static_cast<unsigned long>(u));
  for (std::size_t m = 1; m < n; ++m) {
    // 1 + sum_{k=1}^{m} b^u_{k,k-1} = a_m - u
    const BigCount tail = table.level_size(m) - atoms;
    row.push_back(step_cell(table, row.back(), n, static_cast<long>(m), m, table.increment(m),
                            tail, m, binomials));
  }
  return row;
}

}  // namespace detail

BTable compute_atoms_table(std::size_t u, std::size_t n_max) {
  BTable table(HierarchySpec::with_atoms(u));
  detail::BinomialCache binomials;
  for (std::size_t n = 0; n <= n_max; ++n) {
    table.append_row(detail::atoms_row(table, u, n, binomials));
  }
  return table;
}

}  // namespace hfs
