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

#include "hfsenum/verify.hpp"

#include <memory>

#include "hfsenum/bounded.hpp"
#include "hfsenum/recurrence.hpp"
#include "hfsenum/refinements.hpp"

namespace hfs {
namespace {

std::string range_text(std::size_t n) { return "0.." + std::to_string(n); }

Check compare_sizes(const LevelSets& levels, const std::vector<BigCount>& a, std::size_t n) {
  Check check{"a_n", true, "a_n match " + range_text(n)};
  for (std::size_t i = 0; i <= n; ++i) {
    if (BigCount(static_cast<unsigned long>(levels.size(i))) != a.at(i)) {
      check.ok = false;
      check.detail = "a_" + std::to_string(i) + ": oracle " + std::to_string(levels.size(i)) +
                     ", recurrence " + to_decimal(a.at(i));
      break;
    }
  }
  return check;
}

Check compare_cells(const LevelSets& levels, const BTable& table, std::size_t n) {
  Check check{"b_{n,m}", true, ""};
  std::size_t compared = 0;
  for (std::size_t row = 1; row <= n && check.ok; ++row) {
    for (std::size_t m = 0; m < row; ++m) {
      const PartitionCounts counts = partition_counts(levels, row, m);
      ++compared;
      if (counts.total != table.cell(row, static_cast<long>(m))) {
        check.ok = false;
        check.detail = "b_{" + std::to_string(row) + "," + std::to_string(m) + "}: oracle " +
                       to_decimal(counts.total) + ", recurrence " +
                       to_decimal(table.cell(row, static_cast<long>(m)));
        break;
      }
    }
  }
  if (check.ok) check.detail = "b_{n,m} match (" + std::to_string(compared) + " cells)";
  return check;
}

// B_{n,m,0} = B_{n,m-1}; B_{n,m,k} = b_{n-k,m-1} C(c_m, k) for 0 < k < n-m;
// B_{n,m,n-m} = C(c_m, n-m) a_m; nothing beyond.
Check compare_partition(const LevelSets& levels, const BTable& table, std::size_t n) {
  Check check{"partition", true, ""};
  std::size_t compared = 0;
  for (std::size_t row = 1; row <= n; ++row) {
    for (std::size_t m = 0; m < row; ++m) {
      const PartitionCounts counts = partition_counts(levels, row, m);
      const BigCount& c_m = table.increment(m);
      const long ml = static_cast<long>(m);
      for (std::size_t k = 0; k < counts.by_k.size(); ++k) {
        BigCount expected;
        if (k == 0) {
          expected = table.cell(row, ml - 1);
        } else if (k < row - m) {
          expected = table.cell(row - k, ml - 1) * binomial_big(c_m, k);
        } else if (k == row - m) {
          expected = binomial_big(c_m, k) * table.level_size(m);
        } else {
          expected = 0;
        }
        ++compared;
        if (counts.by_k[k] != expected) {
          check.ok = false;
          check.detail = "B_{" + std::to_string(row) + "," + std::to_string(m) + "," +
                         std::to_string(k) + "}: oracle " + to_decimal(counts.by_k[k]) +
                         ", summand " + to_decimal(expected);
          return check;
        }
      }
    }
  }
  check.detail = "partition summands match (" + std::to_string(compared) + " terms)";
  return check;
}

Check compare_profiles(const LevelSets& levels, std::size_t n, ProfileKind kind) {
  const bool rank = kind == ProfileKind::kRank;
  Check check{rank ? "rank profile" : "cardinality profile", true, ""};
  const RefinedTable table = rank ? compute_r_table(n) : compute_d_table(n);
  for (std::size_t i = 0; i <= n; ++i) {
    const auto expected = rank ? r_profile(table, i) : d_profile(table, i);
    if (profile_counts(levels, i, kind) != expected) {
      check.ok = false;
      check.detail = std::string(rank ? "r" : "d") + "^t_" + std::to_string(i) + " differs";
      return check;
    }
  }
  check.detail = std::string(rank ? "r" : "d") + "^t_n match " + range_text(n);
  return check;
}

}  // namespace

bool VerifyReport::ok() const {
  for (const Check& check : checks) {
    if (!check.ok) return false;
  }
  return true;
}

VerifyReport verify_against_oracle(const HierarchySpec& spec, std::size_t n,
                                   const OracleLimits& limits) {
  auto universe = std::make_shared<Universe>();
  VerifyReport report{spec, {}, {}};

  if (spec.kind == HierarchySpec::Kind::kCumulative) {
    const LevelSets levels = build_cumulative(universe, n, limits);
    report.sizes = levels.sizes();
    Check check{"power set", true, "|V_n+1| = 2^|V_n| for " + range_text(n)};
    for (std::size_t i = 0; i < n; ++i) {
      BigCount expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), 2, levels.size(i));
      if (BigCount(static_cast<unsigned long>(levels.size(i + 1))) != expected) {
        check.ok = false;
        check.detail = "|V_" + std::to_string(i + 1) + "| = " + std::to_string(levels.size(i + 1));
        break;
      }
    }
    report.checks.push_back(std::move(check));
    return report;
  }

  const LevelSets levels = build_levels(universe, spec, n, limits);
  report.sizes = levels.sizes();
  BTable table = [&] {
    switch (spec.kind) {
      case HierarchySpec::Kind::kAtoms: return compute_atoms_table(spec.atoms, n);
      case HierarchySpec::Kind::kBounded: return compute_bounded_table(*spec.bound, n).table;
      case HierarchySpec::Kind::kMinBounded: return compute_minbounded(n).table();
      default: return compute_b_table(n);
    }
  }();

  report.checks.push_back(compare_sizes(levels, table.a(), n));
  report.checks.push_back(compare_cells(levels, table, n));
  if (spec.kind == HierarchySpec::Kind::kPlain) {
    report.checks.push_back(compare_partition(levels, table, n));
    report.checks.push_back(compare_profiles(levels, n, ProfileKind::kRank));
    report.checks.push_back(compare_profiles(levels, n, ProfileKind::kCardinality));
    const ArkReport ark = verify_ark_recursion(levels);
    report.checks.push_back(Check{"ark recursion", ark.ok(),
                                  "ark recursion " + std::to_string(ark.matched) + "/" +
                                      std::to_string(ark.checked)});
  }
  return report;
}

}  // namespace hfs
