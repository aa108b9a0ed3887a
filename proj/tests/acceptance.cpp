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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "hfsenum/asymptotics.hpp"
#include "hfsenum/bounded.hpp"
#include "hfsenum/commands.hpp"
#include "hfsenum/recurrence.hpp"
#include "hfsenum/refinements.hpp"
#include "hfsenum/verify.hpp"

namespace hfs {
namespace {

constexpr double kFastLimit = 1.0;
constexpr double kAtomsLimit = 5.0;
constexpr double kBoundedLimit = 60.0;
constexpr double kOracleLimit = 60.0;
constexpr double kInvariantLimit = 30.0;
constexpr double kReductionLimit = 5.0;
constexpr const char* kReferenceC = "1.339899757746";
constexpr const char* kReferenceTolerance = "5e-13";
constexpr long kCertifiedExponent = -30;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string cli_output(std::vector<std::string> args, int& status) {
  args.insert(args.begin(), "hfsenum");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

void expect_golden(Outcome& o, std::vector<std::string> args, const std::string& golden) {
  args.insert(args.end(), {"--format", "csv"});
  int status = 0;
  const std::string out = cli_output(args, status);
  o.require(status == kExitOk, golden + ": exit " + std::to_string(status));
  o.require(out == testing::read_golden(golden), golden + ": output differs");
}

Outcome table1() {
  Outcome o;
  expect_golden(o, {"levels", "--n", "9"}, "table1_levels.csv");
  return o;
}

Outcome table2() {
  Outcome o;
  expect_golden(o, {"rank-profile", "--n", "7"}, "table2_rank.csv");
  return o;
}

Outcome table3() {
  Outcome o;
  expect_golden(o, {"card-profile", "--n", "6"}, "table3_card.csv");
  return o;
}

Outcome table4() {
  Outcome o;
  expect_golden(o, {"atoms", "--n", "5"}, "table4_atoms.csv");
  return o;
}

Outcome tables5_6() {
  Outcome o;
  expect_golden(o, {"bounded", "--f", "half", "--n", "29", "--skip-duplicates"},
                "table5_half.csv");
  expect_golden(o, {"bounded", "--f", "sqrt", "--n", "692", "--skip-duplicates"},
                "table6_sqrt.csv");
  expect_golden(o, {"bounded", "--f", "log2", "--n", "65551", "--skip-duplicates"},
                "table6_log2.csv");
  return o;
}

Outcome table7() {
  Outcome o;
  expect_golden(o, {"minbounded", "--n", "45"}, "table7_minbounded.csv");
  return o;
}

Outcome constant() {
  Outcome o;
  const ConstantEstimate e = constant_C(c_sequence(compute_b_table(12)), 30);
  o.require(e.terms_used == 12, "terms_used " + std::to_string(e.terms_used));
  o.require(e.value.certainly_within(kReferenceC, kReferenceTolerance),
            "C = " + e.value.mid_string(31) + " not within " + kReferenceTolerance);
  o.require(e.value.radius_below_pow10(kCertifiedExponent),
            "certified radius " + e.value.radius_string());
  if (o.ok) o.detail = "C = " + e.value.mid_string(31) + ", radius " + e.value.radius_string();
  return o;
}

Outcome oracle() {
  Outcome o;
  const std::vector<std::pair<HierarchySpec, std::size_t>> cases = {
      {HierarchySpec::plain(), 5},
      {HierarchySpec::with_atoms(1), 4},
      {HierarchySpec::with_atoms(2), 4},
      {HierarchySpec::bounded_by(BoundFunction::half()), 9},
      {HierarchySpec::bounded_by(BoundFunction::sqrt()), 9},
      {HierarchySpec::bounded_by(BoundFunction::log2()), 9},
      {HierarchySpec::minimally_bounded(), 5},
  };
  std::size_t checks = 0;
  for (const auto& [spec, n] : cases) {
    const VerifyReport report = verify_against_oracle(spec, n);
    for (const Check& c : report.checks) {
      ++checks;
      o.require(c.ok, spec.describe() + ": " + c.name + " " + c.detail);
    }
  }
  if (o.ok) {
    o.detail = std::to_string(checks) + " checks over " + std::to_string(cases.size()) + " variants";
  }
  return o;
}

Outcome invariants() {
  Outcome o;
  const std::vector<BigCount> c = c_sequence(compute_b_table(16));
  o.require(sandwich_check(c).ok(), "sandwich");
  for (const auto& [name, report] :
       {std::pair{"power doubling", check_power_doubling(c)},
        std::pair{"linear doubling", check_linear_doubling(c)},
        std::pair{"sum inequality", check_sum_inequality(c)}}) {
    o.require(report.ok(), std::string(name) + ": " +
                               (report.failures.empty() ? "" : report.failures.front()));
  }
  if (o.ok) o.detail = "c_16 has " + std::to_string(c[16].get_str().size()) + " digits";
  return o;
}

bool same_rows(const BTable& x, const BTable& y) {
  if (x.a() != y.a()) return false;
  for (std::size_t n = 0; n <= x.n_max(); ++n) {
    const auto rx = x.row(n);
    const auto ry = y.row(n);
    if (!std::equal(rx.begin(), rx.end(), ry.begin(), ry.end())) return false;
  }
  return true;
}

Outcome reductions() {
  Outcome o;
  const BTable plain = compute_b_table(14);
  o.require(same_rows(compute_atoms_table(0, 14), plain), "atoms u=0 differs from plain");
  o.require(same_rows(compute_bounded_table(BoundFunction::identity(), 14).table, plain),
            "bounded identity differs from plain");
  const MinBoundedTable direct = compute_minbounded(45);
  o.require(same_rows(compute_bounded_table(direct.fbar_function(), 45).table, direct.table()),
            "bounded by fbar differs from minbounded");
  return o;
}

Outcome power_set_law() {
  Outcome o;
  const MinBoundedTable t = compute_minbounded(45);
  std::string indices;
  for (std::size_t n = 0; n <= 4; ++n) {
    const BigCount index = t.a()[n];
    const BigCount expected = BigCount(1) << static_cast<mp_bitcnt_t>(index.get_ui());
    o.require(t.abar_at(index) == expected, "index " + index.get_str());
    indices += index.get_str() + " ";
  }
  const BigCount chained(65536);
  o.require(t.abar_at(chained) == BigCount(1) << 65536, "index 65536");
  if (o.ok) o.detail = "indices " + indices + "65536";
  return o;
}

}  // namespace
}  // namespace hfs

int main() {
  struct Criterion {
    const char* name;
    double limit;
    std::function<hfs::Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"levels n<=9", hfs::kFastLimit, hfs::table1},
      {"rank profiles n<=7", hfs::kFastLimit, hfs::table2},
      {"cardinality profiles n<=6", hfs::kFastLimit, hfs::table3},
      {"atoms u=1..5 n<=5", hfs::kAtomsLimit, hfs::table4},
      {"bounded half/sqrt/log2", hfs::kBoundedLimit, hfs::tables5_6},
      {"minimally bounded n<=45", hfs::kFastLimit, hfs::table7},
      {"growth constant", hfs::kFastLimit, hfs::constant},
      {"oracle equivalence", hfs::kOracleLimit, hfs::oracle},
      {"invariants n_max=16", hfs::kInvariantLimit, hfs::invariants},
      {"reductions", hfs::kReductionLimit, hfs::reductions},
      {"power-set law", hfs::kReductionLimit, hfs::power_set_law},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    hfs::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= c.limit) outcome.require(false, "time limit exceeded");
    if (!outcome.ok) ++failed;
    std::printf("%s %2zu %-28s %8.3fs (limit %gs)%s%s\n", outcome.ok ? "PASS" : "FAIL", i + 1,
                c.name, seconds, c.limit, outcome.detail.empty() ? "" : "  ",
                outcome.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
