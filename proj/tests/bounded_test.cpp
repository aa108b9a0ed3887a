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

#include <memory>

#include "golden.hpp"
#include "gtest/gtest.h"
#include "hfsenum/oracle.hpp"

namespace hfs {
namespace {

BigCount pow2(unsigned long e) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

std::vector<std::size_t> golden_indices(const std::string& file) {
  std::vector<std::size_t> out;
  for (const auto& [n, value] : testing::golden_sequence(file)) out.push_back(n);
  return out;
}

void expect_matches_golden(const std::vector<BigCount>& a, const std::string& file) {
  for (const auto& [n, value] : testing::golden_sequence(file)) {
    ASSERT_LT(n, a.size());
    EXPECT_EQ(to_decimal(a[n]), value) << file << " n=" << n;
  }
}

TEST(BoundFunctionTest, BuiltIns) {
  const auto half = BoundFunction::half();
  const auto sqrt = BoundFunction::sqrt();
  const auto log2 = BoundFunction::log2();
  EXPECT_EQ(half(0), 0u);
  EXPECT_EQ(half(3), 2u);
  EXPECT_EQ(half(4), 2u);
  EXPECT_EQ(sqrt(15), 3u);
  EXPECT_EQ(sqrt(16), 4u);
  EXPECT_EQ(log2(0), 0u);
  EXPECT_EQ(log2(1), 1u);
  EXPECT_EQ(log2(2), 1u);
  EXPECT_EQ(log2(3), 2u);
  EXPECT_EQ(log2(65535), 16u);
  EXPECT_EQ(BoundFunction::identity()(9), 9u);
  for (std::size_t n = 0; n < 100000; n += 7) {
    const std::size_t r = integer_sqrt(n);
    ASSERT_LE(r * r, n);
    ASSERT_GT((r + 1) * (r + 1), n);
  }
  EXPECT_EQ(integer_sqrt(std::size_t{1} << 62), std::size_t{1} << 31);
}

TEST(BoundFunctionTest, Descriptors) {
  for (const char* text : {"identity", "half", "sqrt", "log2", "table:0,1,1,2"}) {
    EXPECT_EQ(BoundFunction::from_descriptor(text).describe(), text);
  }
  EXPECT_THROW(BoundFunction::from_descriptor("cube"), BoundFunctionError);
  EXPECT_THROW(BoundFunction::from_descriptor("table:0,x"), BoundFunctionError);
}

TEST(BoundFunctionTest, Validation) {
  EXPECT_NO_THROW(BoundFunction::half().validate(1000));
  const auto short_table = BoundFunction::from_descriptor("table:0,0,1,1,1");
  EXPECT_NO_THROW(short_table.validate(5));
  try {
    short_table.validate(10);
    FAIL();
  } catch (const BoundFunctionError& e) {
    EXPECT_NE(std::string(e.what()).find("range exhausted"), std::string::npos);
  }
  try {
    BoundFunction::from_descriptor("table:0,2,2").validate(3);
    FAIL();
  } catch (const BoundFunctionError& e) {
    EXPECT_NE(std::string(e.what()).find("index 1"), std::string::npos) << e.what();
  }
  EXPECT_THROW(BoundFunction::from_descriptor("table:0,1,0").validate(3), BoundFunctionError);
  EXPECT_THROW(short_table(5), BoundFunctionError);
}

TEST(InverseBoundTest, Examples) {
  EXPECT_EQ(inverse_g(BoundFunction::identity(), 7), 7u);
  EXPECT_EQ(inverse_g(BoundFunction::half(), 2), 3u);
  EXPECT_EQ(inverse_g(BoundFunction::sqrt(), 2), 4u);
  EXPECT_EQ(inverse_g(BoundFunction::log2(), 16), 65535u);
  EXPECT_EQ(inverse_g(BoundFunction::half(), 0), 0u);
  InverseBound g(BoundFunction::sqrt());
  for (std::size_t m = 0; m < 30; ++m) {
    const std::size_t t = g(m);
    EXPECT_GE(BoundFunction::sqrt()(t), m);
    if (t > 0) EXPECT_LT(BoundFunction::sqrt()(t - 1), m);
  }
  EXPECT_THROW(inverse_g(BoundFunction::from_descriptor("table:0,0,1"), 2), BoundFunctionError);
}

TEST(BoundedTableTest, TableFive) {
  const BoundedTable t = compute_bounded_table(BoundFunction::half(), 29);
  expect_matches_golden(t.a(), "table5_half.csv");
  EXPECT_EQ(distinct_level_indices(t.a()), golden_indices("table5_half.csv"));
}

TEST(BoundedTableTest, TableSixSqrt) {
  const BoundedTable t = compute_bounded_table(BoundFunction::sqrt(), 692);
  expect_matches_golden(t.a(), "table6_sqrt.csv");
  EXPECT_EQ(distinct_level_indices(t.a()), golden_indices("table6_sqrt.csv"));
}

TEST(BoundedTableTest, SmallLog2Prefix) {
  const BoundedTable t = compute_bounded_table(BoundFunction::log2(), 40);
  EXPECT_EQ(t.a()[16], 144);
  EXPECT_EQ(t.a()[35], 65536);
  EXPECT_EQ(t.a()[40], 65536);
}

TEST(BoundedTableTest, NonDecreasingAndDuplicateLaw) {
  for (const auto& f : {BoundFunction::half(), BoundFunction::sqrt(), BoundFunction::log2()}) {
    const BoundedTable t = compute_bounded_table(f, 120);
    for (std::size_t n = 0; n < 120; ++n) {
      ASSERT_LE(t.a()[n], t.a()[n + 1]);
      const bool same = t.a()[n + 1] == t.a()[n];
      EXPECT_EQ(same, t.table.cell(n + 1, static_cast<long>(f(n))) == 0) << f.describe() << n;
      EXPECT_EQ(t.table.last_column(n + 1), static_cast<long>(f(n)));
    }
  }
}

TEST(BoundedTableTest, IdentityIsPlain) {
  const BoundedTable t = compute_bounded_table(BoundFunction::identity(), 10);
  const BTable plain = compute_b_table(10);
  EXPECT_EQ(t.a(), plain.a());
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto a = t.table.row(n);
    const auto b = plain.row(n);
    EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end())) << n;
  }
}

TEST(BoundedTableTest, RejectsInvalidBound) {
  EXPECT_THROW(compute_bounded_table(BoundFunction::from_descriptor("table:0,0,1,1,1"), 10),
               BoundFunctionError);
}

TEST(BoundedTableTest, MatchesOracle) {
  for (const auto& f : {BoundFunction::half(), BoundFunction::sqrt(), BoundFunction::log2()}) {
    const LevelSets levels =
        build_levels(std::make_shared<Universe>(), HierarchySpec::bounded_by(f), 9);
    const BoundedTable t = compute_bounded_table(f, 9);
    for (std::size_t n = 0; n <= 9; ++n) {
      EXPECT_EQ(t.a()[n], static_cast<unsigned long>(levels.size(n))) << f.describe() << n;
    }
    for (std::size_t n = 1; n <= 9; ++n) {
      for (std::size_t m = 0; m < n; ++m) {
        EXPECT_EQ(t.table.cell(n, static_cast<long>(m)), partition_counts(levels, n, m).total)
            << f.describe() << " " << n << "," << m;
      }
    }
  }
}

TEST(MinBoundedTest, TableSeven) {
  const MinBoundedTable t = compute_minbounded(45);
  expect_matches_golden(t.a(), "table7_minbounded.csv");
  EXPECT_EQ(t.a()[16], 65536);
  EXPECT_EQ(t.a()[17], 8454144);
  EXPECT_EQ(to_decimal(t.a()[45]), "4283779858680436564226952847228928");
}

TEST(MinBoundedTest, DerivedFunctions) {
  const MinBoundedTable t = compute_minbounded(45);
  EXPECT_EQ(t.fbar(0), 0u);
  EXPECT_EQ(t.fbar(4), 3u);
  EXPECT_EQ(t.fbar(16), 5u);
  EXPECT_EQ(t.gbar(0), 0);
  EXPECT_EQ(t.gbar(1), 1);
  EXPECT_EQ(t.gbar(6), 144);
  const MinBoundedTable small = compute_minbounded(3);
  EXPECT_THROW(small.fbar(12), InsufficientDepthError);
}

TEST(MinBoundedTest, PowerSetLaw) {
  const MinBoundedTable t = compute_minbounded(45);
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= 45; ++n) {
    if (t.a()[n] > 45) continue;
    const std::size_t index = t.a()[n].get_ui();
    EXPECT_EQ(t.a()[index], pow2(index)) << n;
    ++checked;
  }
  EXPECT_EQ(checked, 5u);
  EXPECT_EQ(t.abar_at(BigCount(65536)), pow2(65536));
  EXPECT_THROW(t.abar_at(BigCount(65537)), InsufficientDepthError);
}

// ā_n = 2^n exactly at the power-set indices and exceeds 2^n elsewhere;
// ā_3 = 12 > 2^3, so 2^n is not an upper envelope.
TEST(MinBoundedTest, PowerOfTwoFloor) {
  const MinBoundedTable t = compute_minbounded(45);
  for (std::size_t n = 0; n <= 45; ++n) EXPECT_GE(t.a()[n], pow2(n)) << n;
  EXPECT_GT(t.a()[3], pow2(3));
  for (std::size_t n : {0, 1, 2, 4, 12, 16}) EXPECT_EQ(t.a()[n], pow2(n)) << n;
}

TEST(MinBoundedTest, BoundedByFbarReproducesSequence) {
  const MinBoundedTable t = compute_minbounded(45);
  const BoundedTable via = compute_bounded_table(t.fbar_function(), 45);
  EXPECT_EQ(via.a(), t.a());
}

TEST(MinBoundedTest, SlowBoundsRunThroughSameValues) {
  const MinBoundedTable t = compute_minbounded(32);
  for (const auto& f : {BoundFunction::sqrt(), BoundFunction::log2()}) {
    const SequenceComparison cmp = compare_with_minbounded(compute_bounded_table(f, 692), t);
    EXPECT_TRUE(cmp.equal) << f.describe();
    EXPECT_GE(cmp.compared, 16u);
  }
  const SequenceComparison half =
      compare_with_minbounded(compute_bounded_table(BoundFunction::half(), 29), t);
  EXPECT_FALSE(half.equal);
  ASSERT_TRUE(half.first_mismatch.has_value());
  EXPECT_EQ(*half.first_mismatch, 7u);
}

TEST(MinBoundedTest, MatchesOracle) {
  const LevelSets levels =
      build_levels(std::make_shared<Universe>(), HierarchySpec::minimally_bounded(), 5);
  const MinBoundedTable t = compute_minbounded(5);
  for (std::size_t n = 0; n <= 5; ++n) {
    EXPECT_EQ(t.a()[n], static_cast<unsigned long>(levels.size(n)));
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t m = 0; m < n; ++m) {
      EXPECT_EQ(t.table().cell(n, static_cast<long>(m)), partition_counts(levels, n, m).total)
          << n << "," << m;
    }
  }
}

}  // namespace
}  // namespace hfs
