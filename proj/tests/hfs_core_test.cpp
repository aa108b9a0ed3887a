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

#include "hfsenum/hfs_core.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <thread>

#include "gtest/gtest.h"
#include "hfsenum/oracle.hpp"

namespace hfs {
namespace {

TEST(UniverseTest, EmptySetIsUnique) {
  Universe u;
  EXPECT_EQ(u.empty_set(), u.empty_set());
  EXPECT_EQ(u.cardinality(u.empty_set()), 0u);
  EXPECT_EQ(u.rank(u.empty_set()), 0u);
  EXPECT_EQ(u.ark(u.empty_set()), 0u);
  EXPECT_EQ(u.make_set({}), u.empty_set());
}

TEST(UniverseTest, Adjoin) {
  Universe u;
  const SetId e = u.empty_set();
  const SetId one = u.adjoin(e, e);
  EXPECT_EQ(u.format(one), "{{}}");
  EXPECT_EQ(u.adjoin(one, e), one);
  const SetId two = u.adjoin(one, one);
  EXPECT_EQ(u.format(two), "{{},{{}}}");
  EXPECT_EQ(u.cardinality(two), 2u);
  EXPECT_TRUE(u.contains(two, e));
  EXPECT_TRUE(u.contains(two, one));
  EXPECT_FALSE(u.contains(one, one));
}

TEST(UniverseTest, InterningIsExtensional) {
  Universe u;
  const SetId e = u.empty_set();
  const SetId a = u.adjoin(e, e);
  const SetId b = u.adjoin(a, a);
  const SetId c = u.adjoin(u.adjoin(e, a), e);
  EXPECT_EQ(b, c);
  EXPECT_EQ(u.make_set({a, e, a, e}), b);
  const std::size_t before = u.size();
  EXPECT_EQ(u.parse(" { {} , { { } } } "), b);
  EXPECT_EQ(u.size(), before);
}

TEST(UniverseTest, Rank) {
  Universe u;
  EXPECT_EQ(u.rank(u.parse("{}")), 0u);
  EXPECT_EQ(u.rank(u.parse("{{}}")), 1u);
  EXPECT_EQ(u.rank(u.parse("{{},{{}}}")), 2u);
  EXPECT_EQ(u.rank(u.parse("{{{{}}}}")), 3u);
}

TEST(UniverseTest, AdjunctiveRank) {
  Universe u;
  EXPECT_EQ(u.ark(u.parse("{{{}}}")), 2u);
  EXPECT_EQ(u.ark(u.parse("{{},{{}}}")), 2u);
  EXPECT_EQ(u.ark(u.parse("{{}}")), 1u);
  // {∅,{∅},{{∅}}}: sorted arks 0,1,2 -> max(0+2, 1+1, 2+0) + 1
  EXPECT_EQ(u.ark(u.parse("{{},{{}},{{{}}}}")), 3u);
}

TEST(UniverseTest, AdjunctiveRankFormulaIgnoresTieOrder) {
  const std::vector<unsigned> arks = {0, 1, 1, 1, 3, 3};
  EXPECT_EQ(adjunctive_rank_from_sorted(arks), 6u);
  EXPECT_EQ(adjunctive_rank_from_sorted({}), 0u);
  const std::vector<unsigned> single = {4};
  EXPECT_EQ(adjunctive_rank_from_sorted(single), 5u);
}

TEST(UniverseTest, AckermannExamples) {
  Universe u;
  EXPECT_EQ(u.ackermann_code(u.parse("{}")), 0);
  EXPECT_EQ(u.ackermann_code(u.parse("{{}}")), 1);
  EXPECT_EQ(u.ackermann_code(u.parse("{{},{{}}}")), 3);
  EXPECT_EQ(u.decode_ackermann(BigCount(0)), u.empty_set());
  EXPECT_EQ(u.format(u.decode_ackermann(BigCount(3))), "{{},{{}}}");
  EXPECT_EQ(u.format(u.decode_ackermann(BigCount(4))), "{{{{}}}}");
}

TEST(UniverseTest, AckermannRoundTripAndOrderBelow2To20) {
  Universe u;
  std::vector<SetId> sets;
  for (unsigned long code = 0; code < (1ul << 12); ++code) {
    const SetId x = u.decode_ackermann(BigCount(code));
    ASSERT_EQ(u.ackermann_code(x), code);
    sets.push_back(x);
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<unsigned long> pick(0, (1ul << 20) - 1);
  for (int i = 0; i < 2000; ++i) {
    const unsigned long code = pick(rng);
    ASSERT_EQ(u.ackermann_code(u.decode_ackermann(BigCount(code))), code);
  }
  for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
    ASSERT_TRUE(u.less(sets[i], sets[i + 1])) << i;
  }
  for (int i = 0; i < 5000; ++i) {
    const SetId a = u.decode_ackermann(BigCount(pick(rng)));
    const SetId b = u.decode_ackermann(BigCount(pick(rng)));
    const bool numeric = u.ackermann_code(a) < u.ackermann_code(b);
    ASSERT_EQ(u.less(a, b), numeric);
  }
}

TEST(UniverseTest, AckermannBudget) {
  Universe u(64);
  // Ack of {{{{{}}}}} chain grows as a tower: 0, 1, 2, 4, 16, 65536.
  SetId x = u.empty_set();
  for (int i = 0; i < 5; ++i) x = u.adjoin(u.empty_set(), x), x = u.make_set({x});
  EXPECT_THROW(u.ackermann_code(x), ResourceError);
  BigCount big = 1;
  big <<= 100;
  EXPECT_THROW(u.decode_ackermann(big), ResourceError);
  u.set_ackermann_bit_budget(1 << 20);
  EXPECT_NO_THROW(u.decode_ackermann(big));
}

TEST(UniverseTest, Atoms) {
  Universe u;
  const SetId a = u.atom("a");
  EXPECT_EQ(u.atom("a"), a);
  EXPECT_TRUE(u.is_atom(a));
  EXPECT_NE(a, u.empty_set());
  EXPECT_EQ(u.rank(a), 0u);
  EXPECT_EQ(u.ark(a), 0u);
  EXPECT_EQ(u.label(a), "a");
  const SetId x = u.adjoin(u.empty_set(), a);
  EXPECT_FALSE(u.is_pure(x));
  EXPECT_THROW(u.ackermann_code(x), std::domain_error);
  EXPECT_THROW(u.adjoin(a, u.empty_set()), std::invalid_argument);
  EXPECT_EQ(u.parse("{a,{}}"), u.adjoin(x, u.empty_set()));
  EXPECT_TRUE(u.less(a, u.empty_set()));
  EXPECT_EQ(u.find_atom("b"), std::nullopt);
}

TEST(UniverseTest, ParseErrors) {
  Universe u;
  EXPECT_THROW(u.parse("{"), std::invalid_argument);
  EXPECT_THROW(u.parse("{{}}}"), std::invalid_argument);
  EXPECT_THROW(u.parse("{,}"), std::invalid_argument);
  EXPECT_THROW(u.parse(""), std::invalid_argument);
}

TEST(UniverseTest, FormatParseRoundTrip) {
  Universe u;
  for (unsigned long code = 0; code < 300; ++code) {
    const SetId x = u.decode_ackermann(BigCount(code));
    EXPECT_EQ(u.parse(u.format(x)), x);
  }
}

// Properties over A_4, which holds 112 sets.
class LevelPropertiesTest : public ::testing::Test {
 protected:
  void SetUp() override {
    universe_ = std::make_shared<Universe>();
    levels_ = std::make_unique<LevelSets>(build_levels(universe_, HierarchySpec::plain(), 4));
  }
  std::shared_ptr<Universe> universe_;
  std::unique_ptr<LevelSets> levels_;
};

TEST_F(LevelPropertiesTest, RankAtMostArk) {
  for (SetId x : levels_->level(4)) EXPECT_LE(universe_->rank(x), universe_->ark(x));
}

TEST_F(LevelPropertiesTest, AdjunctionBounds) {
  Universe& u = *universe_;
  const auto& sets = levels_->level(3);
  for (SetId x : sets) {
    for (SetId y : sets) {
      const SetId z = u.adjoin(x, y);
      const unsigned hi = std::max(u.ark(x), u.ark(y));
      EXPECT_GE(u.ark(z), hi);
      EXPECT_LE(u.ark(z), hi + 1);
      if (!u.contains(x, y) && u.ark(x) <= u.ark(y)) EXPECT_EQ(u.ark(z), u.ark(y) + 1);
    }
  }
}

TEST_F(LevelPropertiesTest, ArkOfAdjunctionWhenContainedInLevel) {
  Universe& u = *universe_;
  const auto& sets = levels_->level(3);
  std::size_t applied = 0;
  for (SetId x : sets) {
    for (SetId y : sets) {
      if (u.contains(x, y)) continue;
      const auto elements = u.elements(x);
      const bool inside = std::all_of(elements.begin(), elements.end(), [&](SetId e) {
        return levels_->contains(u.ark(y), e);
      });
      if (!inside) continue;
      ++applied;
      EXPECT_EQ(u.ark(u.adjoin(x, y)), std::max(u.ark(x), u.ark(y)) + 1);
    }
  }
  EXPECT_GT(applied, 0u);
}

TEST(UniverseTest, ConcurrentReads) {
  Universe u;
  std::vector<SetId> sets;
  for (unsigned long code = 0; code < 2048; ++code) sets.push_back(u.decode_ackermann(BigCount(code)));
  std::vector<std::thread> workers;
  std::vector<int> failures(4, 0);
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = static_cast<std::size_t>(t); i < sets.size(); i += 2) {
        if (u.ackermann_code(sets[i]) != i) ++failures[static_cast<std::size_t>(t)];
      }
    });
  }
  for (auto& w : workers) w.join();
  for (int f : failures) EXPECT_EQ(f, 0);
}

}  // namespace
}  // namespace hfs
