// Copyright 2026 The Secretive Authors.
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

#include "secretive/valuation.h"

#include <gtest/gtest.h>

#include "secretive/error.h"
#include "secretive/instance.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace secretive {
namespace {

TEST(ValuationTest, AdditiveSums) {
  const auto v = ValuationOracle::Additive({Rat(3), Rat(1, 2), Rat(0)});
  EXPECT_EQ(v.Value({}), Rat(0));
  EXPECT_EQ(v.Value({0, 1}), Rat(7, 2));
  EXPECT_EQ(v.SingletonValue(2), Rat(0));
  EXPECT_THROW(v.Value({3}), Error);
  EXPECT_THROW(ValuationOracle::Additive({Rat(-1)}), Error);
}

TEST(ValuationTest, TableLooksUpMasks) {
  const auto v = ValuationOracle::Table(2, {Rat(0), Rat(2), Rat(3), Rat(4)});
  EXPECT_EQ(v.Value({0}), Rat(2));
  EXPECT_EQ(v.Value({1}), Rat(3));
  EXPECT_EQ(v.Value({0, 1}), Rat(4));
}

TEST(ValuationTest, TableRejectsBadInput) {
  EXPECT_THROW(ValuationOracle::Table(2, {Rat(0), Rat(1)}), Error);
  EXPECT_THROW(ValuationOracle::Table(1, {Rat(1), Rat(2)}), Error);
  EXPECT_THROW(ValuationOracle::Table(2, {Rat(0), Rat(2), Rat(1), Rat(1)}),
               Error);
}

TEST(ValuationTest, CoverageCountsUnion) {
  const auto v =
      ValuationOracle::Coverage({Rat(1), Rat(2), Rat(4)}, {{0, 1}, {1, 2}, {}});
  EXPECT_EQ(v.Value({0}), Rat(3));
  EXPECT_EQ(v.Value({0, 1}), Rat(7));
  EXPECT_EQ(v.Value({2}), Rat(0));
  EXPECT_THROW(ValuationOracle::Coverage({Rat(1)}, {{1}}), Error);
}

TEST(ValuationTest, SurrogateOutsideSpecialGoodIsUnchanged) {
  const auto base = ValuationOracle::Additive({Rat(10), Rat(2), Rat(1)});
  const auto s = ValuationOracle::Surrogate(base, 0, Rat(3));
  EXPECT_EQ(s.Value({1, 2}), base.Value({1, 2}));
  EXPECT_EQ(s.Value({}), Rat(0));
}

TEST(ValuationTest, SurrogateCapsSpecialMarginal) {
  const auto base = ValuationOracle::Additive({Rat(10), Rat(2)});
  const auto s = ValuationOracle::Surrogate(base, 0, Rat(3));
  EXPECT_EQ(s.Value({0}), Rat(3));
  EXPECT_EQ(s.Value({0, 1}), Rat(5));
  EXPECT_THROW(ValuationOracle::Surrogate(base, 2, Rat(3)), Error);
  EXPECT_THROW(ValuationOracle::Surrogate(base, 0, Rat(0)), Error);
}

TEST(ValuationTest, SurrogateOfCoverageUsesMarginal) {
  // good 0 covers {0,1}; good 1 covers {1}; weights 5 and 4.
  const auto base = ValuationOracle::Coverage({Rat(5), Rat(4)}, {{0, 1}, {1}});
  const auto s = ValuationOracle::Surrogate(base, 0, Rat(6));
  EXPECT_EQ(s.Value({0}), Rat(6));
  EXPECT_EQ(s.Value({0, 1}), Rat(9));
}

TEST(ValuationTest, TabulateUsesLocalMasks) {
  const auto v = ValuationOracle::Additive({Rat(1), Rat(2), Rat(4)});
  const auto t = TabulateSubsets(v, GoodSet{0, 2});
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t[1], Rat(1));
  EXPECT_EQ(t[2], Rat(4));
  EXPECT_EQ(t[3], Rat(5));
}

TEST(ValuationTest, StructuralChecks) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = testing::UniformInt(rng, 1, 8);
    const auto cover = testing::RandomCoverage(rng, m);
    EXPECT_TRUE(IsNonnegativeAndMonotone(cover));
    EXPECT_TRUE(IsSubmodular(cover));
    EXPECT_TRUE(IsSubmodular(testing::RandomSubmodularTable(rng, m)));
    EXPECT_TRUE(IsNonnegativeAndMonotone(testing::RandomMonotoneTable(rng, m)));
  }
  // x0 and x1 are complements: supermodular.
  const auto comp = ValuationOracle::Table(2, {Rat(0), Rat(0), Rat(0), Rat(1)});
  EXPECT_TRUE(IsNonnegativeAndMonotone(comp));
  EXPECT_FALSE(IsSubmodular(comp));
}

TEST(ValuationTest, SampledChecksOnLargeGroundSets) {
  testing::Rng rng(3);
  const auto v = testing::RandomCoverage(rng, 30, 12);
  EXPECT_TRUE(IsNonnegativeAndMonotone(v));
  EXPECT_TRUE(IsSubmodular(v));
}

TEST(InstanceTest, GoodsInstanceValidates) {
  const auto v = ValuationOracle::Additive({Rat(1), Rat(1)});
  EXPECT_NO_THROW(GoodsInstance(2, 2, {v}));
  EXPECT_THROW(GoodsInstance(1, 2, {}), Error);
  EXPECT_THROW(GoodsInstance(3, 2, {v}), Error);
  EXPECT_THROW(GoodsInstance(2, 3, {v}), Error);
}

TEST(InstanceTest, RentInstanceValidates) {
  EXPECT_NO_THROW(RentInstance({{Rat(10), Rat(0)}}));
  EXPECT_THROW(RentInstance({{Rat(10)}}), Error);
  EXPECT_THROW(RentInstance({{Rat(1), Rat(2)}, {Rat(1)}}), Error);
  EXPECT_THROW(RentInstance(std::vector<std::vector<Rat>>{}), Error);
}

}  // namespace
}  // namespace secretive
