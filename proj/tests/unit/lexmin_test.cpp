// Copyright 2026 The nsw2v Authors
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

#include "nsw2v/lexmin.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "nsw2v/oracle.hpp"
#include "nsw2v/solver.hpp"

namespace nsw2v {
namespace {

Instance Uniform(int agents, int goods, Label label) {
  return Instance(agents, goods, HeavyValue(3),
                  std::vector<Label>(static_cast<std::size_t>(agents) * goods, label));
}

TEST(LexminTest, InitialAllocationGivesEachGoodToLowestEligibleAgent) {
  Instance inst = ParseInstance("nsw2v v1\ns 3/2\nagents 2\ngoods 4\nHHLL\nHHLL\n");
  HeavyAllocation heavy = InitialHeavyAllocation(inst);
  EXPECT_EQ(heavy.owner, (std::vector<AgentId>{0, 0, kNoAgent, kNoAgent}));
  EXPECT_EQ(HeavyDegrees(inst, heavy), (std::vector<int>{2, 0}));
  EXPECT_FALSE(IsLexmin(inst, heavy));
}

TEST(LexminTest, RebalancePathMovesOneGood) {
  Instance inst = ParseInstance("nsw2v v1\ns 3/2\nagents 2\ngoods 4\nHHLL\nHHLL\n");
  HeavyAllocation heavy = InitialHeavyAllocation(inst);
  auto path = FindRebalancePath(inst, heavy, 0);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(path->agents, (std::vector<AgentId>{0, 1}));
  ASSERT_EQ(path->goods.size(), 1u);
  Augment(heavy, *path);
  EXPECT_EQ(HeavyDegrees(inst, heavy), (std::vector<int>{1, 1}));
  EXPECT_TRUE(IsLexmin(inst, heavy));
}

TEST(LexminTest, ThreeGoodsTwoAgents) {
  Instance inst = Uniform(2, 3, Label::kHeavy);
  LexminTrace trace;
  HeavyAllocation heavy = Lexmin(inst, InitialHeavyAllocation(inst), &trace);
  EXPECT_EQ(HeavyDegrees(inst, heavy), (std::vector<int>{2, 1}));
  EXPECT_EQ(trace.augmentations, 1);
  ASSERT_EQ(trace.potentials.size(), 2u);
  EXPECT_EQ(trace.potentials[0], 9);
  EXPECT_EQ(trace.potentials[1], 5);
}

TEST(LexminTest, NoHeavyGoods) {
  Instance inst = Uniform(3, 2, Label::kLight);
  HeavyAllocation heavy = Lexmin(inst, InitialHeavyAllocation(inst));
  EXPECT_EQ(HeavyDegrees(inst, heavy), (std::vector<int>{0, 0, 0}));
  LevelSets sets = ComputeLevelSets(inst, heavy);
  EXPECT_EQ(sets.max_degree, 0);
}

TEST(LevelSetsTest, ChainThroughSharedGood) {
  // Agents 0 and 1 both value all three heavy goods; agent 2 values none.
  Instance inst = ParseInstance("nsw2v v1\ns 3/2\nagents 3\ngoods 3\nHHH\nHHH\nLLL\n");
  HeavyAllocation heavy = Lexmin(inst, InitialHeavyAllocation(inst));
  EXPECT_EQ(HeavyDegrees(inst, heavy), (std::vector<int>{2, 1, 0}));
  LevelSets sets = ComputeLevelSets(inst, heavy);
  EXPECT_EQ(sets.max_degree, 2);
  const Level* top = sets.Find(2);
  ASSERT_NE(top, nullptr);
  EXPECT_EQ(top->r, (std::vector<AgentId>{0}));
  EXPECT_EQ(top->r_prime, (std::vector<AgentId>{1}));
  EXPECT_TRUE(LevelSetsAreTransferClosed(inst, heavy, sets));
}

TEST(LevelSetsTest, FirstWorkedExample) {
  Instance inst = ParseInstance("nsw2v v1\ns 3/2\nagents 2\ngoods 4\nHHLL\nHHLL\n");
  LevelSets sets = ComputeLevelSets(inst, Lexmin(inst, InitialHeavyAllocation(inst)));
  EXPECT_EQ(sets.max_degree, 1);
  const Level* top = sets.Find(1);
  ASSERT_NE(top, nullptr);
  EXPECT_EQ(top->r, (std::vector<AgentId>{0, 1}));
  EXPECT_TRUE(top->r_prime.empty());
}

TEST(LevelSetsTest, RejectsNonLexminAllocation) {
  Instance inst = Uniform(2, 2, Label::kHeavy);
  EXPECT_THROW(ComputeLevelSets(inst, InitialHeavyAllocation(inst)), std::logic_error);
}

TEST(LexminTest, MatchesBruteForceOnRandomInstances) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int m = static_cast<int>(rng() % 8);
    Instance inst = GenerateInstance(n, m, HeavyValue(3), 0.4, rng());
    LexminTrace trace;
    HeavyAllocation heavy = Lexmin(inst, InitialHeavyAllocation(inst), &trace);
    std::vector<int> degrees = HeavyDegrees(inst, heavy);
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    EXPECT_EQ(degrees, BruteForceLexmin(inst)) << SerializeInstance(inst);
    EXPECT_TRUE(IsLexmin(inst, heavy));
    EXPECT_TRUE(std::is_sorted(trace.potentials.rbegin(), trace.potentials.rend()));
    EXPECT_TRUE(LevelSetsAreTransferClosed(inst, heavy, ComputeLevelSets(inst, heavy)));
  }
}

}  // namespace
}  // namespace nsw2v
