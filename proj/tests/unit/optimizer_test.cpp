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

#include "nsw2v/optimizer.hpp"

#include <stdexcept>

#include <gtest/gtest.h>

#include "nsw2v/greedy.hpp"
#include "nsw2v/lexmin.hpp"
#include "nsw2v/matching.hpp"
#include "nsw2v/oracle.hpp"
#include "nsw2v/solver.hpp"
#include "nsw2v/valuation.hpp"

namespace nsw2v {
namespace {

constexpr char kP1[] = "nsw2v v1\ns 3/2\nagents 2\ngoods 4\nHHLL\nHHLL\n";
constexpr char kP2[] = "nsw2v v1\ns 3/2\nagents 2\ngoods 5\nHHLLL\nHHLLL\n";

GreedyResult Greedy(const Instance& inst) {
  return GreedyFill(inst, Lexmin(inst, InitialHeavyAllocation(inst)));
}

TEST(HeavyCountMaximaTest, Examples) {
  HeavyCountMaxima a = ComputeHeavyCountMaxima(HalfUnits(4), HeavyValue(3));
  EXPECT_EQ(a.r0, 0);
  EXPECT_EQ(a.r_half, 1);
  EXPECT_EQ(a.r1, 2);
  EXPECT_EQ(SatisfiedMaximaCases(a, HalfUnits(4), HeavyValue(3)), 1);

  HeavyCountMaxima b = ComputeHeavyCountMaxima(HalfUnits(5), HeavyValue(3));
  EXPECT_EQ(b.r0, 1);
  EXPECT_EQ(b.r_half, 2);
  EXPECT_EQ(b.r1, 1);

  HeavyCountMaxima c = ComputeHeavyCountMaxima(HalfUnits(0), HeavyValue(3));
  EXPECT_EQ(c.r0, 0);
  EXPECT_FALSE(c.r_half.has_value());
}

TEST(AllowedSetsTest, ParityClasses) {
  EXPECT_EQ(AllowedHeavyCounts{2}.Members(), (std::vector<int>{0, 2}));
  EXPECT_EQ(AllowedHeavyCounts{1}.Members(), (std::vector<int>{1}));
  EXPECT_TRUE(AllowedHeavyCounts{}.Members().empty());
  EXPECT_FALSE(AllowedHeavyCounts{3}.Contains(2));

  AllowedSets sets = ComputeAllowedSets(ComputeHeavyCountMaxima(HalfUnits(5), HeavyValue(3)));
  EXPECT_EQ(sets.n0.Members(), (std::vector<int>{1}));
  EXPECT_EQ(sets.n_half.Members(), (std::vector<int>{0, 2}));
  EXPECT_EQ(sets.n1.Members(), (std::vector<int>{1}));
}

TEST(SmallBundleStateTest, SecondWorkedExample) {
  Instance inst = ParseInstance(kP2);
  SmallBundleState state(inst, Greedy(inst));
  EXPECT_EQ(state.x(), HalfUnits(5));
  EXPECT_EQ(state.Classify(0), ValueClass::kXOne);
  EXPECT_EQ(state.Classify(1), ValueClass::kX);
  EXPECT_EQ(state.CountHalf(), 0);
  EXPECT_FALSE(EasyCaseOptimal(state));
  EXPECT_EQ(state.LightGoodsOf(0).size(), 2u);
}

TEST(EasyCaseTest, FirstWorkedExampleIsAlreadyOptimal) {
  Instance inst = ParseInstance(kP1);
  SmallBundleState state(inst, Greedy(inst));
  EXPECT_TRUE(EasyCaseOptimal(state));
}

TEST(BuildParityProblemTest, SecondWorkedExample) {
  Instance inst = ParseInstance(kP2);
  SmallBundleState state(inst, Greedy(inst));
  SmallParityProblem sub = BuildParityProblem(state, 0, 1, std::nullopt);
  EXPECT_EQ(sub.goods, (std::vector<GoodId>{0, 1}));
  EXPECT_EQ(sub.agents, (std::vector<AgentId>{0, 1}));
  EXPECT_EQ(sub.problem.caps, (std::vector<int>{2, 2}));

  auto solution = SolveParity(sub.problem);
  ASSERT_TRUE(solution.has_value());
  SmallBundleState improved = ApplyImprovement(state, sub, *solution, 0, 1, std::nullopt);
  EXPECT_EQ(UtilityProfile(improved.SmallValues()).ToString(), "3 3");
  EXPECT_EQ(improved.CountHalf(), 2);
  EXPECT_FALSE(ValidateAllocation(inst, improved.allocation()).has_value());
}

TEST(BuildParityProblemTest, RequiresLightInX1BundleForPairInA0) {
  // Values (4, 4, 6) with x = 2: agents 0 and 1 in A0, agent 2 in A1 holding
  // heavy goods only.
  Instance inst =
      ParseInstance("nsw2v v1\ns 3/2\nagents 3\ngoods 6\nLLLLHH\nLLLLHH\nLLLLHH\n");
  GreedyResult greedy;
  greedy.alloc = Allocation{{0, 0, 1, 1, 2, 2}};
  greedy.x = HalfUnits(4);
  greedy.k0 = MinimalLargeHeavyCount(greedy.x, inst.s());
  greedy.small_agents = {0, 1, 2};
  greedy.small_goods = {0, 1, 2, 3, 4, 5};
  SmallBundleState state(inst, greedy);
  EXPECT_THROW(BuildParityProblem(state, 0, 1, std::nullopt), std::invalid_argument);
}

TEST(InjectLightIntoX1Test, MovesHeavyAndLight) {
  // Agent 0 holds two heavy goods (value 3 = x + 1), agent 1 two light goods
  // (value 2 = x).
  Instance inst = ParseInstance("nsw2v v1\ns 3/2\nagents 2\ngoods 4\nHHLL\nHHLL\n");
  GreedyResult greedy;
  greedy.alloc = Allocation{{0, 0, 1, 1}};
  greedy.x = HalfUnits(4);
  greedy.k0 = MinimalLargeHeavyCount(greedy.x, inst.s());
  greedy.small_agents = {0, 1};
  greedy.small_goods = {0, 1, 2, 3};
  SmallBundleState state(inst, greedy);
  EXPECT_EQ(InjectLightIntoX1(state), InjectOutcome::kImproved);
  EXPECT_EQ(UtilityProfile(state.SmallValues()).ToString(), "2.5 2.5");
}

TEST(InjectLightIntoX1Test, NoReachableAgentProvesOptimality) {
  // Agent 0 alone values the heavy goods.
  Instance inst = ParseInstance("nsw2v v1\ns 3/2\nagents 2\ngoods 4\nHHLL\nLLLL\n");
  GreedyResult greedy;
  greedy.alloc = Allocation{{0, 0, 1, 1}};
  greedy.x = HalfUnits(4);
  greedy.k0 = MinimalLargeHeavyCount(greedy.x, inst.s());
  greedy.small_agents = {0, 1};
  greedy.small_goods = {0, 1, 2, 3};
  SmallBundleState state(inst, greedy);
  EXPECT_EQ(InjectLightIntoX1(state), InjectOutcome::kProvenOptimal);
}

TEST(SmallBundleStateTest, ReassignRejectsIneligibleHeavyOwner) {
  Instance inst = ParseInstance("nsw2v v1\ns 3/2\nagents 2\ngoods 4\nHHLL\nLLLL\n");
  SmallBundleState state(inst, Greedy(inst));
  EXPECT_THROW(state.Reassign(0, 1), std::logic_error);
}

TEST(OptimizeTest, WorkedExamples) {
  Instance p1 = ParseInstance(kP1);
  EXPECT_EQ(BundleValues(p1, Optimize(p1, Greedy(p1))).ToString(), "2.5 2.5");
  Instance p2 = ParseInstance(kP2);
  OptimizeTrace trace;
  EXPECT_EQ(BundleValues(p2, Optimize(p2, Greedy(p2), &trace)).ToString(), "3 3");
  ASSERT_EQ(trace.steps.size(), 2u);
  EXPECT_EQ(trace.steps[1].kind, StepKind::kParityImproved);
  EXPECT_EQ(trace.steps[1].n_half, trace.steps[0].n_half + 2);
}

TEST(OptimizeTest, AllLightInstance) {
  Instance inst(3, 7, HeavyValue(3), std::vector<Label>(21, Label::kLight));
  UtilityProfile got = BundleValues(inst, Optimize(inst, Greedy(inst)));
  // Light goods are worth 1 to everyone, so values are whole numbers.
  EXPECT_EQ(got.ToString(), "2 2 3");
  EXPECT_EQ(NswCompare(got, BruteForceOptimal(inst).profile), NswOrder::kEqual);
}

TEST(OptimizeTest, ZeroMinimumShortCircuits) {
  Instance inst = ParseInstance("nsw2v v1\ns 3/2\nagents 3\ngoods 2\nHH\nHH\nLL\n");
  OptimizeTrace trace;
  Allocation alloc = Optimize(inst, Greedy(inst), &trace);
  EXPECT_TRUE(trace.short_circuited);
  EXPECT_FALSE(ValidateAllocation(inst, alloc).has_value());
}

}  // namespace
}  // namespace nsw2v
