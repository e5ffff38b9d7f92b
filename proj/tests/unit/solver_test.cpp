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

#include "nsw2v/solver.hpp"

#include <random>

#include <gtest/gtest.h>

#include "nsw2v/oracle.hpp"
#include "nsw2v/valuation.hpp"

namespace nsw2v {
namespace {

TEST(SolveTest, WorkedExamplesPassInvariantChecks) {
  for (const char* text : {"nsw2v v1\ns 3/2\nagents 2\ngoods 4\nHHLL\nHHLL\n",
                           "nsw2v v1\ns 3/2\nagents 2\ngoods 5\nHHLLL\nHHLLL\n"}) {
    Instance inst = ParseInstance(text);
    SolveTrace trace;
    Allocation alloc = Solve(inst, &trace);
    EXPECT_TRUE(CheckSolveInvariants(inst, trace, alloc).empty());
  }
}

TEST(SolveTest, TamperedResultIsReported) {
  Instance inst = ParseInstance("nsw2v v1\ns 3/2\nagents 2\ngoods 5\nHHLLL\nHHLLL\n");
  SolveTrace trace;
  Allocation alloc = Solve(inst, &trace);
  alloc.owner[4] = 1 - alloc.owner[4];
  EXPECT_FALSE(CheckSolveInvariants(inst, trace, alloc).empty());
}

TEST(SolveTest, LargerInstancesMatchOracle) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const HeavyValue s(3 + 2 * static_cast<int>(rng() % 5));
    Instance inst = GenerateInstance(4, 11, s, 0.35, rng());
    SolveTrace trace;
    Allocation alloc = Solve(inst, &trace);
    EXPECT_TRUE(CheckSolveInvariants(inst, trace, alloc).empty());
    EXPECT_EQ(NswCompare(BundleValues(inst, alloc), BruteForceOptimal(inst).profile),
              NswOrder::kEqual)
        << SerializeInstance(inst);
  }
}

TEST(SolveTest, ScalesToLargeInstances) {
  Instance inst = GenerateInstance(200, 1000, HeavyValue(7), 0.3, 99);
  SolveTrace trace;
  Allocation alloc = Solve(inst, &trace);
  EXPECT_FALSE(ValidateAllocation(inst, alloc).has_value());
  EXPECT_TRUE(CheckSolveInvariants(inst, trace, alloc).empty());
}

TEST(GenerateInstanceTest, DeterministicAndExtremeProbabilities) {
  EXPECT_EQ(GenerateInstance(3, 8, HeavyValue(3), 0.5, 7),
            GenerateInstance(3, 8, HeavyValue(3), 0.5, 7));
  EXPECT_TRUE(GenerateInstance(3, 8, HeavyValue(3), 0.0, 7).heavy_goods().empty());
  Instance all = GenerateInstance(3, 8, HeavyValue(3), 1.0, 7);
  EXPECT_EQ(all.heavy_goods().size(), 8u);
  EXPECT_EQ(all.eligible(0).size(), 3u);
}

}  // namespace
}  // namespace nsw2v
