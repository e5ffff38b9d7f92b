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

#include "nsw2v/matching.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "../support/exhaustive_matching.hpp"
#include "nsw2v/oracle.hpp"

namespace nsw2v {
namespace {

Graph Cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.AddEdge(v, (v + 1) % n);
  return g;
}

void ExpectConsistent(const Graph& g, const Matching& m) {
  int matched = 0;
  for (int v = 0; v < g.vertices(); ++v) {
    if (m.mate[v] == Matching::kUnmatched) continue;
    ++matched;
    EXPECT_EQ(m.mate[m.mate[v]], v);
    const auto& nb = g.neighbors(v);
    EXPECT_NE(std::find(nb.begin(), nb.end(), m.mate[v]), nb.end());
  }
  EXPECT_EQ(matched, 2 * m.size);
}

TEST(GraphTest, AddEdgeIgnoresDuplicatesAndLoops) {
  Graph g(3);
  g.AddEdge(0, 1);
  g.AddEdge(1, 0);
  g.AddEdge(2, 2);
  EXPECT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.AddVertex(), 3);
}

TEST(MaxMatchingTest, Triangle) {
  Graph g = Cycle(3);
  Matching m = MaxMatching(g);
  EXPECT_EQ(m.size, 1);
  ExpectConsistent(g, m);
}

TEST(MaxMatchingTest, PathOfFour) {
  Graph g(4);
  g.AddEdge(0, 1);
  g.AddEdge(1, 2);
  g.AddEdge(2, 3);
  Matching m = MaxMatching(g);
  EXPECT_EQ(m.size, 2);
  EXPECT_TRUE(m.IsPerfect());
}

TEST(MaxMatchingTest, Petersen) {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.AddEdge(i, (i + 1) % 5);
    g.AddEdge(i, i + 5);
    g.AddEdge(5 + i, 5 + (i + 2) % 5);
  }
  ASSERT_EQ(g.edges().size(), 15u);
  Matching m = MaxMatching(g);
  EXPECT_EQ(m.size, 5);
  EXPECT_EQ(testing::ExhaustiveMatchingSize(10, g.edges()), 5);
  ExpectConsistent(g, m);
}

TEST(MaxMatchingTest, BlossomNeedsContraction) {
  // Odd cycle 1-2-3-4-5 with pendant vertices 0 and 6 attached to it.
  Graph g(7);
  g.AddEdge(0, 1);
  for (int v = 1; v <= 5; ++v) g.AddEdge(v, v == 5 ? 1 : v + 1);
  g.AddEdge(3, 6);
  EXPECT_EQ(MaxMatching(g).size, 3);
}

TEST(MaxMatchingTest, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    Graph g = testing::RandomGraph(rng, 11);
    Matching m = MaxMatching(g);
    EXPECT_EQ(m.size, testing::ExhaustiveMatchingSize(g.vertices(), g.edges()));
    EXPECT_LE(2 * m.size, g.vertices());
    ExpectConsistent(g, m);
  }
}

TEST(SolveParityTest, TwoGoodsOneAgent) {
  ParityProblem p{2, {2}, {{0, 0}, {1, 0}}};
  auto s = SolveParity(p);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->assignment, (std::vector<int>{0, 0}));
}

TEST(SolveParityTest, WrongParityIsInfeasible) {
  ParityProblem p{1, {2}, {{0, 0}}};
  EXPECT_FALSE(SolveParity(p).has_value());
  EXPECT_FALSE(BruteForceParity(p));
}

TEST(SolveParityTest, NoGoods) {
  ParityProblem p{0, {0, 2, 4}, {}};
  auto s = SolveParity(p);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(s->assignment.empty());
}

TEST(SolveParityTest, TwoAgentsEvenCaps) {
  ParityProblem p{2, {2, 2}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
  auto s = SolveParity(p);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(SatisfiesParity(p, *s));
  EXPECT_EQ(s->assignment[0], s->assignment[1]);
}

TEST(SolveParityTest, ZeroCapBlocksPrivateGood) {
  ParityProblem p{1, {0}, {{0, 0}}};
  EXPECT_FALSE(SolveParity(p).has_value());
}

TEST(SolveParityTest, ForcedIdentity) {
  ParityProblem p{3, {1, 1, 1}, {{0, 0}, {1, 1}, {2, 2}}};
  auto s = SolveParity(p);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->assignment, (std::vector<int>{0, 1, 2}));
}

TEST(SolveParityTest, CapAboveIncidentEdgeCount) {
  // Cap 5 with two incident goods: only degree 1 has the right parity.
  ParityProblem p{2, {5, 1}, {{0, 0}, {1, 0}, {1, 1}}};
  auto s = SolveParity(p);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(SatisfiesParity(p, *s));
}

TEST(SolveParityTest, AgreesWithEnumeration) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 500; ++t) {
    ParityProblem p = testing::RandomParityProblem(rng, 6, 4);
    auto s = SolveParity(p);
    ASSERT_EQ(s.has_value(), BruteForceParity(p));
    if (s) {
      EXPECT_TRUE(SatisfiesParity(p, *s));
    }
  }
}

}  // namespace
}  // namespace nsw2v
