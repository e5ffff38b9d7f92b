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

// Optimisation of the small bundles.
//
// After the greedy phase every bundle of value at most x + 1 (the small
// bundles, owned by N_s) has value x, x + 1/2 or x + 1. With the total value
// and the number of small bundles fixed, the NSW of the small bundles grows
// strictly with the number of bundles of value x + 1/2, so the optimiser
// repeatedly converts one pair of bundles of value x / x + 1 into two bundles
// of value x + 1/2 until no such conversion exists.
//
// Notation: A0, A_half, A1 are the small agents whose bundle has value x,
// x + 1/2, x + 1. r_d is the largest number of heavy goods a bundle of value
// x + d can hold, and N_d = {r_d, r_d - 2, ..., r_d mod 2}.

#ifndef NSW2V_OPTIMIZER_HPP_
#define NSW2V_OPTIMIZER_HPP_

#include <optional>
#include <vector>

#include "nsw2v/greedy.hpp"
#include "nsw2v/instance.hpp"
#include "nsw2v/matching.hpp"

namespace nsw2v {

struct HeavyCountMaxima {
  std::optional<int> r0;
  std::optional<int> r_half;
  std::optional<int> r1;
};

// Largest r with x + d - r*s a non-negative integer, for d in {0, 1/2, 1}.
// Throws std::logic_error if all three exist but violate the case identity
// below.
HeavyCountMaxima ComputeHeavyCountMaxima(HalfUnits x, HeavyValue s);

// The three relations between r0, r_half and r1:
//   (a) x + 1 is a multiple of s:             r0 = r_half - 1, r1 = r_half + 1
//   (b) otherwise, x + 1 > (r_half + 1) s:    r0 = r1 = r_half + 1
//   (c) otherwise:                            r0 = r1 = r_half - 1
// Returns how many cases hold with both their condition and conclusion.
// Requires all three maxima.
int SatisfiedMaximaCases(const HeavyCountMaxima& maxima, HalfUnits x, HeavyValue s);

struct AllowedHeavyCounts {
  std::optional<int> cap;

  bool Contains(int count) const {
    return cap && count >= 0 && count <= *cap && (*cap - count) % 2 == 0;
  }
  std::vector<int> Members() const;
};

struct AllowedSets {
  AllowedHeavyCounts n0;
  AllowedHeavyCounts n_half;
  AllowedHeavyCounts n1;
};

AllowedSets ComputeAllowedSets(const HeavyCountMaxima& maxima);

enum class ValueClass { kX, kXHalf, kXOne };

// Working allocation of the goods of N_s over N_s. Bundles outside N_s are
// carried along untouched.
class SmallBundleState {
 public:
  SmallBundleState(const Instance& inst, const GreedyResult& greedy);

  const Instance& instance() const { return *inst_; }
  const Allocation& allocation() const { return alloc_; }
  HalfUnits x() const { return x_; }
  const std::vector<AgentId>& agents() const { return agents_; }

  bool is_small(AgentId a) const { return small_[a]; }
  HalfUnits value(AgentId a) const { return values_[a]; }
  int heavy_count(AgentId a) const { return heavy_[a]; }
  int light_count(AgentId a) const { return light_[a]; }
  bool heavy_only(AgentId a) const { return light_[a] == 0; }

  // nullopt if the value is outside {x, x+1/2, x+1}.
  std::optional<ValueClass> Classify(AgentId a) const;
  std::vector<AgentId> Members(ValueClass c) const;
  int CountHalf() const;
  std::vector<GoodId> LightGoodsOf(AgentId a) const;
  std::vector<HalfUnits> SmallValues() const;

  void Reassign(GoodId good, AgentId to);

 private:
  const Instance* inst_;
  Allocation alloc_;
  HalfUnits x_;
  std::vector<AgentId> agents_;
  std::vector<bool> small_;
  std::vector<HalfUnits> values_;
  std::vector<int> heavy_;
  std::vector<int> light_;
};

// True iff A0 or A1 is empty. Requires every small value in
// {x, x+1/2, x+1}; throws std::logic_error otherwise.
bool EasyCaseOptimal(const SmallBundleState& state);

enum class InjectOutcome { kImproved, kCreatedLightX1, kProvenOptimal };

// Requires A0 and A1 nonempty and every A1 bundle heavy-only (throws
// std::logic_error otherwise). Looks for an alternating path inside N_s from
// an A1 agent i to an agent j that is in A0 or is in A_half with more than
// floor(s) light goods; augments it and moves floor(s) light goods from j to
// i. Reaching A0 turns both bundles into x + 1/2 (kImproved); reaching A_half
// swaps the two values and leaves a light good in the x + 1 bundle
// (kCreatedLightX1). Without such a path the state is optimal.
InjectOutcome InjectLightIntoX1(SmallBundleState& state);

struct SmallParityProblem {
  ParityProblem problem;
  std::vector<GoodId> goods;    // problem good node -> heavy good
  std::vector<AgentId> agents;  // problem agent node -> agent
};

// Heavy goods of N_s over N_s, with A_half and {i, j} constrained to N_half,
// k (when given) to N0, and every other agent to the set of its current
// class. i and j must be distinct members of A0 ∪ A1; both in A0 requires k
// to be a light-containing A1 agent, both in A1 requires k in A0, and a mixed
// pair takes no k. Throws std::invalid_argument on a precondition violation
// and std::domain_error when N_half is empty.
SmallParityProblem BuildParityProblem(const SmallBundleState& state, AgentId i, AgentId j,
                                      std::optional<AgentId> k);

// Moves the heavy goods as `solution` says, then hands out the light goods
// so that i and j reach x + 1/2, k moves to x (pair in A0) or x + 1 (pair in
// A1) and every other agent keeps its value. Throws std::invalid_argument
// for an infeasible solution and std::logic_error if the light-good
// accounting fails or the number of x + 1/2 bundles does not grow by two.
SmallBundleState ApplyImprovement(const SmallBundleState& state,
                                  const SmallParityProblem& sub,
                                  const ParitySolution& solution, AgentId i, AgentId j,
                                  std::optional<AgentId> k);

enum class StepKind { kInitial, kInjectImproved, kInjectCreatedLight, kParityImproved };

struct OptimizeStep {
  StepKind kind = StepKind::kInitial;
  std::vector<HalfUnits> small_values;  // in N_s order
  int small_heavy_count = 0;
  int n_half = 0;
};

struct OptimizeTrace {
  HalfUnits x;
  std::vector<AgentId> small_agents;
  bool short_circuited = false;
  int parity_problems = 0;
  std::vector<OptimizeStep> steps;
};

// Optimises the small bundles of a greedy result. When x = 0 some bundle is
// empty in every allocation, and the greedy allocation is returned as is.
Allocation Optimize(const Instance& inst, const GreedyResult& greedy,
                    OptimizeTrace* trace = nullptr);

}  // namespace nsw2v

#endif  // NSW2V_OPTIMIZER_HPP_
