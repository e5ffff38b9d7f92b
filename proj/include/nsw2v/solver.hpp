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

#ifndef NSW2V_SOLVER_HPP_
#define NSW2V_SOLVER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "nsw2v/greedy.hpp"
#include "nsw2v/instance.hpp"
#include "nsw2v/lexmin.hpp"
#include "nsw2v/optimizer.hpp"

namespace nsw2v {

struct SolveTrace {
  HeavyAllocation initial_heavy;
  HeavyAllocation lexmin_heavy;
  LexminTrace lexmin;
  GreedyResult greedy;
  OptimizeTrace optimize;
};

// Lexmin heavy allocation, greedy light placement, small-bundle optimisation.
Allocation Solve(const Instance& inst, SolveTrace* trace = nullptr);

// Re-checks every invariant recorded in `trace` for the final allocation:
// restricted partition, lexmin termination and potential decrease, level-set
// closure, greedy invariants, value-set membership of small bundles after
// every optimiser step, the x + 1/2 factorisation identity, large-bundle
// immutability, heavy-count and value conservation, and the improvement
// count bound. Returns one message per violation.
std::vector<std::string> CheckSolveInvariants(const Instance& inst, const SolveTrace& trace,
                                              const Allocation& result);

// Seeded instance generator. Labels are drawn row by row (agent-major) from
// std::mt19937_64(seed): u = (next() >> 11) * 2^-53, label H iff u < q.
Instance GenerateInstance(int agents, int goods, HeavyValue s, double heavy_prob,
                          std::uint64_t seed);

}  // namespace nsw2v

#endif  // NSW2V_SOLVER_HPP_
