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

#ifndef NSW2V_GREEDY_HPP_
#define NSW2V_GREEDY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "nsw2v/instance.hpp"

namespace nsw2v {

struct GreedyResult {
  Allocation alloc;
  HalfUnits x;                       // minimum bundle value
  int k0 = 0;                        // minimal k with k*s > x + 1
  std::vector<AgentId> small_agents;  // value <= x + 1, ascending
  std::vector<GoodId> small_goods;    // goods owned by small_agents, ascending
};

// Minimal k with k * s > x + 1.
int MinimalLargeHeavyCount(HalfUnits x, HeavyValue s);

// Light goods in index order, each onto the bundle of currently smallest
// value (lowest agent index on ties).
GreedyResult GreedyFill(const Instance& inst, const HeavyAllocation& heavy);

// First violated invariant of a greedy result, or nullopt. `heavy` is the
// lexmin allocation the result was built from.
std::optional<std::string> PostGreedyChecks(const Instance& inst,
                                            const HeavyAllocation& heavy,
                                            const GreedyResult& result);

}  // namespace nsw2v

#endif  // NSW2V_GREEDY_HPP_
