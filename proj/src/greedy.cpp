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

#include "nsw2v/greedy.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "nsw2v/lexmin.hpp"
#include "nsw2v/valuation.hpp"

namespace nsw2v {

int MinimalLargeHeavyCount(HalfUnits x, HeavyValue s) {
  return static_cast<int>((x.raw + 2) / s.half_units()) + 1;
}

GreedyResult GreedyFill(const Instance& inst, const HeavyAllocation& heavy) {
  GreedyResult result;
  result.alloc.owner = heavy.owner;
  std::vector<HalfUnits> values(inst.agents());
  for (GoodId g : inst.heavy_goods()) values[heavy.owner[g]] += inst.s().value();

  using Entry = std::pair<HalfUnits, AgentId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (AgentId a = 0; a < inst.agents(); ++a) queue.emplace(values[a], a);
  for (GoodId g : inst.light_goods()) {
    auto [value, a] = queue.top();
    queue.pop();
    result.alloc.owner[g] = a;
    values[a] += kOne;
    queue.emplace(values[a], a);
  }

  result.x = *std::min_element(values.begin(), values.end());
  result.k0 = MinimalLargeHeavyCount(result.x, inst.s());
  for (AgentId a = 0; a < inst.agents(); ++a) {
    if (values[a] <= result.x + kOne) result.small_agents.push_back(a);
  }
  for (GoodId g = 0; g < inst.goods(); ++g) {
    if (values[result.alloc.owner[g]] <= result.x + kOne) result.small_goods.push_back(g);
  }
  return result;
}

std::optional<std::string> PostGreedyChecks(const Instance& inst,
                                            const HeavyAllocation& heavy,
                                            const GreedyResult& result) {
  if (auto violation = ValidateAllocation(inst, result.alloc)) return violation->message;
  for (GoodId g : inst.heavy_goods()) {
    if (result.alloc.owner[g] != heavy.owner[g]) {
      return "greedy moved heavy good " + std::to_string(g);
    }
  }
  const std::vector<HalfUnits> values = AgentValues(inst, result.alloc);
  std::vector<int> lights(inst.agents(), 0);
  for (GoodId g : inst.light_goods()) ++lights[result.alloc.owner[g]];
  const std::vector<int> degrees = HeavyDegrees(inst, heavy);
  const HalfUnits x = result.x;
  const HeavyValue s = inst.s();

  if (x != *std::min_element(values.begin(), values.end())) {
    return "x is not the minimum bundle value";
  }
  if (result.k0 != MinimalLargeHeavyCount(x, s)) return "k0 is not minimal";

  std::vector<AgentId> small;
  for (AgentId a = 0; a < inst.agents(); ++a) {
    const HalfUnits v = values[a];
    const bool small_value = v == x || v == x + kHalf || v == x + kOne;
    if (small_value) {
      small.push_back(a);
      continue;
    }
    if (lights[a] > 0) {
      return "agent " + std::to_string(a) + " holds light goods in a bundle of value " +
             v.ToDecimal() + " above x + 1";
    }
    if (degrees[a] < result.k0) {
      return "agent " + std::to_string(a) + " has value " + v.ToDecimal() +
             " outside {x, x+1/2, x+1} and below k0*s";
    }
  }
  if (small != result.small_agents) return "small agent set does not match values";

  std::vector<GoodId> small_goods;
  for (GoodId g = 0; g < inst.goods(); ++g) {
    if (values[result.alloc.owner[g]] <= x + kOne) small_goods.push_back(g);
  }
  if (small_goods != result.small_goods) return "small good set does not match owners";

  const LevelSets sets = ComputeLevelSets(inst, heavy);
  if (const Level* level = sets.Find(result.k0)) {
    for (AgentId a : level->r_prime) {
      if (values[a] > x + kOne) {
        return "agent " + std::to_string(a) + " of R'_k0 is not small";
      }
      if (lights[a] > s.floor()) {
        return "agent " + std::to_string(a) + " of R'_k0 received more than floor(s) lights";
      }
    }
  }
  return std::nullopt;
}

}  // namespace nsw2v
