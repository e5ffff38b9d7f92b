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

// Lexmin allocation of the heavy goods.
//
// An alternating path starts at an agent with one of its own heavy goods,
// moves to another agent that labels that good H, continues with a good
// owned by that agent, and so on. Augmenting it shifts every good on the
// path one step forward: the first agent loses one heavy good, the last
// agent gains one, and interior agents keep their counts.

#ifndef NSW2V_LEXMIN_HPP_
#define NSW2V_LEXMIN_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "nsw2v/instance.hpp"

namespace nsw2v {

struct AlternatingPath {
  // agents[0] is the endpoint that gives up a good; goods[t] moves from
  // agents[t] to agents[t + 1].
  std::vector<AgentId> agents;
  std::vector<GoodId> goods;
};

// Every heavy good to its lowest-indexed eligible agent.
HeavyAllocation InitialHeavyAllocation(const Instance& inst);

std::vector<int> HeavyDegrees(const Instance& inst, const HeavyAllocation& heavy);

void Augment(HeavyAllocation& heavy, const AlternatingPath& path);

// Breadth-first search over alternating paths leaving `source`, with an
// optional restriction of the agents that may appear on the path. Layers are
// expanded in increasing agent order and every agent is visited at most once.
// Returns the path to the first agent (lowest index within the shallowest
// layer) for which `is_target` holds.
template <typename TargetFn>
std::optional<AlternatingPath> FindAlternatingPath(const Instance& inst,
                                                   const HeavyAllocation& heavy,
                                                   const std::vector<AgentId>& sources,
                                                   const std::vector<bool>* allowed,
                                                   TargetFn is_target);

// Agents reachable by an alternating path from any of `sources` (sources
// included), indexed by agent.
std::vector<bool> ReachableAgents(const Instance& inst, const HeavyAllocation& heavy,
                                  const std::vector<AgentId>& sources,
                                  const std::vector<bool>* allowed = nullptr);

// Shortest alternating path from `source` to an agent owning at least two
// heavy goods fewer than `source`.
std::optional<AlternatingPath> FindRebalancePath(const Instance& inst,
                                                 const HeavyAllocation& heavy,
                                                 AgentId source);

struct LexminTrace {
  // Sum of squared heavy degrees before the first and after every
  // augmentation.
  std::vector<std::int64_t> potentials;
  int augmentations = 0;
};

HeavyAllocation Lexmin(const Instance& inst, HeavyAllocation heavy,
                       LexminTrace* trace = nullptr);

bool IsLexmin(const Instance& inst, const HeavyAllocation& heavy);

struct Level {
  int level = 0;
  std::vector<AgentId> r;        // own `level` heavy goods
  std::vector<AgentId> r_prime;  // own `level - 1`, reachable from r
};

struct LevelSets {
  int max_degree = 0;
  // levels[0] is the top level max_degree, then downwards to level 0.
  std::vector<Level> levels;

  const Level* Find(int level) const;
};

// Throws std::logic_error when `heavy` is not lexmin.
LevelSets ComputeLevelSets(const Instance& inst, const HeavyAllocation& heavy);

// True iff, for every threshold k, no alternating path leads from an agent
// in the union of levels >= k to an agent in a lower level.
bool LevelSetsAreTransferClosed(const Instance& inst, const HeavyAllocation& heavy,
                                const LevelSets& sets);

// ---------------------------------------------------------------------------

template <typename TargetFn>
std::optional<AlternatingPath> FindAlternatingPath(const Instance& inst,
                                                   const HeavyAllocation& heavy,
                                                   const std::vector<AgentId>& sources,
                                                   const std::vector<bool>* allowed,
                                                   TargetFn is_target) {
  const int n = inst.agents();
  std::vector<std::vector<GoodId>> owned(n);
  for (GoodId g : inst.heavy_goods()) {
    if (heavy.owner[g] != kNoAgent) owned[heavy.owner[g]].push_back(g);
  }
  std::vector<AgentId> parent(n, kNoAgent);
  std::vector<GoodId> via(n, -1);
  std::vector<bool> visited(n, false);
  std::vector<AgentId> layer;
  for (AgentId a : sources) {
    if (!visited[a]) {
      visited[a] = true;
      layer.push_back(a);
    }
  }
  while (!layer.empty()) {
    std::vector<AgentId> next;
    for (AgentId a : layer) {
      for (GoodId g : owned[a]) {
        for (AgentId b : inst.eligible(g)) {
          if (visited[b] || (allowed != nullptr && !(*allowed)[b])) continue;
          visited[b] = true;
          parent[b] = a;
          via[b] = g;
          next.push_back(b);
        }
      }
    }
    std::sort(next.begin(), next.end());
    for (AgentId b : next) {
      if (!is_target(b)) continue;
      AlternatingPath path;
      for (AgentId v = b; v != kNoAgent; v = parent[v]) {
        path.agents.push_back(v);
        if (parent[v] != kNoAgent) path.goods.push_back(via[v]);
      }
      std::reverse(path.agents.begin(), path.agents.end());
      std::reverse(path.goods.begin(), path.goods.end());
      return path;
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace nsw2v

#endif  // NSW2V_LEXMIN_HPP_
