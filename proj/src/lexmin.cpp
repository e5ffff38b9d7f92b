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

#include <numeric>
#include <stdexcept>

namespace nsw2v {

namespace {

std::int64_t Potential(const std::vector<int>& degrees) {
  std::int64_t total = 0;
  for (int d : degrees) total += static_cast<std::int64_t>(d) * d;
  return total;
}

}  // namespace

HeavyAllocation InitialHeavyAllocation(const Instance& inst) {
  HeavyAllocation heavy{std::vector<AgentId>(inst.goods(), kNoAgent)};
  for (GoodId g : inst.heavy_goods()) heavy.owner[g] = inst.eligible(g).front();
  return heavy;
}

std::vector<int> HeavyDegrees(const Instance& inst, const HeavyAllocation& heavy) {
  std::vector<int> degrees(inst.agents(), 0);
  for (GoodId g : inst.heavy_goods()) {
    if (heavy.owner[g] != kNoAgent) ++degrees[heavy.owner[g]];
  }
  return degrees;
}

void Augment(HeavyAllocation& heavy, const AlternatingPath& path) {
  if (path.agents.size() != path.goods.size() + 1) {
    throw std::invalid_argument("malformed alternating path");
  }
  for (std::size_t t = 0; t < path.goods.size(); ++t) {
    if (heavy.owner[path.goods[t]] != path.agents[t]) {
      throw std::invalid_argument("alternating path uses a good its agent does not own");
    }
    heavy.owner[path.goods[t]] = path.agents[t + 1];
  }
}

std::vector<bool> ReachableAgents(const Instance& inst, const HeavyAllocation& heavy,
                                  const std::vector<AgentId>& sources,
                                  const std::vector<bool>* allowed) {
  std::vector<std::vector<GoodId>> owned(inst.agents());
  for (GoodId g : inst.heavy_goods()) {
    if (heavy.owner[g] != kNoAgent) owned[heavy.owner[g]].push_back(g);
  }
  std::vector<bool> seen(inst.agents(), false);
  std::vector<AgentId> stack;
  for (AgentId a : sources) {
    if (!seen[a]) {
      seen[a] = true;
      stack.push_back(a);
    }
  }
  while (!stack.empty()) {
    AgentId a = stack.back();
    stack.pop_back();
    for (GoodId g : owned[a]) {
      for (AgentId b : inst.eligible(g)) {
        if (seen[b] || (allowed != nullptr && !(*allowed)[b])) continue;
        seen[b] = true;
        stack.push_back(b);
      }
    }
  }
  return seen;
}

std::optional<AlternatingPath> FindRebalancePath(const Instance& inst,
                                                 const HeavyAllocation& heavy,
                                                 AgentId source) {
  std::vector<int> degrees = HeavyDegrees(inst, heavy);
  const int limit = degrees.at(source) - 2;
  if (limit < 0) return std::nullopt;
  return FindAlternatingPath(inst, heavy, {source}, nullptr,
                             [&](AgentId b) { return degrees[b] <= limit; });
}

HeavyAllocation Lexmin(const Instance& inst, HeavyAllocation heavy, LexminTrace* trace) {
  std::vector<AgentId> order(inst.agents());
  if (trace != nullptr) trace->potentials.push_back(Potential(HeavyDegrees(inst, heavy)));
  while (true) {
    std::vector<int> degrees = HeavyDegrees(inst, heavy);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](AgentId a, AgentId b) { return degrees[a] > degrees[b]; });
    bool augmented = false;
    for (AgentId source : order) {
      if (degrees[source] < 2) break;
      if (auto path = FindRebalancePath(inst, heavy, source)) {
        Augment(heavy, *path);
        augmented = true;
        break;
      }
    }
    if (!augmented) break;
    if (trace != nullptr) {
      ++trace->augmentations;
      trace->potentials.push_back(Potential(HeavyDegrees(inst, heavy)));
    }
  }
  return heavy;
}

bool IsLexmin(const Instance& inst, const HeavyAllocation& heavy) {
  for (AgentId a = 0; a < inst.agents(); ++a) {
    if (FindRebalancePath(inst, heavy, a)) return false;
  }
  return true;
}

const Level* LevelSets::Find(int level) const {
  for (const Level& l : levels) {
    if (l.level == level) return &l;
  }
  return nullptr;
}

LevelSets ComputeLevelSets(const Instance& inst, const HeavyAllocation& heavy) {
  if (!IsLexmin(inst, heavy)) {
    throw std::logic_error("level sets require a lexmin heavy allocation");
  }
  std::vector<int> degrees = HeavyDegrees(inst, heavy);
  LevelSets sets;
  for (int d : degrees) sets.max_degree = std::max(sets.max_degree, d);

  std::vector<bool> in_prime_above(inst.agents(), false);
  for (int level = sets.max_degree; level >= 0; --level) {
    Level current;
    current.level = level;
    for (AgentId a = 0; a < inst.agents(); ++a) {
      if (degrees[a] == level && !in_prime_above[a]) current.r.push_back(a);
    }
    std::vector<bool> prime(inst.agents(), false);
    if (level >= 1 && !current.r.empty()) {
      std::vector<bool> reach = ReachableAgents(inst, heavy, current.r);
      for (AgentId a = 0; a < inst.agents(); ++a) {
        if (reach[a] && degrees[a] == level - 1) {
          current.r_prime.push_back(a);
          prime[a] = true;
        }
      }
    }
    in_prime_above = std::move(prime);
    sets.levels.push_back(std::move(current));
  }
  return sets;
}

bool LevelSetsAreTransferClosed(const Instance& inst, const HeavyAllocation& heavy,
                                const LevelSets& sets) {
  std::vector<bool> upper(inst.agents(), false);
  // levels run from the top down, so the union grows one level at a time.
  for (const Level& level : sets.levels) {
    for (AgentId a : level.r) upper[a] = true;
    for (AgentId a : level.r_prime) upper[a] = true;
    std::vector<AgentId> sources;
    for (AgentId a = 0; a < inst.agents(); ++a) {
      if (upper[a]) sources.push_back(a);
    }
    std::vector<bool> reach = ReachableAgents(inst, heavy, sources);
    for (AgentId a = 0; a < inst.agents(); ++a) {
      if (reach[a] && !upper[a]) return false;
    }
  }
  return true;
}

}  // namespace nsw2v
