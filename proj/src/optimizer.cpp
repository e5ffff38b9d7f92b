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

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nsw2v/lexmin.hpp"

namespace nsw2v {

namespace {

std::optional<int> MaxHeavyCount(std::int64_t value_hu, int s_hu) {
  std::int64_t r = value_hu / s_hu;
  if ((value_hu - r * s_hu) % 2 != 0) --r;
  if (r < 0) return std::nullopt;
  return static_cast<int>(r);
}

const AllowedHeavyCounts& SetFor(const AllowedSets& sets, ValueClass c) {
  switch (c) {
    case ValueClass::kX:
      return sets.n0;
    case ValueClass::kXHalf:
      return sets.n_half;
    case ValueClass::kXOne:
      return sets.n1;
  }
  return sets.n0;
}

std::string Agent(AgentId a) { return "agent " + std::to_string(a); }

OptimizeStep Snapshot(const SmallBundleState& state, StepKind kind) {
  OptimizeStep step;
  step.kind = kind;
  step.small_values = state.SmallValues();
  for (AgentId a : state.agents()) step.small_heavy_count += state.heavy_count(a);
  step.n_half = state.CountHalf();
  return step;
}

}  // namespace

HeavyCountMaxima ComputeHeavyCountMaxima(HalfUnits x, HeavyValue s) {
  const int s_hu = s.half_units();
  HeavyCountMaxima maxima{MaxHeavyCount(x.raw, s_hu), MaxHeavyCount(x.raw + 1, s_hu),
                          MaxHeavyCount(x.raw + 2, s_hu)};
  if (maxima.r0 && maxima.r_half && maxima.r1 &&
      SatisfiedMaximaCases(maxima, x, s) != 1) {
    throw std::logic_error("heavy-count maxima violate the case identity at x = " +
                           x.ToDecimal());
  }
  return maxima;
}

int SatisfiedMaximaCases(const HeavyCountMaxima& maxima, HalfUnits x, HeavyValue s) {
  if (!maxima.r0 || !maxima.r_half || !maxima.r1) {
    throw std::invalid_argument("case identity needs all three maxima");
  }
  const int r0 = *maxima.r0;
  const int rh = *maxima.r_half;
  const int r1 = *maxima.r1;
  const std::int64_t x_plus_one = x.raw + 2;
  const std::int64_t next_multiple = static_cast<std::int64_t>(rh + 1) * s.half_units();
  const bool multiple = x_plus_one % s.half_units() == 0;

  int satisfied = 0;
  if (multiple && r0 == rh - 1 && r1 == rh + 1) ++satisfied;
  if (!multiple && x_plus_one > next_multiple && r0 == rh + 1 && r1 == rh + 1) ++satisfied;
  if (!multiple && x_plus_one < next_multiple && r0 == rh - 1 && r1 == rh - 1) ++satisfied;
  return satisfied;
}

std::vector<int> AllowedHeavyCounts::Members() const {
  std::vector<int> out;
  if (!cap) return out;
  for (int h = *cap % 2; h <= *cap; h += 2) out.push_back(h);
  return out;
}

AllowedSets ComputeAllowedSets(const HeavyCountMaxima& maxima) {
  return {AllowedHeavyCounts{maxima.r0}, AllowedHeavyCounts{maxima.r_half},
          AllowedHeavyCounts{maxima.r1}};
}

SmallBundleState::SmallBundleState(const Instance& inst, const GreedyResult& greedy)
    : inst_(&inst),
      alloc_(greedy.alloc),
      x_(greedy.x),
      agents_(greedy.small_agents),
      small_(inst.agents(), false),
      values_(inst.agents()),
      heavy_(inst.agents(), 0),
      light_(inst.agents(), 0) {
  for (AgentId a : agents_) small_[a] = true;
  for (GoodId g = 0; g < inst.goods(); ++g) {
    const AgentId a = alloc_.owner[g];
    values_[a] += inst.good_value(a, g);
    ++(inst.is_heavy(g) ? heavy_ : light_)[a];
  }
}

std::optional<ValueClass> SmallBundleState::Classify(AgentId a) const {
  if (values_[a] == x_) return ValueClass::kX;
  if (values_[a] == x_ + kHalf) return ValueClass::kXHalf;
  if (values_[a] == x_ + kOne) return ValueClass::kXOne;
  return std::nullopt;
}

std::vector<AgentId> SmallBundleState::Members(ValueClass c) const {
  std::vector<AgentId> out;
  for (AgentId a : agents_) {
    if (Classify(a) == c) out.push_back(a);
  }
  return out;
}

int SmallBundleState::CountHalf() const {
  return static_cast<int>(Members(ValueClass::kXHalf).size());
}

std::vector<GoodId> SmallBundleState::LightGoodsOf(AgentId a) const {
  std::vector<GoodId> out;
  for (GoodId g : inst_->light_goods()) {
    if (alloc_.owner[g] == a) out.push_back(g);
  }
  return out;
}

std::vector<HalfUnits> SmallBundleState::SmallValues() const {
  std::vector<HalfUnits> out;
  out.reserve(agents_.size());
  for (AgentId a : agents_) out.push_back(values_[a]);
  return out;
}

void SmallBundleState::Reassign(GoodId good, AgentId to) {
  const AgentId from = alloc_.owner.at(good);
  if (!small_.at(from) || !small_.at(to)) {
    throw std::logic_error("small-bundle optimisation touched a large bundle");
  }
  if (inst_->is_heavy(good) && !inst_->considers_heavy(to, good)) {
    throw std::logic_error("heavy good " + std::to_string(good) + " moved to " + Agent(to) +
                           ", who considers it light");
  }
  const bool heavy = inst_->is_heavy(good);
  values_[from] -= inst_->good_value(from, good);
  --(heavy ? heavy_ : light_)[from];
  alloc_.owner[good] = to;
  values_[to] += inst_->good_value(to, good);
  ++(heavy ? heavy_ : light_)[to];
}

bool EasyCaseOptimal(const SmallBundleState& state) {
  bool any_x = false;
  bool any_x_one = false;
  for (AgentId a : state.agents()) {
    auto c = state.Classify(a);
    if (!c) {
      throw std::logic_error(Agent(a) + " has small value " + state.value(a).ToDecimal() +
                             " outside {x, x+1/2, x+1}");
    }
    any_x = any_x || *c == ValueClass::kX;
    any_x_one = any_x_one || *c == ValueClass::kXOne;
  }
  return !any_x || !any_x_one;
}

InjectOutcome InjectLightIntoX1(SmallBundleState& state) {
  const std::vector<AgentId> a1 = state.Members(ValueClass::kXOne);
  if (a1.empty() || state.Members(ValueClass::kX).empty()) {
    throw std::logic_error("light injection needs bundles of value x and x + 1");
  }
  for (AgentId a : a1) {
    if (!state.heavy_only(a)) {
      throw std::logic_error("light injection needs every x + 1 bundle to be heavy-only");
    }
  }
  const Instance& inst = state.instance();
  const int moved_lights = inst.s().floor();
  std::vector<bool> allowed(inst.agents(), false);
  for (AgentId a : state.agents()) allowed[a] = true;

  auto path = FindAlternatingPath(
      inst, HeavyAllocation{state.allocation().owner}, a1, &allowed, [&](AgentId b) {
        auto c = state.Classify(b);
        return c == ValueClass::kX ||
               (c == ValueClass::kXHalf && state.light_count(b) > moved_lights);
      });
  if (!path) return InjectOutcome::kProvenOptimal;

  const AgentId i = path->agents.front();
  const AgentId j = path->agents.back();
  const bool reached_x = state.Classify(j) == ValueClass::kX;
  std::vector<GoodId> lights = state.LightGoodsOf(j);
  if (static_cast<int>(lights.size()) < moved_lights) {
    throw std::logic_error(Agent(j) + " holds fewer than floor(s) light goods");
  }
  for (std::size_t t = 0; t < path->goods.size(); ++t) {
    state.Reassign(path->goods[t], path->agents[t + 1]);
  }
  for (int t = 0; t < moved_lights; ++t) state.Reassign(lights[t], i);

  const HalfUnits half = state.x() + kHalf;
  if (reached_x) {
    if (state.value(i) != half || state.value(j) != half) {
      throw std::logic_error("light injection did not produce two x + 1/2 bundles");
    }
    return InjectOutcome::kImproved;
  }
  if (state.value(i) != half || state.value(j) != state.x() + kOne || state.heavy_only(j)) {
    throw std::logic_error("light injection did not produce a light-containing x + 1 bundle");
  }
  return InjectOutcome::kCreatedLightX1;
}

SmallParityProblem BuildParityProblem(const SmallBundleState& state, AgentId i, AgentId j,
                                      std::optional<AgentId> k) {
  const Instance& inst = state.instance();
  auto in_range = [&](AgentId a) { return a >= 0 && a < inst.agents() && state.is_small(a); };
  if (!in_range(i) || !in_range(j) || i == j) {
    throw std::invalid_argument("i and j must be distinct small agents");
  }
  const auto ci = state.Classify(i);
  const auto cj = state.Classify(j);
  if (ci == ValueClass::kXHalf || cj == ValueClass::kXHalf || !ci || !cj) {
    throw std::invalid_argument("i and j must own bundles of value x or x + 1");
  }
  if (*ci != *cj) {
    if (k) throw std::invalid_argument("a mixed pair takes no third agent");
  } else {
    if (!k || !in_range(*k) || *k == i || *k == j) {
      throw std::invalid_argument("a same-class pair needs a distinct third small agent");
    }
    if (*ci == ValueClass::kX &&
        (state.Classify(*k) != ValueClass::kXOne || state.heavy_only(*k))) {
      throw std::invalid_argument(
          "for a pair of value x, k must own a light-containing x + 1 bundle");
    }
    if (*ci == ValueClass::kXOne && state.Classify(*k) != ValueClass::kX) {
      throw std::invalid_argument("for a pair of value x + 1, k must own a bundle of value x");
    }
  }

  const AllowedSets sets = ComputeAllowedSets(ComputeHeavyCountMaxima(state.x(), inst.s()));
  if (!sets.n_half.cap) throw std::domain_error("no bundle can have value x + 1/2");

  SmallParityProblem sub;
  sub.agents = state.agents();
  std::vector<int> node_of(inst.agents(), -1);
  for (std::size_t t = 0; t < sub.agents.size(); ++t) node_of[sub.agents[t]] = static_cast<int>(t);

  for (AgentId a : sub.agents) {
    const auto c = state.Classify(a);
    if (!c) throw std::logic_error(Agent(a) + " has a value outside {x, x+1/2, x+1}");
    const AllowedHeavyCounts* allowed = &SetFor(sets, *c);
    if (a == i || a == j) allowed = &sets.n_half;
    if (k && a == *k) allowed = &sets.n0;
    if (!allowed->cap) throw std::logic_error("missing allowed set for " + Agent(a));
    sub.problem.caps.push_back(*allowed->cap);
  }
  for (GoodId g : inst.heavy_goods()) {
    if (!state.is_small(state.allocation().owner[g])) continue;
    const int node = static_cast<int>(sub.goods.size());
    sub.goods.push_back(g);
    for (AgentId a : inst.eligible(g)) {
      if (state.is_small(a)) sub.problem.edges.emplace_back(node, node_of[a]);
    }
  }
  sub.problem.goods = static_cast<int>(sub.goods.size());
  return sub;
}

SmallBundleState ApplyImprovement(const SmallBundleState& state,
                                  const SmallParityProblem& sub,
                                  const ParitySolution& solution, AgentId i, AgentId j,
                                  std::optional<AgentId> k) {
  if (!SatisfiesParity(sub.problem, solution)) {
    throw std::invalid_argument("solution does not satisfy the parity problem");
  }
  const Instance& inst = state.instance();
  const int s_hu = inst.s().half_units();
  const HalfUnits x = state.x();

  SmallBundleState next = state;
  for (std::size_t node = 0; node < sub.goods.size(); ++node) {
    next.Reassign(sub.goods[node], sub.agents[solution.assignment[node]]);
  }

  std::vector<int> needed(inst.agents(), 0);
  long long needed_total = 0;
  long long available = 0;
  for (AgentId a : state.agents()) {
    HalfUnits target = state.value(a);
    if (a == i || a == j) target = x + kHalf;
    if (k && a == *k) target = state.Classify(i) == ValueClass::kX ? x : x + kOne;
    const std::int64_t light_hu = target.raw - static_cast<std::int64_t>(next.heavy_count(a)) * s_hu;
    if (light_hu < 0 || light_hu % 2 != 0) {
      throw std::logic_error("target value of " + Agent(a) +
                             " is not reachable with its heavy goods");
    }
    needed[a] = static_cast<int>(light_hu / 2);
    needed_total += needed[a];
    available += state.light_count(a);
  }
  if (needed_total != available) {
    throw std::logic_error("light-good accounting mismatch: need " +
                           std::to_string(needed_total) + ", have " +
                           std::to_string(available));
  }

  std::vector<GoodId> pool;
  for (AgentId a : state.agents()) {
    std::vector<GoodId> lights = next.LightGoodsOf(a);
    for (std::size_t t = needed[a]; t < lights.size(); ++t) pool.push_back(lights[t]);
  }
  std::sort(pool.begin(), pool.end());
  std::size_t taken = 0;
  for (AgentId a : state.agents()) {
    while (next.light_count(a) < needed[a]) next.Reassign(pool[taken++], a);
  }

  for (AgentId a : next.agents()) {
    if (!next.Classify(a)) {
      throw std::logic_error(Agent(a) + " left {x, x+1/2, x+1} after an improvement");
    }
  }
  if (next.CountHalf() != state.CountHalf() + 2) {
    throw std::logic_error("improvement did not add exactly two x + 1/2 bundles");
  }
  return next;
}

Allocation Optimize(const Instance& inst, const GreedyResult& greedy, OptimizeTrace* trace) {
  if (trace != nullptr) {
    trace->x = greedy.x;
    trace->small_agents = greedy.small_agents;
  }
  if (greedy.x.raw == 0) {
    if (trace != nullptr) trace->short_circuited = true;
    return greedy.alloc;
  }

  SmallBundleState state(inst, greedy);
  auto record = [&](StepKind kind) {
    if (trace != nullptr) trace->steps.push_back(Snapshot(state, kind));
  };
  record(StepKind::kInitial);

  while (!EasyCaseOptimal(state)) {
    const std::vector<AgentId> a0 = state.Members(ValueClass::kX);
    const std::vector<AgentId> a1 = state.Members(ValueClass::kXOne);
    const bool all_heavy_only =
        std::all_of(a1.begin(), a1.end(), [&](AgentId a) { return state.heavy_only(a); });
    if (all_heavy_only) {
      const InjectOutcome outcome = InjectLightIntoX1(state);
      if (outcome == InjectOutcome::kProvenOptimal) break;
      record(outcome == InjectOutcome::kImproved ? StepKind::kInjectImproved
                                                 : StepKind::kInjectCreatedLight);
      continue;
    }

    const AllowedSets sets = ComputeAllowedSets(ComputeHeavyCountMaxima(state.x(), inst.s()));
    if (!sets.n_half.cap) break;

    std::vector<AgentId> ends;
    std::merge(a0.begin(), a0.end(), a1.begin(), a1.end(), std::back_inserter(ends));
    std::vector<AgentId> light_x1;
    for (AgentId a : a1) {
      if (!state.heavy_only(a)) light_x1.push_back(a);
    }

    bool improved = false;
    for (std::size_t p = 0; p < ends.size() && !improved; ++p) {
      for (std::size_t q = p + 1; q < ends.size() && !improved; ++q) {
        const AgentId i = ends[p];
        const AgentId j = ends[q];
        const ValueClass ci = *state.Classify(i);
        const ValueClass cj = *state.Classify(j);
        std::vector<std::optional<AgentId>> thirds;
        if (ci != cj) {
          thirds.emplace_back(std::nullopt);
        } else {
          for (AgentId k : ci == ValueClass::kX ? light_x1 : a0) {
            if (k != i && k != j) thirds.emplace_back(k);
          }
        }
        for (const auto& k : thirds) {
          SmallParityProblem sub = BuildParityProblem(state, i, j, k);
          if (trace != nullptr) ++trace->parity_problems;
          if (auto solution = SolveParity(sub.problem)) {
            state = ApplyImprovement(state, sub, *solution, i, j, k);
            record(StepKind::kParityImproved);
            improved = true;
            break;
          }
        }
      }
    }
    if (!improved) break;
  }
  return state.allocation();
}

}  // namespace nsw2v
