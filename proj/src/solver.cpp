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

#include "nsw2v/valuation.hpp"

namespace nsw2v {

Allocation Solve(const Instance& inst, SolveTrace* trace) {
  SolveTrace local;
  SolveTrace& t = trace != nullptr ? *trace : local;
  t.initial_heavy = InitialHeavyAllocation(inst);
  t.lexmin_heavy = Lexmin(inst, t.initial_heavy, &t.lexmin);
  t.greedy = GreedyFill(inst, t.lexmin_heavy);
  return Optimize(inst, t.greedy, &t.optimize);
}

std::vector<std::string> CheckSolveInvariants(const Instance& inst, const SolveTrace& trace,
                                              const Allocation& result) {
  std::vector<std::string> violations;
  auto fail = [&](std::string message) { violations.push_back(std::move(message)); };

  if (auto v = ValidateAllocation(inst, result)) {
    fail(v->message);
    return violations;
  }
  for (GoodId g : inst.heavy_goods()) {
    const AgentId a = trace.lexmin_heavy.owner[g];
    if (a < 0 || a >= inst.agents() || !inst.considers_heavy(a, g)) {
      fail("lexmin heavy allocation gives good " + std::to_string(g) + " to an ineligible agent");
      return violations;
    }
  }

  if (!IsLexmin(inst, trace.lexmin_heavy)) fail("heavy allocation is not lexmin");
  const auto& potentials = trace.lexmin.potentials;
  for (std::size_t t = 1; t < potentials.size(); ++t) {
    if (potentials[t] >= potentials[t - 1]) {
      fail("sum of squared heavy degrees did not decrease at augmentation " +
           std::to_string(t));
    }
  }
  if (violations.empty() &&
      !LevelSetsAreTransferClosed(inst, trace.lexmin_heavy,
                                  ComputeLevelSets(inst, trace.lexmin_heavy))) {
    fail("an alternating path leaves an upper union of level sets");
  }
  if (violations.empty()) {
    if (auto v = PostGreedyChecks(inst, trace.lexmin_heavy, trace.greedy)) fail("greedy: " + *v);
  }

  const GreedyResult& greedy = trace.greedy;
  const OptimizeTrace& opt = trace.optimize;
  if (opt.short_circuited) {
    if (greedy.x.raw != 0) fail("optimizer short-circuited with x > 0");
    if (result != greedy.alloc) fail("short-circuited result differs from greedy allocation");
    return violations;
  }
  if (opt.steps.empty()) {
    fail("optimizer recorded no steps");
    return violations;
  }

  std::vector<bool> small(inst.agents(), false);
  for (AgentId a : greedy.small_agents) small[a] = true;
  for (GoodId g = 0; g < inst.goods(); ++g) {
    const AgentId before = greedy.alloc.owner[g];
    const AgentId after = result.owner[g];
    if ((!small[before] || !small[after]) && before != after) {
      fail("good " + std::to_string(g) + " crossed a large bundle boundary");
    }
  }

  const OptimizeStep& first = opt.steps.front();
  HalfUnits first_sum;
  for (HalfUnits v : first.small_values) first_sum += v;
  int improvements = 0;
  for (std::size_t t = 0; t < opt.steps.size(); ++t) {
    const OptimizeStep& step = opt.steps[t];
    const std::string where = "optimizer step " + std::to_string(t);
    try {
      FactorizationResult f = FactorizationCheck(opt.x, step.small_values);
      if (!f.ok) fail(where + ": factorization identity fails");
      if (f.counted.n_half != step.n_half) fail(where + ": recorded n_half is stale");
    } catch (const std::invalid_argument& e) {
      fail(where + ": " + e.what());
    }
    HalfUnits sum;
    for (HalfUnits v : step.small_values) sum += v;
    if (sum != first_sum) fail(where + ": total small value changed");
    if (step.small_heavy_count != first.small_heavy_count) {
      fail(where + ": heavy count in small bundles changed");
    }
    if (t == 0) continue;
    const int delta = step.n_half - opt.steps[t - 1].n_half;
    if (step.kind == StepKind::kInjectCreatedLight) {
      if (delta != 0) fail(where + ": light creation changed n_half");
    } else {
      ++improvements;
      if (delta != 2) fail(where + ": improvement changed n_half by " + std::to_string(delta));
    }
  }
  if (2 * improvements > static_cast<int>(opt.small_agents.size())) {
    fail("more than n_s / 2 improvements");
  }

  const std::vector<HalfUnits> values = AgentValues(inst, result);
  std::vector<HalfUnits> final_small;
  for (AgentId a : opt.small_agents) final_small.push_back(values[a]);
  if (final_small != opt.steps.back().small_values) {
    fail("final small bundle values differ from the last optimizer step");
  }
  return violations;
}

Instance GenerateInstance(int agents, int goods, HeavyValue s, double heavy_prob,
                          std::uint64_t seed) {
  if (agents < 1 || goods < 0 || !(heavy_prob >= 0.0 && heavy_prob <= 1.0)) {
    throw std::invalid_argument("generator needs agents >= 1, goods >= 0, 0 <= q <= 1");
  }
  std::mt19937_64 engine(seed);
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(agents) * goods);
  for (std::size_t t = 0; t < static_cast<std::size_t>(agents) * goods; ++t) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    labels.push_back(u < heavy_prob ? Label::kHeavy : Label::kLight);
  }
  return Instance(agents, goods, s, std::move(labels));
}

}  // namespace nsw2v
