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

#include "nsw2v/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace nsw2v {

namespace {

// Mixed-radix counter over per-position choice lists. Calls visit(position,
// old_choice, new_choice) for each position that changes; returns false once
// the counter wraps around.
class Odometer {
 public:
  explicit Odometer(std::vector<std::vector<int>> choices)
      : choices_(std::move(choices)), index_(choices_.size(), 0) {}

  int current(std::size_t position) const { return choices_[position][index_[position]]; }

  template <typename Visit>
  bool Advance(Visit visit) {
    for (std::size_t p = 0; p < choices_.size(); ++p) {
      const int old_choice = current(p);
      if (++index_[p] < choices_[p].size()) {
        visit(p, old_choice, current(p));
        return true;
      }
      index_[p] = 0;
      visit(p, old_choice, current(p));
    }
    return false;
  }

 private:
  std::vector<std::vector<int>> choices_;
  std::vector<std::size_t> index_;
};

double StateCount(const std::vector<std::vector<int>>& choices) {
  double count = 1;
  for (const auto& c : choices) count *= static_cast<double>(c.size());
  return count;
}

std::vector<std::vector<int>> AllocationChoices(const Instance& inst, bool heavy_only) {
  std::vector<int> everyone(inst.agents());
  std::iota(everyone.begin(), everyone.end(), 0);
  std::vector<std::vector<int>> choices;
  for (GoodId g = 0; g < inst.goods(); ++g) {
    if (inst.is_heavy(g)) {
      choices.emplace_back(inst.eligible(g).begin(), inst.eligible(g).end());
    } else if (!heavy_only) {
      choices.push_back(everyone);
    }
  }
  return choices;
}

}  // namespace

OracleResult BruteForceOptimal(const Instance& inst) {
  auto choices = AllocationChoices(inst, /*heavy_only=*/false);
  const double states = StateCount(choices);
  if (states > kOracleStateLimit) {
    throw OracleTooLarge("oracle would enumerate " + std::to_string(states) +
                         " allocations (limit 1e8)");
  }
  Odometer odometer(choices);
  std::vector<std::int64_t> values(inst.agents(), 0);
  Allocation current{std::vector<AgentId>(inst.goods())};
  for (GoodId g = 0; g < inst.goods(); ++g) {
    current.owner[g] = odometer.current(g);
    values[current.owner[g]] += inst.good_value(current.owner[g], g).raw;
  }

  // Products fit in 128 bits when total^n < 2^126.
  std::int64_t total = 0;
  for (GoodId g = 0; g < inst.goods(); ++g) total += std::max<std::int64_t>(inst.s().half_units(), 2);
  const bool narrow = inst.agents() * std::log2(static_cast<double>(total) + 1.0) < 126.0;

  unsigned __int128 best_narrow = 0;
  BigInt best_wide = -1;
  Allocation best = current;
  bool first = true;
  do {
    bool better = false;
    if (narrow) {
      unsigned __int128 product = 1;
      for (std::int64_t v : values) product *= static_cast<unsigned __int128>(v);
      better = first || product > best_narrow;
      if (better) best_narrow = product;
    } else {
      BigInt product = 1;
      for (std::int64_t v : values) product *= v;
      better = first || product > best_wide;
      if (better) best_wide = product;
    }
    if (better) best = current;
    first = false;
  } while (odometer.Advance([&](std::size_t g, int from, int to) {
    const GoodId good = static_cast<GoodId>(g);
    values[from] -= inst.good_value(from, good).raw;
    values[to] += inst.good_value(to, good).raw;
    current.owner[good] = to;
  }));

  return OracleResult{BundleValues(inst, best), best};
}

bool BruteForceParity(const ParityProblem& problem) {
  std::vector<std::vector<int>> choices(problem.goods);
  for (auto [g, a] : problem.edges) {
    if (std::find(choices[g].begin(), choices[g].end(), a) == choices[g].end()) {
      choices[g].push_back(a);
    }
  }
  for (const auto& c : choices) {
    if (c.empty()) return false;
  }
  if (StateCount(choices) > kParityOracleStateLimit) {
    throw OracleTooLarge("parity oracle would enumerate more than 1e7 maps");
  }
  Odometer odometer(choices);
  std::vector<int> degree(problem.agents(), 0);
  for (int g = 0; g < problem.goods; ++g) ++degree[odometer.current(g)];
  do {
    bool ok = true;
    for (int a = 0; a < problem.agents() && ok; ++a) ok = problem.Allows(a, degree[a]);
    if (ok) return true;
  } while (odometer.Advance([&](std::size_t, int from, int to) {
    --degree[from];
    ++degree[to];
  }));
  return false;
}

std::vector<int> BruteForceLexmin(const Instance& inst) {
  auto choices = AllocationChoices(inst, /*heavy_only=*/true);
  if (StateCount(choices) > kOracleStateLimit) {
    throw OracleTooLarge("lexmin oracle would enumerate more than 1e8 heavy allocations");
  }
  Odometer odometer(choices);
  std::vector<int> degree(inst.agents(), 0);
  for (std::size_t p = 0; p < choices.size(); ++p) ++degree[odometer.current(p)];
  std::vector<int> best;
  do {
    std::vector<int> sorted = degree;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (best.empty() || sorted < best) best = std::move(sorted);
  } while (odometer.Advance([&](std::size_t, int from, int to) {
    --degree[from];
    ++degree[to];
  }));
  return best;
}

}  // namespace nsw2v
