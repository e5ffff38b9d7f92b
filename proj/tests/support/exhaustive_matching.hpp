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

// Test-only helpers: an exhaustive maximum matcher and random problem
// generators shared by the unit and acceptance suites.

#ifndef NSW2V_TESTS_SUPPORT_EXHAUSTIVE_MATCHING_HPP_
#define NSW2V_TESTS_SUPPORT_EXHAUSTIVE_MATCHING_HPP_

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "nsw2v/matching.hpp"

namespace nsw2v::testing {

// Maximum matching size by branching on the lowest free vertex: leave it
// unmatched or match it to any free neighbour. Exponential; meant for <= 12
// vertices.
inline int ExhaustiveMatchingSize(int vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<bool>> adj(vertices, std::vector<bool>(vertices, false));
  for (auto [u, v] : edges) {
    if (u == v) continue;
    adj[u][v] = adj[v][u] = true;
  }
  std::vector<bool> used(vertices, false);
  auto search = [&](auto&& self, int from) -> int {
    int v = from;
    while (v < vertices && used[v]) ++v;
    if (v >= vertices) return 0;
    used[v] = true;
    int best = self(self, v + 1);
    for (int w = v + 1; w < vertices; ++w) {
      if (!used[w] && adj[v][w]) {
        used[w] = true;
        best = std::max(best, 1 + self(self, v + 1));
        used[w] = false;
      }
    }
    used[v] = false;
    return best;
  };
  return search(search, 0);
}

inline Graph RandomGraph(std::mt19937_64& rng, int max_vertices) {
  const int n = 1 + static_cast<int>(rng() % max_vertices);
  const double density = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) < density) g.AddEdge(u, v);
    }
  }
  return g;
}

inline ParityProblem RandomParityProblem(std::mt19937_64& rng, int max_goods, int max_agents) {
  ParityProblem p;
  p.goods = static_cast<int>(rng() % (max_goods + 1));
  const int agents = 1 + static_cast<int>(rng() % max_agents);
  for (int a = 0; a < agents; ++a) p.caps.push_back(static_cast<int>(rng() % 5));
  const double density = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
  for (int g = 0; g < p.goods; ++g) {
    for (int a = 0; a < agents; ++a) {
      if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) < density) {
        p.edges.emplace_back(g, a);
      }
    }
  }
  return p;
}

}  // namespace nsw2v::testing

#endif  // NSW2V_TESTS_SUPPORT_EXHAUSTIVE_MATCHING_HPP_
