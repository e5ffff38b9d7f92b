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

#include "nsw2v/matching.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nsw2v {

Graph::Graph(int vertices) : adjacency_(vertices) {}

int Graph::AddVertex() {
  adjacency_.emplace_back();
  return vertices() - 1;
}

void Graph::AddEdge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertices() || v >= vertices()) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (u == v) return;
  if (std::find(adjacency_[u].begin(), adjacency_[u].end(), v) != adjacency_[u].end()) {
    return;
  }
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

std::vector<std::pair<int, int>> Matching::Edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(mate.size()); ++u) {
    if (mate[u] > u) out.emplace_back(u, mate[u]);
  }
  return out;
}

bool Matching::IsPerfect() const {
  return std::none_of(mate.begin(), mate.end(), [](int m) { return m == kUnmatched; });
}

namespace {

// Edmonds' algorithm in the O(V^3) formulation: one BFS per exposed vertex,
// contracting odd cycles by relabelling bases.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& graph)
      : graph_(graph),
        n_(graph.vertices()),
        mate_(n_, Matching::kUnmatched),
        parent_(n_),
        base_(n_),
        used_(n_),
        in_blossom_(n_) {}

  Matching Run() {
    // Greedy warm start.
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != Matching::kUnmatched) continue;
      for (int to : graph_.neighbors(v)) {
        if (mate_[to] == Matching::kUnmatched) {
          mate_[v] = to;
          mate_[to] = v;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (mate_[root] != Matching::kUnmatched) continue;
      int end = FindAugmentingPath(root);
      while (end != Matching::kUnmatched) {
        int prev = parent_[end];
        int next = mate_[prev];
        mate_[end] = prev;
        mate_[prev] = end;
        end = next;
      }
    }
    Matching result;
    result.mate = mate_;
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] > v) ++result.size;
    }
    return result;
  }

 private:
  int LowestCommonAncestor(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == Matching::kUnmatched) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void MarkPath(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int FindAugmentingPath(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), Matching::kUnmatched);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int to : graph_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root ||
            (mate_[to] != Matching::kUnmatched && parent_[mate_[to]] != Matching::kUnmatched)) {
          const int current_base = LowestCommonAncestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          MarkPath(v, current_base, to);
          MarkPath(to, current_base, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = current_base;
            if (!used_[i]) {
              used_[i] = true;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == Matching::kUnmatched) {
          parent_[to] = v;
          if (mate_[to] == Matching::kUnmatched) return to;
          used_[mate_[to]] = true;
          queue.push_back(mate_[to]);
        }
      }
    }
    return Matching::kUnmatched;
  }

  const Graph& graph_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

Matching MaxMatching(const Graph& graph) { return BlossomMatcher(graph).Run(); }

bool SatisfiesParity(const ParityProblem& problem, const ParitySolution& solution) {
  if (solution.assignment.size() != static_cast<std::size_t>(problem.goods)) return false;
  std::set<std::pair<int, int>> eligible(problem.edges.begin(), problem.edges.end());
  std::vector<int> degree(problem.agents(), 0);
  for (int g = 0; g < problem.goods; ++g) {
    const int a = solution.assignment[g];
    if (a < 0 || a >= problem.agents() || !eligible.count({g, a})) return false;
    ++degree[a];
  }
  for (int a = 0; a < problem.agents(); ++a) {
    if (!problem.Allows(a, degree[a])) return false;
  }
  return true;
}

ParityReduction ReduceParity(const ParityProblem& problem) {
  for (int c : problem.caps) {
    if (c < 0) throw std::invalid_argument("parity caps must be non-negative");
  }
  std::vector<int> incident(problem.agents(), 0);
  for (auto [g, a] : problem.edges) {
    if (g < 0 || g >= problem.goods || a < 0 || a >= problem.agents()) {
      throw std::out_of_range("parity edge endpoint out of range");
    }
  }
  std::set<std::pair<int, int>> unique_edges(problem.edges.begin(), problem.edges.end());
  for (auto [g, a] : unique_edges) ++incident[a];

  ParityReduction red;
  red.goods = problem.goods;
  red.graph = Graph(problem.goods);
  red.effective_caps = problem.caps;
  for (int a = 0; a < problem.agents(); ++a) {
    int& cap = red.effective_caps[a];
    if (cap > incident[a]) {
      const int stepped = (cap - incident[a]) % 2 == 0 ? incident[a] : incident[a] - 1;
      if (stepped >= 0) cap = stepped;
    }
  }

  std::vector<std::vector<int>> slots(problem.agents());
  for (int a = 0; a < problem.agents(); ++a) {
    const int cap = red.effective_caps[a];
    for (int t = 0; t < cap; ++t) {
      slots[a].push_back(red.graph.AddVertex());
      red.slot_owner.push_back(a);
    }
    for (int t = 0; t < (cap - cap % 2) / 2; ++t) {
      const int c = red.graph.AddVertex();
      const int c_prime = red.graph.AddVertex();
      red.slot_owner.push_back(-1);
      red.slot_owner.push_back(-1);
      red.graph.AddEdge(c, c_prime);
      for (int slot : slots[a]) {
        red.graph.AddEdge(c, slot);
        red.graph.AddEdge(c_prime, slot);
      }
    }
  }
  for (auto [g, a] : problem.edges) {
    for (int slot : slots[a]) red.graph.AddEdge(g, slot);
  }
  return red;
}

std::optional<ParitySolution> ParityReduction::Decode(const Matching& matching) const {
  if (!matching.IsPerfect()) return std::nullopt;
  ParitySolution solution;
  solution.assignment.resize(goods);
  for (int g = 0; g < goods; ++g) {
    const int slot = matching.mate[g];
    if (slot < goods) return std::nullopt;
    const int agent = slot_owner[slot - goods];
    if (agent < 0) return std::nullopt;
    solution.assignment[g] = agent;
  }
  return solution;
}

std::optional<ParitySolution> SolveParity(const ParityProblem& problem) {
  ParityReduction red = ReduceParity(problem);
  return red.Decode(MaxMatching(red.graph));
}

}  // namespace nsw2v
