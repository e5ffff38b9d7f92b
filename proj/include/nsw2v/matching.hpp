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

// General-graph maximum matching and parity-constrained assignment.
//
// A parity problem asks for an assignment of every good node to one of its
// eligible agent nodes such that each agent a receives a number of goods in
// {r(a) mod 2, r(a) mod 2 + 2, ..., r(a)}. It is solved by reduction to
// perfect matching:
//
//   * agent a gets r(a) slot vertices; each eligible edge (g, a) connects the
//     good vertex g to every slot of a;
//   * agent a gets (r(a) - r(a) mod 2) / 2 absorber pairs {c, c'} joined by an
//     edge, with both c and c' adjacent to every slot of a.
//
// In a perfect matching each absorber pair either matches internally or
// covers two slots, so the number of slots covered by goods is r(a) - 2t for
// some 0 <= t <= (r(a) - r(a) mod 2) / 2, i.e. exactly the allowed set.

#ifndef NSW2V_MATCHING_HPP_
#define NSW2V_MATCHING_HPP_

#include <optional>
#include <utility>
#include <vector>

namespace nsw2v {

class Graph {
 public:
  explicit Graph(int vertices = 0);

  int vertices() const { return static_cast<int>(adjacency_.size()); }
  int AddVertex();
  // Ignores self-loops and repeated edges. Throws std::out_of_range.
  void AddEdge(int u, int v);

  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::pair<int, int>> edges_;
};

struct Matching {
  static constexpr int kUnmatched = -1;

  std::vector<int> mate;
  int size = 0;

  // Matched edges as (u, v) with u < v, ordered by u.
  std::vector<std::pair<int, int>> Edges() const;
  bool IsPerfect() const;
};

// Maximum-cardinality matching via Edmonds' blossom algorithm. Deterministic
// for a given vertex and edge insertion order.
Matching MaxMatching(const Graph& graph);

struct ParityProblem {
  int goods = 0;
  // r(a) per agent node; the allowed degrees are r, r-2, ..., r mod 2.
  std::vector<int> caps;
  // Eligible (good, agent) pairs.
  std::vector<std::pair<int, int>> edges;

  int agents() const { return static_cast<int>(caps.size()); }
  bool Allows(int agent, int degree) const {
    const int cap = caps[agent];
    return degree >= 0 && degree <= cap && (cap - degree) % 2 == 0;
  }
};

struct ParitySolution {
  // assignment[g] is the agent node receiving good node g.
  std::vector<int> assignment;
};

// True iff `solution` assigns every good along an eligible edge and every
// agent degree lies in its allowed set.
bool SatisfiesParity(const ParityProblem& problem, const ParitySolution& solution);

struct ParityReduction {
  Graph graph;
  // good node g is graph vertex g.
  // slot_owner[v - goods] is the agent of slot vertex v, or -1 for absorbers.
  std::vector<int> slot_owner;
  int goods = 0;
  // Caps after clamping to the number of incident edges.
  std::vector<int> effective_caps;

  std::optional<ParitySolution> Decode(const Matching& matching) const;
};

ParityReduction ReduceParity(const ParityProblem& problem);

std::optional<ParitySolution> SolveParity(const ParityProblem& problem);

}  // namespace nsw2v

#endif  // NSW2V_MATCHING_HPP_
