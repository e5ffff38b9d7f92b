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

// Exhaustive reference solvers. They share nothing with the solver beyond
// the instance and valuation types.

#ifndef NSW2V_ORACLE_HPP_
#define NSW2V_ORACLE_HPP_

#include <stdexcept>
#include <vector>

#include "nsw2v/instance.hpp"
#include "nsw2v/matching.hpp"
#include "nsw2v/valuation.hpp"

namespace nsw2v {

inline constexpr double kOracleStateLimit = 1e8;
inline constexpr double kParityOracleStateLimit = 1e7;

class OracleTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  UtilityProfile profile;
  Allocation witness;
};

// Enumerates every restricted allocation: heavy goods over their eligible
// agents, light goods over all agents. Throws OracleTooLarge above
// kOracleStateLimit allocations.
OracleResult BruteForceOptimal(const Instance& inst);

// Throws OracleTooLarge above kParityOracleStateLimit maps.
bool BruteForceParity(const ParityProblem& problem);

// Minimum over all heavy allocations of the heavy-degree vector sorted in
// decreasing order, compared lexicographically.
std::vector<int> BruteForceLexmin(const Instance& inst);

}  // namespace nsw2v

#endif  // NSW2V_ORACLE_HPP_
