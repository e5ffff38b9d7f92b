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

#ifndef NSW2V_VALUATION_HPP_
#define NSW2V_VALUATION_HPP_

#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nsw2v/instance.hpp"

namespace nsw2v {

using BigInt = boost::multiprecision::cpp_int;

// Multiset of bundle values, sorted ascending.
class UtilityProfile {
 public:
  UtilityProfile() = default;
  explicit UtilityProfile(std::vector<HalfUnits> values);

  std::span<const HalfUnits> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  HalfUnits sum() const;

  // "2.5 2.5"
  std::string ToString() const;

  friend bool operator==(const UtilityProfile&, const UtilityProfile&) = default;

 private:
  std::vector<HalfUnits> values_;
};

// Product of the half-unit values. With equal agent counts the 2^n scale
// cancels, so comparing products orders allocations exactly by NSW.
struct NswProduct {
  BigInt product;
  std::size_t agents = 0;
};

NswProduct ComputeNswProduct(const UtilityProfile& profile);

// Value each agent receives, indexed by agent. Requires a valid allocation.
std::vector<HalfUnits> AgentValues(const Instance& inst, const Allocation& alloc);

UtilityProfile BundleValues(const Instance& inst, const Allocation& alloc);

enum class NswOrder { kLess, kEqual, kGreater };

const char* ToString(NswOrder order);

// Throws std::invalid_argument when the profiles have different sizes.
NswOrder NswCompare(const UtilityProfile& p, const UtilityProfile& q);

// Geometric mean of the values with six decimals. Display only.
std::string NswDisplay(const UtilityProfile& profile);

struct FactorizationCounts {
  long long n0 = 0;
  long long n_half = 0;
  long long n1 = 0;
  long long n_small = 0;
  HalfUnits sum;
};

struct FactorizationResult {
  bool ok = false;
  // Counted directly from the profile.
  FactorizationCounts counted;
  // Predicted from the sum and count alone.
  long long predicted_n0 = 0;
  long long predicted_n1 = 0;
};

// Checks the identity that expresses n0 and n1 through the profile sum S and
// size n_s:
//   n1 = (S - n_s x) - n_half / 2,   n0 = (n_s (x + 1) - S) - n_half / 2,
// and that the product x^n0 (x+1/2)^n_half (x+1)^n1 equals
//   x^(n_s(x+1) - S) (x+1)^(S - n_s x) [(x+1/2)^2 / (x(x+1))]^(n_half/2)
// (compared after squaring, in exact integers).
// Throws std::invalid_argument if x is zero or a value lies outside
// {x, x+1/2, x+1}.
FactorizationResult FactorizationCheck(HalfUnits x, std::span<const HalfUnits> values);

}  // namespace nsw2v

#endif  // NSW2V_VALUATION_HPP_
