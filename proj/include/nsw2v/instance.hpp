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

#ifndef NSW2V_INSTANCE_HPP_
#define NSW2V_INSTANCE_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nsw2v {

using AgentId = int;
using GoodId = int;

inline constexpr AgentId kNoAgent = -1;

// A value measured in halves: the value v is stored as 2v. All solver
// arithmetic happens on these integers.
struct HalfUnits {
  std::int64_t raw = 0;

  constexpr HalfUnits() = default;
  constexpr explicit HalfUnits(std::int64_t r) : raw(r) {}

  constexpr auto operator<=>(const HalfUnits&) const = default;

  constexpr HalfUnits& operator+=(HalfUnits o) {
    raw += o.raw;
    return *this;
  }
  constexpr HalfUnits& operator-=(HalfUnits o) {
    raw -= o.raw;
    return *this;
  }
  friend constexpr HalfUnits operator+(HalfUnits a, HalfUnits b) {
    return HalfUnits(a.raw + b.raw);
  }
  friend constexpr HalfUnits operator-(HalfUnits a, HalfUnits b) {
    return HalfUnits(a.raw - b.raw);
  }

  // "3", "2.5", "0".
  std::string ToDecimal() const;
};

inline constexpr HalfUnits kHalf{1};
inline constexpr HalfUnits kOne{2};

// The heavy value s, held as s_hu = 2s. Only half-integer s > 1 is
// representable: s_hu is odd and at least 3.
class HeavyValue {
 public:
  // Throws std::invalid_argument unless s_hu is odd and >= 3.
  explicit HeavyValue(int s_hu);

  int half_units() const { return s_hu_; }
  HalfUnits value() const { return HalfUnits(s_hu_); }
  int floor() const { return (s_hu_ - 1) / 2; }
  int ceil() const { return (s_hu_ + 1) / 2; }

  // "p/2"
  std::string ToString() const;

  friend bool operator==(HeavyValue, HeavyValue) = default;

 private:
  int s_hu_;
};

enum class Label : std::uint8_t { kLight, kHeavy };

class Instance {
 public:
  // labels is row-major: labels[agent * goods + good]. Throws
  // std::invalid_argument on size mismatch or agents < 1.
  Instance(int agents, int goods, HeavyValue s, std::vector<Label> labels);

  int agents() const { return agents_; }
  int goods() const { return goods_; }
  HeavyValue s() const { return s_; }

  Label label(AgentId agent, GoodId good) const;
  bool considers_heavy(AgentId agent, GoodId good) const {
    return label(agent, good) == Label::kHeavy;
  }

  // A good is heavy iff some agent labels it H.
  bool is_heavy(GoodId good) const { return !eligible_[Checked(good)].empty(); }

  // Agents labelling the good H, ascending. Empty for light goods.
  std::span<const AgentId> eligible(GoodId good) const {
    return eligible_[Checked(good)];
  }

  std::span<const GoodId> heavy_goods() const { return heavy_goods_; }
  std::span<const GoodId> light_goods() const { return light_goods_; }

  // Throws std::out_of_range on bad indices.
  HalfUnits good_value(AgentId agent, GoodId good) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.agents_ == b.agents_ && a.goods_ == b.goods_ && a.s_ == b.s_ &&
           a.labels_ == b.labels_;
  }

 private:
  std::size_t Checked(GoodId good) const;

  int agents_;
  int goods_;
  HeavyValue s_;
  std::vector<Label> labels_;
  std::vector<std::vector<AgentId>> eligible_;
  std::vector<GoodId> heavy_goods_;
  std::vector<GoodId> light_goods_;
};

// Owner per good, indexed by good. Light goods carry kNoAgent.
struct HeavyAllocation {
  std::vector<AgentId> owner;

  friend bool operator==(const HeavyAllocation&,
                         const HeavyAllocation&) = default;
};

// Owner per good, total over all goods.
struct Allocation {
  std::vector<AgentId> owner;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

enum class ParseErrorKind {
  kHeader,
  kHeavyValue,
  kIntegerHeavyValue,
  kAgentCount,
  kGoodCount,
  kRowCount,
  kRowLength,
  kLabelCharacter,
  kAllocationFormat,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

// Parses "p/2" (p odd, p >= 3). Integer values such as "4/2" or "2" raise
// kIntegerHeavyValue; anything else malformed raises kHeavyValue.
HeavyValue ParseHeavyValue(std::string_view text);

Instance ParseInstance(std::string_view text);
std::string SerializeInstance(const Instance& inst);

// Parses the two-line allocation format. Entries must be non-negative
// integers and there must be exactly `goods` of them; range checks against
// the agent count are left to ValidateAllocation.
Allocation ParseAllocation(std::string_view text, int goods);
std::string SerializeAllocation(const Allocation& alloc);

struct AllocationViolation {
  GoodId good;
  std::string message;
};

// nullopt when the allocation is a partition of the goods (one in-range
// owner per good) that gives every heavy good to an agent labelling it H.
std::optional<AllocationViolation> ValidateAllocation(const Instance& inst,
                                                      const Allocation& alloc);

}  // namespace nsw2v

#endif  // NSW2V_INSTANCE_HPP_
