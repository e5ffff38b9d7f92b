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

#include "nsw2v/instance.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace nsw2v {

namespace {

// Parses a decimal non-negative integer occupying the whole view.
std::optional<long long> ParseCount(std::string_view text) {
  if (text.empty()) return std::nullopt;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// "key <value>" with exactly one space.
std::optional<std::string_view> KeyedValue(std::string_view line,
                                           std::string_view key) {
  if (line.size() <= key.size() + 1 || line.substr(0, key.size()) != key ||
      line[key.size()] != ' ') {
    return std::nullopt;
  }
  return line.substr(key.size() + 1);
}

}  // namespace

std::string HalfUnits::ToDecimal() const {
  std::string out = std::to_string(raw / 2);
  if (raw % 2 != 0) out += ".5";
  return out;
}

HeavyValue::HeavyValue(int s_hu) : s_hu_(s_hu) {
  if (s_hu < 3 || s_hu % 2 == 0) {
    throw std::invalid_argument("heavy value must be p/2 with p odd and >= 3, got " +
                                std::to_string(s_hu) + "/2");
  }
}

std::string HeavyValue::ToString() const {
  return std::to_string(s_hu_) + "/2";
}

Instance::Instance(int agents, int goods, HeavyValue s, std::vector<Label> labels)
    : agents_(agents), goods_(goods), s_(s), labels_(std::move(labels)) {
  if (agents < 1) throw std::invalid_argument("instance needs at least one agent");
  if (goods < 0) throw std::invalid_argument("negative good count");
  if (labels_.size() != static_cast<std::size_t>(agents) * goods) {
    throw std::invalid_argument("label table size does not match agents x goods");
  }
  eligible_.resize(goods);
  for (GoodId g = 0; g < goods; ++g) {
    for (AgentId a = 0; a < agents; ++a) {
      if (labels_[static_cast<std::size_t>(a) * goods + g] == Label::kHeavy) {
        eligible_[g].push_back(a);
      }
    }
    (eligible_[g].empty() ? light_goods_ : heavy_goods_).push_back(g);
  }
}

std::size_t Instance::Checked(GoodId good) const {
  if (good < 0 || good >= goods_) throw std::out_of_range("good index out of range");
  return static_cast<std::size_t>(good);
}

Label Instance::label(AgentId agent, GoodId good) const {
  if (agent < 0 || agent >= agents_) throw std::out_of_range("agent index out of range");
  return labels_[static_cast<std::size_t>(agent) * goods_ + Checked(good)];
}

HalfUnits Instance::good_value(AgentId agent, GoodId good) const {
  return considers_heavy(agent, good) ? s_.value() : kOne;
}

HeavyValue ParseHeavyValue(std::string_view text) {
  auto slash = text.find('/');
  std::optional<long long> numerator;
  if (slash == std::string_view::npos) {
    if (ParseCount(text)) {
      throw ParseError(ParseErrorKind::kIntegerHeavyValue,
                       "s must be a half-integer p/2 with p odd and >= 3; "
                       "integer s is not supported");
    }
  } else if (text.substr(slash + 1) == "2") {
    numerator = ParseCount(text.substr(0, slash));
  }
  if (!numerator) {
    throw ParseError(ParseErrorKind::kHeavyValue,
                     "s must be written as p/2 with p odd and >= 3");
  }
  if (*numerator % 2 == 0) {
    throw ParseError(ParseErrorKind::kIntegerHeavyValue,
                     "s must be a half-integer p/2 with p odd and >= 3; "
                     "integer s is not supported");
  }
  if (*numerator < 3 || *numerator > std::numeric_limits<int>::max()) {
    throw ParseError(ParseErrorKind::kHeavyValue,
                     "s must be p/2 with p odd and >= 3 (s > 1)");
  }
  return HeavyValue(static_cast<int>(*numerator));
}

Instance ParseInstance(std::string_view text) {
  auto lines = SplitLines(text);
  if (lines.empty() || lines[0] != "nsw2v v1") {
    throw ParseError(ParseErrorKind::kHeader, "expected header line 'nsw2v v1'");
  }
  auto s_text = lines.size() > 1 ? KeyedValue(lines[1], "s") : std::nullopt;
  if (!s_text) throw ParseError(ParseErrorKind::kHeader, "expected line 's <p>/2'");
  HeavyValue s = ParseHeavyValue(*s_text);

  auto agents_text = lines.size() > 2 ? KeyedValue(lines[2], "agents") : std::nullopt;
  if (!agents_text) throw ParseError(ParseErrorKind::kHeader, "expected line 'agents <n>'");
  auto agents = ParseCount(*agents_text);
  if (!agents || *agents < 1 || *agents > 1'000'000) {
    throw ParseError(ParseErrorKind::kAgentCount, "agent count must be an integer >= 1");
  }

  auto goods_text = lines.size() > 3 ? KeyedValue(lines[3], "goods") : std::nullopt;
  if (!goods_text) throw ParseError(ParseErrorKind::kHeader, "expected line 'goods <m>'");
  auto goods = ParseCount(*goods_text);
  if (!goods || *goods > 1'000'000) {
    throw ParseError(ParseErrorKind::kGoodCount, "good count must be an integer >= 0");
  }

  const int n = static_cast<int>(*agents);
  const int m = static_cast<int>(*goods);
  if (lines.size() != 4 + static_cast<std::size_t>(n)) {
    throw ParseError(ParseErrorKind::kRowCount,
                     "expected " + std::to_string(n) + " label rows, found " +
                         std::to_string(lines.size() < 4 ? 0 : lines.size() - 4));
  }
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(n) * m);
  for (int a = 0; a < n; ++a) {
    std::string_view row = lines[4 + a];
    if (row.size() != static_cast<std::size_t>(m)) {
      throw ParseError(ParseErrorKind::kRowLength,
                       "label row " + std::to_string(a) + " has length " +
                           std::to_string(row.size()) + ", expected " + std::to_string(m));
    }
    for (char c : row) {
      if (c == 'H') {
        labels.push_back(Label::kHeavy);
      } else if (c == 'L') {
        labels.push_back(Label::kLight);
      } else {
        throw ParseError(ParseErrorKind::kLabelCharacter,
                         "label row " + std::to_string(a) +
                             " contains a character other than H or L");
      }
    }
  }
  return Instance(n, m, s, std::move(labels));
}

std::string SerializeInstance(const Instance& inst) {
  std::ostringstream out;
  out << "nsw2v v1\n"
      << "s " << inst.s().ToString() << "\n"
      << "agents " << inst.agents() << "\n"
      << "goods " << inst.goods() << "\n";
  for (AgentId a = 0; a < inst.agents(); ++a) {
    for (GoodId g = 0; g < inst.goods(); ++g) {
      out << (inst.considers_heavy(a, g) ? 'H' : 'L');
    }
    out << '\n';
  }
  return out.str();
}

Allocation ParseAllocation(std::string_view text, int goods) {
  auto lines = SplitLines(text);
  if (lines.empty() || lines[0] != "allocation v1") {
    throw ParseError(ParseErrorKind::kAllocationFormat,
                     "expected header line 'allocation v1'");
  }
  if (lines.size() != 2 && !(lines.size() == 1 && goods == 0)) {
    throw ParseError(ParseErrorKind::kAllocationFormat,
                     "expected exactly one line of owners after the header");
  }
  Allocation alloc;
  std::string_view rest = lines.size() == 2 ? lines[1] : std::string_view();
  while (!rest.empty()) {
    auto space = rest.find(' ');
    std::string_view token = rest.substr(0, space);
    auto owner = ParseCount(token);
    if (!owner || *owner > std::numeric_limits<int>::max()) {
      throw ParseError(ParseErrorKind::kAllocationFormat,
                       "owner entries must be non-negative integers separated by "
                       "single spaces");
    }
    alloc.owner.push_back(static_cast<AgentId>(*owner));
    if (space == std::string_view::npos) break;
    rest = rest.substr(space + 1);
    if (rest.empty()) {
      throw ParseError(ParseErrorKind::kAllocationFormat, "trailing space in owner line");
    }
  }
  if (alloc.owner.size() != static_cast<std::size_t>(goods)) {
    throw ParseError(ParseErrorKind::kAllocationFormat,
                     "expected " + std::to_string(goods) + " owners, found " +
                         std::to_string(alloc.owner.size()));
  }
  return alloc;
}

std::string SerializeAllocation(const Allocation& alloc) {
  std::string out = "allocation v1\n";
  for (std::size_t g = 0; g < alloc.owner.size(); ++g) {
    if (g > 0) out += ' ';
    out += std::to_string(alloc.owner[g]);
  }
  out += '\n';
  return out;
}

std::optional<AllocationViolation> ValidateAllocation(const Instance& inst,
                                                      const Allocation& alloc) {
  if (alloc.owner.size() != static_cast<std::size_t>(inst.goods())) {
    GoodId first = static_cast<GoodId>(std::min<std::size_t>(alloc.owner.size(),
                                                            inst.goods()));
    return AllocationViolation{first, "allocation covers " +
                                          std::to_string(alloc.owner.size()) +
                                          " goods, instance has " +
                                          std::to_string(inst.goods())};
  }
  for (GoodId g = 0; g < inst.goods(); ++g) {
    AgentId a = alloc.owner[g];
    if (a < 0 || a >= inst.agents()) {
      return AllocationViolation{g, "good " + std::to_string(g) +
                                        " is assigned to nonexistent agent " +
                                        std::to_string(a)};
    }
    if (inst.is_heavy(g) && !inst.considers_heavy(a, g)) {
      return AllocationViolation{g, "heavy good " + std::to_string(g) +
                                        " is assigned to agent " + std::to_string(a) +
                                        ", who considers it light"};
    }
  }
  return std::nullopt;
}

}  // namespace nsw2v
