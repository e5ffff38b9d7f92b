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

#include "nsw2v/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace nsw2v {

namespace {

BigInt Power(std::int64_t base, long long exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

}  // namespace

UtilityProfile::UtilityProfile(std::vector<HalfUnits> values)
    : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

HalfUnits UtilityProfile::sum() const {
  HalfUnits total;
  for (HalfUnits v : values_) total += v;
  return total;
}

std::string UtilityProfile::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0) out += ' ';
    out += values_[i].ToDecimal();
  }
  return out;
}

NswProduct ComputeNswProduct(const UtilityProfile& profile) {
  NswProduct result{BigInt(1), profile.size()};
  for (HalfUnits v : profile.values()) result.product *= v.raw;
  return result;
}

std::vector<HalfUnits> AgentValues(const Instance& inst, const Allocation& alloc) {
  std::vector<HalfUnits> values(inst.agents());
  for (GoodId g = 0; g < inst.goods(); ++g) {
    AgentId a = alloc.owner.at(g);
    values.at(a) += inst.good_value(a, g);
  }
  return values;
}

UtilityProfile BundleValues(const Instance& inst, const Allocation& alloc) {
  return UtilityProfile(AgentValues(inst, alloc));
}

const char* ToString(NswOrder order) {
  switch (order) {
    case NswOrder::kLess:
      return "less";
    case NswOrder::kEqual:
      return "equal";
    case NswOrder::kGreater:
      return "greater";
  }
  return "?";
}

NswOrder NswCompare(const UtilityProfile& p, const UtilityProfile& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("cannot compare profiles of different agent counts");
  }
  NswProduct a = ComputeNswProduct(p);
  NswProduct b = ComputeNswProduct(q);
  if (a.product < b.product) return NswOrder::kLess;
  if (a.product > b.product) return NswOrder::kGreater;
  return NswOrder::kEqual;
}

std::string NswDisplay(const UtilityProfile& profile) {
  long double log_sum = 0;
  for (HalfUnits v : profile.values()) {
    if (v.raw == 0) return "0.000000";
    log_sum += std::log(static_cast<long double>(v.raw) / 2.0L);
  }
  long double mean =
      profile.size() == 0 ? 0.0L : std::exp(log_sum / static_cast<long double>(profile.size()));
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6Lf", mean);
  return buf;
}

FactorizationResult FactorizationCheck(HalfUnits x, std::span<const HalfUnits> values) {
  if (x.raw <= 0) throw std::invalid_argument("factorization check needs x > 0");
  FactorizationResult result;
  FactorizationCounts& c = result.counted;
  for (HalfUnits v : values) {
    if (v == x) {
      ++c.n0;
    } else if (v == x + kHalf) {
      ++c.n_half;
    } else if (v == x + kOne) {
      ++c.n1;
    } else {
      throw std::invalid_argument("value " + v.ToDecimal() +
                                  " is outside {x, x+1/2, x+1} for x = " + x.ToDecimal());
    }
    c.sum += v;
  }
  c.n_small = static_cast<long long>(values.size());

  // Half-units: S - n_s x = (S_hu - n_s x_hu) / 2, so
  // 2 n1 = S_hu - n_s x_hu - n_half and 2 n0 = n_s (x_hu + 2) - S_hu - n_half.
  const long long above = c.sum.raw - c.n_small * x.raw;          // 2 (S - n_s x)
  const long long below = c.n_small * (x.raw + 2) - c.sum.raw;    // 2 (n_s (x+1) - S)
  const long long twice_n1 = above - c.n_half;
  const long long twice_n0 = below - c.n_half;
  bool counts_ok = twice_n1 % 2 == 0 && twice_n0 % 2 == 0;
  result.predicted_n1 = twice_n1 / 2;
  result.predicted_n0 = twice_n0 / 2;
  counts_ok = counts_ok && result.predicted_n0 == c.n0 && result.predicted_n1 == c.n1;

  // Squared identity:
  //   x^(2 n0) (x+1/2)^(2 n_half) (x+1)^(2 n1) (x (x+1))^n_half
  //     == x^below (x+1)^above (x+1/2)^(2 n_half).
  // Both sides are homogeneous of the same degree, so half-unit scaling
  // cancels and the raw integers can be used directly.
  bool product_ok = false;
  if (above >= 0 && below >= 0) {
    const std::int64_t lo = x.raw;
    const std::int64_t mid = x.raw + 1;
    const std::int64_t hi = x.raw + 2;
    BigInt lhs = Power(lo, 2 * c.n0) * Power(mid, 2 * c.n_half) * Power(hi, 2 * c.n1) *
                 Power(lo * hi, c.n_half);
    BigInt rhs = Power(lo, below) * Power(hi, above) * Power(mid, 2 * c.n_half);
    product_ok = lhs == rhs;
  }
  result.ok = counts_ok && product_ok;
  return result;
}

}  // namespace nsw2v
