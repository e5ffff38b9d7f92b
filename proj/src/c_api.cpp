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

#include "nsw2v/nsw2v.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "nsw2v/instance.hpp"
#include "nsw2v/oracle.hpp"
#include "nsw2v/solver.hpp"
#include "nsw2v/valuation.hpp"

struct nsw2v_instance {
  nsw2v::Instance value;
};

struct nsw2v_allocation {
  nsw2v::Allocation value;
};

namespace {

thread_local std::string last_error;

nsw2v_status Fail(nsw2v_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

char* CopyString(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
nsw2v_status Guard(Body body) {
  last_error.clear();
  try {
    return body();
  } catch (const nsw2v::ParseError& e) {
    return Fail(e.kind() == nsw2v::ParseErrorKind::kIntegerHeavyValue ? NSW2V_ERR_INTEGER_S
                                                                       : NSW2V_ERR_PARSE,
                e.what());
  } catch (const nsw2v::OracleTooLarge& e) {
    return Fail(NSW2V_ERR_TOO_LARGE, e.what());
  } catch (const std::invalid_argument& e) {
    return Fail(NSW2V_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(NSW2V_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(NSW2V_ERR_INTERNAL, e.what());
  }
}

nsw2v_status CheckValid(const nsw2v::Instance& inst, const nsw2v::Allocation& alloc) {
  if (auto violation = nsw2v::ValidateAllocation(inst, alloc)) {
    return Fail(NSW2V_ERR_INVALID_ALLOCATION, violation->message);
  }
  return NSW2V_OK;
}

}  // namespace

extern "C" {

const char* nsw2v_version(void) { return "1.0.0"; }

const char* nsw2v_last_error(void) { return last_error.c_str(); }

void nsw2v_string_free(char* text) { std::free(text); }

nsw2v_status nsw2v_instance_parse(const char* text, size_t length, nsw2v_instance** out) {
  if (text == nullptr || out == nullptr) return Fail(NSW2V_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    *out = new nsw2v_instance{nsw2v::ParseInstance(std::string_view(text, length))};
    return NSW2V_OK;
  });
}

nsw2v_status nsw2v_instance_generate(int agents, int goods, int s_numerator,
                                     double heavy_prob, uint64_t seed, nsw2v_instance** out) {
  if (out == nullptr) return Fail(NSW2V_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    if (s_numerator % 2 == 0) {
      return Fail(NSW2V_ERR_INTEGER_S, "s must be a half-integer p/2 with p odd and >= 3");
    }
    *out = new nsw2v_instance{nsw2v::GenerateInstance(agents, goods, nsw2v::HeavyValue(s_numerator),
                                                      heavy_prob, seed)};
    return NSW2V_OK;
  });
}

nsw2v_status nsw2v_instance_serialize(const nsw2v_instance* inst, char** out) {
  if (inst == nullptr || out == nullptr) return Fail(NSW2V_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    *out = CopyString(nsw2v::SerializeInstance(inst->value));
    return NSW2V_OK;
  });
}

int nsw2v_instance_agents(const nsw2v_instance* inst) {
  return inst == nullptr ? 0 : inst->value.agents();
}

int nsw2v_instance_goods(const nsw2v_instance* inst) {
  return inst == nullptr ? 0 : inst->value.goods();
}

void nsw2v_instance_free(nsw2v_instance* inst) { delete inst; }

nsw2v_status nsw2v_allocation_parse(const char* text, size_t length, int goods,
                                    nsw2v_allocation** out) {
  if (text == nullptr || out == nullptr) return Fail(NSW2V_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    *out = new nsw2v_allocation{nsw2v::ParseAllocation(std::string_view(text, length), goods)};
    return NSW2V_OK;
  });
}

nsw2v_status nsw2v_allocation_serialize(const nsw2v_allocation* alloc, char** out) {
  if (alloc == nullptr || out == nullptr) return Fail(NSW2V_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    *out = CopyString(nsw2v::SerializeAllocation(alloc->value));
    return NSW2V_OK;
  });
}

int nsw2v_allocation_owner(const nsw2v_allocation* alloc, int good) {
  if (alloc == nullptr || good < 0 || good >= static_cast<int>(alloc->value.owner.size())) {
    return -1;
  }
  return alloc->value.owner[good];
}

void nsw2v_allocation_free(nsw2v_allocation* alloc) { delete alloc; }

nsw2v_status nsw2v_allocation_validate(const nsw2v_instance* inst,
                                       const nsw2v_allocation* alloc, int* bad_good) {
  if (inst == nullptr || alloc == nullptr) return Fail(NSW2V_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    auto violation = nsw2v::ValidateAllocation(inst->value, alloc->value);
    if (bad_good != nullptr) *bad_good = violation ? violation->good : -1;
    if (violation) return Fail(NSW2V_ERR_INVALID_ALLOCATION, violation->message);
    return NSW2V_OK;
  });
}

nsw2v_status nsw2v_allocation_report(const nsw2v_instance* inst,
                                     const nsw2v_allocation* alloc, char** out) {
  if (inst == nullptr || alloc == nullptr || out == nullptr) {
    return Fail(NSW2V_ERR_INVALID_ARGUMENT, "null argument");
  }
  return Guard([&] {
    if (nsw2v_status s = CheckValid(inst->value, alloc->value); s != NSW2V_OK) return s;
    const nsw2v::UtilityProfile profile = nsw2v::BundleValues(inst->value, alloc->value);
    *out = CopyString("profile: " + profile.ToString() + "\nnsw: " +
                      nsw2v::NswDisplay(profile) + "\n");
    return NSW2V_OK;
  });
}

nsw2v_status nsw2v_compare(const nsw2v_instance* inst, const nsw2v_allocation* a,
                           const nsw2v_allocation* b, nsw2v_order* out) {
  if (inst == nullptr || a == nullptr || b == nullptr || out == nullptr) {
    return Fail(NSW2V_ERR_INVALID_ARGUMENT, "null argument");
  }
  return Guard([&] {
    if (nsw2v_status s = CheckValid(inst->value, a->value); s != NSW2V_OK) return s;
    if (nsw2v_status s = CheckValid(inst->value, b->value); s != NSW2V_OK) return s;
    switch (nsw2v::NswCompare(nsw2v::BundleValues(inst->value, a->value),
                              nsw2v::BundleValues(inst->value, b->value))) {
      case nsw2v::NswOrder::kLess:
        *out = NSW2V_LESS;
        break;
      case nsw2v::NswOrder::kEqual:
        *out = NSW2V_EQUAL;
        break;
      case nsw2v::NswOrder::kGreater:
        *out = NSW2V_GREATER;
        break;
    }
    return NSW2V_OK;
  });
}

nsw2v_status nsw2v_solve(const nsw2v_instance* inst, int check, nsw2v_allocation** out) {
  if (inst == nullptr || out == nullptr) return Fail(NSW2V_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    nsw2v::SolveTrace trace;
    nsw2v::Allocation result;
    try {
      result = nsw2v::Solve(inst->value, &trace);
    } catch (const std::logic_error& e) {
      if (!check) throw;
      return Fail(NSW2V_ERR_INVARIANT, e.what());
    }
    if (check) {
      auto violations = nsw2v::CheckSolveInvariants(inst->value, trace, result);
      if (!violations.empty()) {
        std::string message = "invariant violation: " + violations.front();
        if (violations.size() > 1) {
          message += " (+" + std::to_string(violations.size() - 1) + " more)";
        }
        return Fail(NSW2V_ERR_INVARIANT, message);
      }
    }
    *out = new nsw2v_allocation{std::move(result)};
    return NSW2V_OK;
  });
}

nsw2v_status nsw2v_oracle(const nsw2v_instance* inst, nsw2v_allocation** out) {
  if (inst == nullptr || out == nullptr) return Fail(NSW2V_ERR_INVALID_ARGUMENT, "null argument");
  return Guard([&] {
    *out = new nsw2v_allocation{nsw2v::BruteForceOptimal(inst->value).witness};
    return NSW2V_OK;
  });
}

}  // extern "C"
