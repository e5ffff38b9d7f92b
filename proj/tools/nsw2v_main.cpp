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

// nsw2v command-line front end. Talks to the solver only through the C API.
//
// Exit codes: 0 success, 2 input/parse error, 3 invariant violation under
// --check, 4 invalid allocation, 5 oracle instance too large.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nsw2v/nsw2v.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitInvalidAllocation = 4;
constexpr int kExitTooLarge = 5;
constexpr int kExitInternal = 1;

struct InstanceDeleter {
  void operator()(nsw2v_instance* p) const { nsw2v_instance_free(p); }
};
struct AllocationDeleter {
  void operator()(nsw2v_allocation* p) const { nsw2v_allocation_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { nsw2v_string_free(p); }
};
using InstancePtr = std::unique_ptr<nsw2v_instance, InstanceDeleter>;
using AllocationPtr = std::unique_ptr<nsw2v_allocation, AllocationDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind with a specific exit code after printing `message`.
struct Exit {
  int code;
  std::string message;
};

int ExitCodeFor(nsw2v_status status) {
  switch (status) {
    case NSW2V_OK:
      return kExitOk;
    case NSW2V_ERR_PARSE:
    case NSW2V_ERR_INTEGER_S:
    case NSW2V_ERR_INVALID_ARGUMENT:
      return kExitInput;
    case NSW2V_ERR_INVARIANT:
      return kExitInvariant;
    case NSW2V_ERR_INVALID_ALLOCATION:
      return kExitInvalidAllocation;
    case NSW2V_ERR_TOO_LARGE:
      return kExitTooLarge;
    case NSW2V_ERR_INTERNAL:
      break;
  }
  return kExitInternal;
}

void Check(nsw2v_status status) {
  if (status != NSW2V_OK) throw Exit{ExitCodeFor(status), nsw2v_last_error()};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kExitInput, "cannot read " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

InstancePtr LoadInstance(const std::string& path) {
  const std::string text = ReadFile(path);
  nsw2v_instance* raw = nullptr;
  nsw2v_status status = nsw2v_instance_parse(text.data(), text.size(), &raw);
  if (status != NSW2V_OK) throw Exit{ExitCodeFor(status), path + ": " + nsw2v_last_error()};
  return InstancePtr(raw);
}

AllocationPtr LoadAllocation(const std::string& path, const nsw2v_instance* inst) {
  const std::string text = ReadFile(path);
  nsw2v_allocation* raw = nullptr;
  nsw2v_status status =
      nsw2v_allocation_parse(text.data(), text.size(), nsw2v_instance_goods(inst), &raw);
  if (status != NSW2V_OK) throw Exit{ExitCodeFor(status), path + ": " + nsw2v_last_error()};
  return AllocationPtr(raw);
}

std::string Serialize(const nsw2v_allocation* alloc) {
  char* raw = nullptr;
  Check(nsw2v_allocation_serialize(alloc, &raw));
  return StringPtr(raw).get();
}

std::string Report(const nsw2v_instance* inst, const nsw2v_allocation* alloc) {
  char* raw = nullptr;
  Check(nsw2v_allocation_report(inst, alloc, &raw));
  return StringPtr(raw).get();
}

void Validate(const nsw2v_instance* inst, const nsw2v_allocation* alloc) {
  int bad_good = -1;
  Check(nsw2v_allocation_validate(inst, alloc, &bad_good));
}

int RunSolve(const std::string& instance_path, bool check, const std::string& out_path) {
  InstancePtr inst = LoadInstance(instance_path);
  nsw2v_allocation* raw = nullptr;
  Check(nsw2v_solve(inst.get(), check ? 1 : 0, &raw));
  AllocationPtr alloc(raw);
  if (check) Validate(inst.get(), alloc.get());
  const std::string serialized = Serialize(alloc.get());
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Exit{kExitInput, "cannot write " + out_path};
    out << serialized;
  }
  std::cout << serialized << Report(inst.get(), alloc.get());
  return kExitOk;
}

int RunVerify(const std::string& instance_path, const std::string& allocation_path) {
  InstancePtr inst = LoadInstance(instance_path);
  AllocationPtr alloc = LoadAllocation(allocation_path, inst.get());
  Validate(inst.get(), alloc.get());
  std::cout << "valid\n" << Report(inst.get(), alloc.get());
  return kExitOk;
}

// "p/2" with p odd and >= 3.
int ParseSNumerator(const std::string& text) {
  const auto slash = text.find('/');
  const std::string numerator = text.substr(0, slash);
  const bool digits = !numerator.empty() && numerator.size() < 9 &&
                      numerator.find_first_not_of("0123456789") == std::string::npos;
  if (slash != std::string::npos && text.substr(slash + 1) != "2") {
    throw Exit{kExitInput, "--s must be written as p/2"};
  }
  if (!digits) throw Exit{kExitInput, "--s must be written as p/2"};
  const int p = std::stoi(numerator);
  if (slash == std::string::npos || p % 2 == 0) {
    throw Exit{kExitInput, "s must be a half-integer p/2 with p odd and >= 3; "
                           "integer s is not supported"};
  }
  if (p < 3) throw Exit{kExitInput, "s must be p/2 with p odd and >= 3 (s > 1)"};
  return p;
}

int RunGen(int agents, int goods, const std::string& s, double heavy_prob, std::uint64_t seed) {
  if (agents < 1) throw Exit{kExitInput, "--agents must be at least 1"};
  if (goods < 0) throw Exit{kExitInput, "--goods must be non-negative"};
  if (!(heavy_prob >= 0.0 && heavy_prob <= 1.0)) {
    throw Exit{kExitInput, "--heavy-prob must lie in [0, 1]"};
  }
  nsw2v_instance* raw = nullptr;
  Check(nsw2v_instance_generate(agents, goods, ParseSNumerator(s), heavy_prob, seed, &raw));
  InstancePtr inst(raw);
  char* text = nullptr;
  Check(nsw2v_instance_serialize(inst.get(), &text));
  std::cout << StringPtr(text).get();
  return kExitOk;
}

int RunOracle(const std::string& instance_path, const std::string& against_path) {
  InstancePtr inst = LoadInstance(instance_path);
  AllocationPtr against;
  if (!against_path.empty()) {
    against = LoadAllocation(against_path, inst.get());
    Validate(inst.get(), against.get());
  }
  nsw2v_allocation* raw = nullptr;
  Check(nsw2v_oracle(inst.get(), &raw));
  AllocationPtr best(raw);
  std::cout << Report(inst.get(), best.get());
  if (against) {
    nsw2v_order order = NSW2V_EQUAL;
    Check(nsw2v_compare(inst.get(), against.get(), best.get(), &order));
    std::cout << (order == NSW2V_EQUAL  ? "equal"
                  : order == NSW2V_LESS ? "solver-worse"
                                        : "solver-better")
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Nash social welfare for two-value instances with half-integer s"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string allocation_path;
  std::string out_path;
  std::string against_path;
  bool check = false;

  CLI::App* solve = app.add_subcommand("solve", "Compute an NSW-optimal allocation");
  solve->add_option("instance", instance_path, "Instance file")->required();
  solve->add_flag("--check", check, "Re-verify every solver invariant");
  solve->add_option("--out", out_path, "Also write the allocation file here");

  CLI::App* verify = app.add_subcommand("verify", "Validate an allocation and report its NSW");
  verify->add_option("instance", instance_path, "Instance file")->required();
  verify->add_option("allocation", allocation_path, "Allocation file")->required();

  int agents = 0;
  int goods = 0;
  std::string s = "3/2";
  double heavy_prob = 0.5;
  std::uint64_t seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance on stdout");
  gen->add_option("--agents", agents, "Number of agents")->required();
  gen->add_option("--goods", goods, "Number of goods")->required();
  gen->add_option("--s", s, "Heavy value as p/2")->capture_default_str();
  gen->add_option("--heavy-prob", heavy_prob, "Probability of each H label")
      ->capture_default_str();
  gen->add_option("--seed", seed, "Generator seed")->capture_default_str();

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive optimum of a small instance");
  oracle->add_option("instance", instance_path, "Instance file")->required();
  oracle->add_option("--against", against_path, "Allocation to compare with the optimum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*solve) return RunSolve(instance_path, check, out_path);
    if (*verify) return RunVerify(instance_path, allocation_path);
    if (*gen) return RunGen(agents, goods, s, heavy_prob, seed);
    if (*oracle) return RunOracle(instance_path, against_path);
  } catch (const Exit& e) {
    std::cerr << "nsw2v: " << e.message << "\n";
    return e.code;
  }
  return kExitInternal;
}
