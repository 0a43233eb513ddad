#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exlab/harness/config.hpp"

namespace exlab::harness {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  Caps caps = Caps::from_env();
  std::optional<int> only_n;
  std::optional<int> only_m;
  std::uint64_t seed = 0xE1AB5EEDull;
};

// Module invariant suites: kernels, linalg, game, protocols, bounds,
// harness; "all" chains every suite and the acceptance criteria.
std::vector<CheckResult> run_suite(const std::string& name,
                                   const SuiteOptions& opts = {});

// Acceptance criteria 1..10; 0 runs all of them.
std::vector<CheckResult> run_acceptance(int criterion = 0,
                                        const SuiteOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace exlab::harness
