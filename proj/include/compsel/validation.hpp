// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "compsel/config.hpp"
#include "compsel/parallel.hpp"

namespace compsel {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Property checks behind `compsel validate`: closed forms, linear-algebra
/// identities, Monte Carlo agreement, backhaul identity and serial/parallel
/// determinism. `trials` scales the Monte Carlo checks.
std::vector<CheckResult> run_property_checks(const ExperimentConfig& config, std::size_t trials,
                                             const ExecPolicy& policy = {});

}  // namespace compsel
