// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

namespace compsel {

enum class Mode { NonCoMP, CoMP };

enum class SchedulerKind { Random, Sus };

constexpr std::string_view to_string(Mode m) { return m == Mode::CoMP ? "CoMP" : "NonCoMP"; }

constexpr std::string_view to_string(SchedulerKind s) {
  return s == SchedulerKind::Sus ? "sus" : "random";
}

}  // namespace compsel
