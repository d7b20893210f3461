// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "polling/config.hpp"

namespace polling {

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

/// Stability report plus stationary moments (JSON).
CommandResult cmd_analyze(const ConfigDocument& cfg);

/// Analytic transforms over the u grid (CSV). Refuses unstable models.
CommandResult cmd_transform(const ConfigDocument& cfg);

/// Monte Carlo estimates over the u grid (CSV); optional segment trace dump.
CommandResult cmd_simulate(const ConfigDocument& cfg, const std::string& trace_path = "");

/// Analytic vs simulated side by side with z scores and identity checks
/// (JSON). Exit code 0 iff all |z| <= 4 and every identity holds.
CommandResult cmd_validate(const ConfigDocument& cfg);

}  // namespace polling
