// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "polling/model.hpp"
#include "polling/simulate.hpp"

namespace polling {

/// Parsed and validated run description: model, tolerances, simulation plan
/// and the evaluation grid.
struct ConfigDocument {
  int version = 1;
  PollingModel model;
  SimConfig sim;
  std::vector<Vec> u_grid;
};

bool operator==(const ConfigDocument& a, const ConfigDocument& b);

/// Strict JSON parsing: unknown keys are rejected with their path, numbers
/// may be given as decimal strings, defaults are applied here so the result
/// is fully materialized.
ConfigDocument parse_config(const std::string& text);

/// Normalized round-trippable form: parse(serialize(doc)) == doc.
std::string serialize_config(const ConfigDocument& doc);

}  // namespace polling
