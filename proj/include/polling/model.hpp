// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "polling/disciplines.hpp"
#include "polling/levy.hpp"

namespace polling {

struct Tolerances {
  double trunc_eps = 1e-12;     // product truncation threshold
  double fd_step = 1e-6;        // centered-difference step
  double root_atol = 1e-13;     // psi root residual
  double stability_tol = 1e-9;  // |rho_A| band classified as critical
  int max_product_terms = 10000;
};

bool operator==(const Tolerances& a, const Tolerances& b);

/// N cyclically served queues: per-queue visit-phase process, switch-over
/// spec (duration + switch-phase input) and discipline. With
/// `globally_gated` the disciplines are ignored and the whole cycle serves
/// the fluid marked at its beginning.
struct PollingModel {
  std::vector<ServedProcessSpec> visit;
  std::vector<SwitchSpec> switch_over;
  std::vector<DisciplineSpec> discipline;
  bool globally_gated = false;
  Tolerances tol;

  int size() const { return static_cast<int>(visit.size()); }
};

bool operator==(const PollingModel& a, const PollingModel& b);

/// Full validation; throws std::invalid_argument with a message naming the
/// offending queue. Returns the model to allow `auto m = validated(...)`.
PollingModel validated(PollingModel m);

/// True when every visit and switch phase uses the same input process (the
/// fixed-input model of the base theory).
bool uniform_input(const PollingModel& m);

/// Renumbers queues so that original queue `first` becomes queue 0; all
/// coordinate-indexed data (drift, scales, queue indices) is permuted along.
PollingModel rotate(const PollingModel& m, int first);

/// Permutes a coordinate vector the same way rotate() permutes the queues.
Vec rotate_vec(const Vec& u, int first);

}  // namespace polling
