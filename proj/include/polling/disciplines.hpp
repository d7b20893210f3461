// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>

#include "polling/levy.hpp"

namespace polling {

/// Branching service discipline tree. Children are immutable and shared, so
/// copies are cheap and evaluation is safe for concurrent use.
struct DisciplineSpec {
  enum class Kind { Gated, Exhaustive, PExhaustive, Mixture, Composition };

  Kind kind = Kind::Exhaustive;
  double p = 0.0;  // PExhaustive keep-fraction or Mixture weight
  std::shared_ptr<const DisciplineSpec> left;   // Mixture left / Composition first
  std::shared_ptr<const DisciplineSpec> right;  // Mixture right / Composition second

  static DisciplineSpec gated();
  static DisciplineSpec exhaustive();
  static DisciplineSpec p_exhaustive(double p);
  static DisciplineSpec mixture(double p, DisciplineSpec left, DisciplineSpec right);
  static DisciplineSpec composition(DisciplineSpec first, DisciplineSpec second);

  /// True if any node in the tree is Gated (those require a unit-rate,
  /// diffusion-free server).
  bool contains_gated() const;
};

bool operator==(const DisciplineSpec& a, const DisciplineSpec& b);

void validate(const DisciplineSpec& d, const ServedProcessSpec& served);

/// Nonnegative root of theta -> phi_A(u with coordinate i replaced by theta).
/// The map is concave with a negative slope at the root, so an expanding
/// bracket plus bisection cannot miss. Coordinate i of u is ignored.
double psi_solve(const ServedProcessSpec& served, const Vec& u, double atol = 1e-13);

/// Laplace exponent eta_i(u) of the workload replacement process H_i(x).
double eta_eval(const DisciplineSpec& d, const ServedProcessSpec& served,
                const Vec& u, double atol = 1e-13);

/// Centered finite differences with one Richardson step; closed forms for
/// gated/exhaustive/p-exhaustive are exercised as oracles in the tests.
Vec eta_gradient_at_zero(const DisciplineSpec& d, const ServedProcessSpec& served,
                         double h = 1e-6);

/// E tau_i(1) = (1 - d eta_i/du_i(0)) / (-E A_i(1)): the mean time spent at
/// the queue per unit of workload found there.
double mean_visit_time_per_unit(const DisciplineSpec& d, const ServedProcessSpec& served,
                                double h = 1e-6);

}  // namespace polling
