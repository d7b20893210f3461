// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "polling/numerics.hpp"
#include "polling/rng.hpp"

namespace polling {

/// Scalar jump size distribution together with a nonnegative scale vector:
/// one jump adds X * scale to the joint workload, X drawn from the base.
struct JumpSpec {
  enum class Base { Deterministic, Exponential, Discrete };

  Base base = Base::Deterministic;
  double value = 0.0;           // deterministic size or exponential mean
  Vec points;                   // discrete atoms
  Vec weights;                  // discrete probabilities, sum to 1
  Vec scale;                    // c >= 0, one entry per queue

  double lst(double s) const;            // E e^{-sX}
  double one_minus_lst(double s) const;  // 1 - lst(s), stable near s = 0
  double mean() const;
  double sample(Rng& rng) const;
};

struct CppComponent {
  double rate = 0.0;  // Poisson intensity
  JumpSpec jump;
};

/// Drift plus finite-activity compound Poisson subordinator in N dimensions.
/// Correlation across queues enters through the per-component scale vectors.
struct SubordinatorSpec {
  Vec drift;  // d >= 0
  std::vector<CppComponent> components;

  int dim() const { return static_cast<int>(drift.size()); }

  /// Laplace exponent phi(u) = d.u + sum_k rate_k (1 - B_k(u.c_k)).
  /// No domain check; valid in a small neighbourhood of the nonnegative
  /// orthant, which the finite-difference routines rely on.
  double exponent(const Vec& u) const;

  /// Gradient of the exponent at 0: d + sum_k rate_k E[X_k] c_k.
  Vec mean_rate() const;
};

bool operator==(const JumpSpec& a, const JumpSpec& b);
bool operator==(const CppComponent& a, const CppComponent& b);
bool operator==(const SubordinatorSpec& a, const SubordinatorSpec& b);

/// phi(u) with the documented domain check (u >= 0 -> std::domain_error).
double phi_eval(const SubordinatorSpec& spec, const Vec& u);

void validate(const SubordinatorSpec& spec, int dim);

/// Input seen by queue `queue` while the server is visiting it: the phase
/// subordinator minus a service drift, plus an optional Brownian term on
/// the served coordinate.
struct ServedProcessSpec {
  SubordinatorSpec input;
  int queue = 0;
  double service_rate = 1.0;  // r > 0
  double brownian_sd = 0.0;   // sigma >= 0

  int dim() const { return input.dim(); }

  /// phi_A(u) = phi_input(u) - r u_i - (sigma^2/2) u_i^2. Unchecked.
  double exponent(const Vec& u) const;

  /// Gradient of phi_A at 0; coordinate `queue` is the (negative) net drain
  /// rate E A_i(1).
  Vec mean_rate() const;
  double drain_rate() const { return input.mean_rate()[queue] - service_rate; }
};

bool operator==(const ServedProcessSpec& a, const ServedProcessSpec& b);

double phi_a_eval(const ServedProcessSpec& spec, const Vec& u);

void validate(const ServedProcessSpec& spec, int dim);

/// Switch-over period: a positive duration with closed-form LST plus the
/// subordinator feeding the queues while the server moves.
struct SwitchSpec {
  enum class Kind { Deterministic, Exponential, Erlang };

  Kind kind = Kind::Deterministic;
  double mean = 1.0;
  int shape = 1;  // Erlang stages
  SubordinatorSpec input;

  double lst(double s) const;
  /// (1 - lst(s)) / s, continued by E S at s = 0. This is the LST of the
  /// stationary-excess integrand and stays exact where the plain ratio is 0/0.
  double integrated_lst(double s) const;
  double sample(Rng& rng) const;
};

bool operator==(const SwitchSpec& a, const SwitchSpec& b);

double switch_lst(const SwitchSpec& spec, double s);

void validate(const SwitchSpec& spec, int dim);

struct JumpEvent {
  double time = 0.0;
  Vec amount;
};

struct Increment {
  Vec total;
  std::vector<JumpEvent> events;  // ordered by time
};

/// Exact sample of the subordinator over [0, horizon]: Poisson event times
/// with their jump vectors, plus the drift contribution.
Increment sample_increment(const SubordinatorSpec& spec, double horizon, Rng& rng);

}  // namespace polling
