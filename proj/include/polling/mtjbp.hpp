// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "polling/model.hpp"
#include "polling/numerics.hpp"

namespace polling {

enum class Verdict { Stable, Unstable, Critical, Indeterminate };

const char* to_string(Verdict v);

struct StabilityReport {
  Matrix rate_matrix;   // a_ij = mean work rate at Q_j while serving Q_i
  double rho_a = 0.0;   // Perron eigenvalue of the (Metzler) rate matrix
  Matrix mean_matrix;   // m_ij = d kappa_i / d u_j (0)
  double rho_m = 0.0;   // spectral radius of the mean matrix
  Verdict verdict = Verdict::Indeterminate;
  bool irreducible = false;  // of the rate matrix; the sign test needs it
};

/// Value of an infinite-product transform with the truncation bookkeeping.
struct TransformValue {
  double value = 1.0;
  int terms_used = 0;
  double truncation_bound = 0.0;  // 1 - (last factor)
};

enum class Ordering { Less, Equal, Greater, Mixed };

/// Branching mechanism kappa(u), computed by the backward recursion
/// kappa_i = eta_i(u_1..u_i, kappa_{i+1}..kappa_N); globally gated models
/// use (phi(u), ..., phi(u)) instead.
Vec kappa_eval(const PollingModel& m, const Vec& u);

/// k-fold iterate, kappa^(0) = identity.
Vec kappa_iterate(const PollingModel& m, Vec u, int k);

/// Immigration LST: prod_i S_i(phihat_i(u_1..u_i, kappa_{i+1}..kappa_N)).
double immigration_lst(const PollingModel& m, const Vec& u);

/// Mean matrix by centered differences of kappa at 0 (step = tol.fd_step).
Matrix mean_matrix(const PollingModel& m);

/// Rate matrix: row i is the mean-rate vector of visit process i.
Matrix rate_matrix(const PollingModel& m);

/// Dominant eigenvalue/eigenvector of a nonnegative matrix (power method).
PowerResult spectral_radius_nonneg(const Matrix& m);

StabilityReport stability(const PollingModel& m);

/// Coordinatewise comparison of M w against w at the given tolerance.
Ordering subinvariance_check(const Matrix& m, const Vec& w, double tol = 1e-10);

/// LST of the stationary workload at polling instants of queue 0:
/// prod_k G(kappa^(k)(u)), truncated once the iterate and the factor gap
/// both fall below tol.trunc_eps. Requires a Stable verdict.
TransformValue b1_transform(const PollingModel& m, const Vec& u);

struct EmbeddedTransforms {
  TransformValue b;  // polling instant of the queue
  TransformValue e;  // switching instant of the queue
};

/// B_i via the rotated model, E_i(u) = B_i(u with u_i -> eta_i(u)).
EmbeddedTransforms embedded_transforms(const PollingModel& m, int queue, const Vec& u);

struct StationaryMeans {
  Vec eb;     // E B^infty at polling instants of queue 0
  Vec eg;     // immigration mean E G
  Vec eb_ii;  // E B_{i,i}: own-queue mean at each queue's polling instant
};

StationaryMeans stationary_mean_at_polling(const PollingModel& m);

/// Sum E S_i + sum E tau_i(1) E B_{i,i}; equals the mean cycle length.
double expected_cycle_length(const PollingModel& m);

/// Workload LST at an arbitrary epoch. 0/0 points of the visit terms are
/// resolved by averaging a two-sided perturbation of the served coordinate;
/// switch terms use the exact integrated switch LST and have no singularity.
TransformValue arbitrary_epoch_transform(const PollingModel& m, const Vec& u);

}  // namespace polling
