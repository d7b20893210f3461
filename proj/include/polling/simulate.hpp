// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

#include "polling/model.hpp"
#include "polling/rng.hpp"

namespace polling {

struct SimConfig {
  int warmup_cycles = 1000;
  int measured_cycles = 10000;
  int replications = 32;
  std::uint64_t base_seed = 12345;
  double brownian_step = 0.01;  // Euler grid, only used when some sigma > 0
  Vec initial_workload;         // defaults to zeros
};

bool operator==(const SimConfig& a, const SimConfig& b);

/// One piecewise-linear piece of the workload path. Jumps sit on the
/// boundaries between segments.
struct Segment {
  int queue = -1;         // queue being served, -1 during a switch-over
  double t0 = 0.0, t1 = 0.0;
  Vec start;              // F(t0)
  Vec slope;
};

struct CycleTrace {
  long index = 0;  // cycle number within the replication, warmup excluded
  Vec start;       // B^n, workload when the server reaches queue 0
  Vec end;         // B^{n+1}
  std::vector<Vec> at_polling;    // per queue, workload at visit start
  std::vector<Vec> at_switching;  // per queue, workload at visit end
  double length = 0.0;
  std::vector<Segment> segments;
};

struct SimEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  long n = 0;  // replications the estimate is batched over
};

struct BusyPeriodSample {
  double duration = 0.0;
  Vec other_input;  // joint input accumulated over the busy period
};

/// First passage of x + A_i(t) to 0. Exact event-driven for sigma = 0;
/// Euler-Maruyama with linear crossing interpolation otherwise (bias
/// O(sqrt(dt))).
BusyPeriodSample busy_period_sample(const ServedProcessSpec& served, double x, Rng& rng,
                                    double brownian_step = 0.01);

/// Simulates warmup + measured cycles of one replication, invoking the
/// callback for every measured cycle. The trace object is reused between
/// calls. Stability is not required; divergent runs are legal.
void run_cycles(const PollingModel& m, const SimConfig& cfg, Rng& rng,
                const std::function<void(const CycleTrace&)>& on_cycle);

/// Mean of e^{-u.B} at the embedded instants of one queue, batched over
/// replications.
SimEstimate estimate_embedded_transform(const PollingModel& m, int queue, const Vec& u,
                                        const SimConfig& cfg, bool at_switching = false);

/// Regenerative ratio estimator of the arbitrary-epoch transform, with the
/// cycle integral evaluated in closed form per segment and the standard
/// error via the delta method over replication batches.
SimEstimate estimate_arbitrary_epoch(const PollingModel& m, const Vec& u,
                                     const SimConfig& cfg);

/// Everything the validation report needs, collected in a single pass over
/// the simulated cycles for a whole grid of u vectors.
struct SimSummary {
  std::vector<std::vector<SimEstimate>> b_polling;    // [queue][u]
  std::vector<std::vector<SimEstimate>> e_switching;  // [queue][u]
  std::vector<SimEstimate> arbitrary;                 // [u]
  SimEstimate cycle_length;
  std::vector<SimEstimate> mean_at_start;  // coordinates of E B^n
};

SimSummary simulate_summary(const PollingModel& m, const std::vector<Vec>& grid,
                            const SimConfig& cfg);

/// One CSV row per segment: cycle, phase, t_start, t_end, F at start, slope.
void dump_trace_csv(std::ostream& out, const PollingModel& m, const SimConfig& cfg,
                    long max_cycles);

}  // namespace polling
