// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace polling {

/// Seed for an independent stream, derived from a base seed by stepping a
/// SplitMix64 chain `stream + 1` times. Documented so that runs are
/// reproducible across builds of this project.
std::uint64_t stream_seed(std::uint64_t base_seed, std::uint64_t stream);

/// Deterministic random source. Samplers are hand-rolled (inverse CDF,
/// Box-Muller) so a fixed seed yields the same stream everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on (0, 1].
  double uniform();
  /// Exponential with the given mean.
  double exponential(double mean);
  /// Standard normal.
  double normal();

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace polling
