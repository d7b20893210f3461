// SPDX-License-Identifier: Apache-2.0
#include "polling/rng.hpp"

#include <cmath>

namespace polling {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t stream_seed(std::uint64_t base_seed, std::uint64_t stream) {
  std::uint64_t state = base_seed;
  std::uint64_t out = 0;
  for (std::uint64_t i = 0; i <= stream; ++i) out = splitmix64(state);
  return out;
}

double Rng::uniform() {
  // 53 random bits mapped to (0, 1]; never returns 0, so logs are safe.
  return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
}

double Rng::exponential(double mean) { return -mean * std::log(uniform()); }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double theta = 2.0 * M_PI * uniform();
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

}  // namespace polling
