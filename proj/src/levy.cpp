// SPDX-License-Identifier: Apache-2.0
#include "polling/levy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace polling {

namespace {

void require_nonneg(const Vec& u, const char* what) {
  for (double x : u)
    if (x < 0.0) throw std::domain_error(std::string(what) + ": negative coordinate");
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

double JumpSpec::lst(double s) const { return 1.0 - one_minus_lst(s); }

double JumpSpec::one_minus_lst(double s) const {
  switch (base) {
    case Base::Deterministic:
      return -std::expm1(-value * s);
    case Base::Exponential: {
      const double ms = value * s;
      if (ms <= -1.0) throw std::runtime_error("exponential jump LST: argument out of range");
      return ms / (1.0 + ms);
    }
    case Base::Discrete: {
      double acc = 0.0;
      for (std::size_t k = 0; k < points.size(); ++k)
        acc += weights[k] * -std::expm1(-points[k] * s);
      return acc;
    }
  }
  return 0.0;
}

double JumpSpec::mean() const {
  switch (base) {
    case Base::Deterministic:
    case Base::Exponential:
      return value;
    case Base::Discrete: {
      double m = 0.0;
      for (std::size_t k = 0; k < points.size(); ++k) m += weights[k] * points[k];
      return m;
    }
  }
  return 0.0;
}

double JumpSpec::sample(Rng& rng) const {
  switch (base) {
    case Base::Deterministic:
      return value;
    case Base::Exponential:
      return rng.exponential(value);
    case Base::Discrete: {
      const double u = rng.uniform();
      double acc = 0.0;
      for (std::size_t k = 0; k < points.size(); ++k) {
        acc += weights[k];
        if (u <= acc) return points[k];
      }
      return points.back();
    }
  }
  return 0.0;
}

double SubordinatorSpec::exponent(const Vec& u) const {
  double s = dot(drift, u);
  for (const auto& c : components) s += c.rate * c.jump.one_minus_lst(dot(u, c.jump.scale));
  return s;
}

Vec SubordinatorSpec::mean_rate() const {
  Vec r = drift;
  for (const auto& c : components) {
    const double m = c.rate * c.jump.mean();
    for (int j = 0; j < dim(); ++j) r[j] += m * c.jump.scale[j];
  }
  return r;
}

bool operator==(const JumpSpec& a, const JumpSpec& b) {
  return a.base == b.base && a.value == b.value && a.points == b.points &&
         a.weights == b.weights && a.scale == b.scale;
}

bool operator==(const CppComponent& a, const CppComponent& b) {
  return a.rate == b.rate && a.jump == b.jump;
}

bool operator==(const SubordinatorSpec& a, const SubordinatorSpec& b) {
  return a.drift == b.drift && a.components == b.components;
}

double phi_eval(const SubordinatorSpec& spec, const Vec& u) {
  if (static_cast<int>(u.size()) != spec.dim())
    throw std::invalid_argument("phi_eval: dimension mismatch");
  require_nonneg(u, "phi_eval");
  return spec.exponent(u);
}

void validate(const SubordinatorSpec& spec, int dim) {
  if (spec.dim() != dim) throw std::invalid_argument("subordinator: wrong dimension");
  for (double d : spec.drift)
    if (!(d >= 0.0) || !std::isfinite(d))
      throw std::invalid_argument("subordinator: drift must be nonnegative and finite");
  for (const auto& c : spec.components) {
    if (!(c.rate > 0.0) || !std::isfinite(c.rate))
      throw std::invalid_argument("subordinator: component rate must be positive");
    const auto& j = c.jump;
    if (static_cast<int>(j.scale.size()) != dim)
      throw std::invalid_argument("jump: scale has wrong dimension");
    double smax = 0.0;
    for (double s : j.scale) {
      if (!(s >= 0.0) || !std::isfinite(s))
        throw std::invalid_argument("jump: scale entries must be nonnegative");
      smax = std::max(smax, s);
    }
    if (smax == 0.0) throw std::invalid_argument("jump: scale must have a positive entry");
    switch (j.base) {
      case JumpSpec::Base::Deterministic:
      case JumpSpec::Base::Exponential:
        if (!(j.value > 0.0) || !std::isfinite(j.value))
          throw std::invalid_argument("jump: base parameter must be positive");
        break;
      case JumpSpec::Base::Discrete: {
        if (j.points.empty() || j.points.size() != j.weights.size())
          throw std::invalid_argument("jump: discrete base needs matching points/weights");
        double wsum = 0.0;
        for (std::size_t k = 0; k < j.points.size(); ++k) {
          if (!(j.points[k] > 0.0)) throw std::invalid_argument("jump: points must be positive");
          if (!(j.weights[k] > 0.0)) throw std::invalid_argument("jump: weights must be positive");
          wsum += j.weights[k];
        }
        if (std::abs(wsum - 1.0) > 1e-12)
          throw std::invalid_argument("jump: discrete weights must sum to 1");
        break;
      }
    }
  }
}

double ServedProcessSpec::exponent(const Vec& u) const {
  const double ui = u[queue];
  return input.exponent(u) - service_rate * ui - 0.5 * brownian_sd * brownian_sd * ui * ui;
}

Vec ServedProcessSpec::mean_rate() const {
  Vec r = input.mean_rate();
  r[queue] -= service_rate;
  return r;
}

bool operator==(const ServedProcessSpec& a, const ServedProcessSpec& b) {
  return a.input == b.input && a.queue == b.queue && a.service_rate == b.service_rate &&
         a.brownian_sd == b.brownian_sd;
}

double phi_a_eval(const ServedProcessSpec& spec, const Vec& u) {
  if (static_cast<int>(u.size()) != spec.dim())
    throw std::invalid_argument("phi_a_eval: dimension mismatch");
  require_nonneg(u, "phi_a_eval");
  return spec.exponent(u);
}

void validate(const ServedProcessSpec& spec, int dim) {
  validate(spec.input, dim);
  if (spec.queue < 0 || spec.queue >= dim)
    throw std::invalid_argument("served process: queue index out of range");
  if (!(spec.service_rate > 0.0)) throw std::invalid_argument("served process: rate must be > 0");
  if (!(spec.brownian_sd >= 0.0))
    throw std::invalid_argument("served process: brownian sd must be >= 0");
  if (!(spec.drain_rate() < 0.0))
    throw std::invalid_argument("served process: needs negative drift (E A_i(1) < 0)");
}

double SwitchSpec::lst(double s) const {
  switch (kind) {
    case Kind::Deterministic:
      return std::exp(-mean * s);
    case Kind::Exponential: {
      const double ms = mean * s;
      if (ms <= -1.0) throw std::runtime_error("switch LST: argument out of range");
      return 1.0 / (1.0 + ms);
    }
    case Kind::Erlang: {
      const double x = mean * s / shape;
      if (x <= -1.0) throw std::runtime_error("switch LST: argument out of range");
      return std::exp(-shape * std::log1p(x));
    }
  }
  return 1.0;
}

double SwitchSpec::integrated_lst(double s) const {
  if (s == 0.0) return mean;
  switch (kind) {
    case Kind::Deterministic:
      return -std::expm1(-mean * s) / s;
    case Kind::Exponential:
      return mean / (1.0 + mean * s);
    case Kind::Erlang:
      return -std::expm1(-shape * std::log1p(mean * s / shape)) / s;
  }
  return mean;
}

double SwitchSpec::sample(Rng& rng) const {
  switch (kind) {
    case Kind::Deterministic:
      return mean;
    case Kind::Exponential:
      return rng.exponential(mean);
    case Kind::Erlang: {
      double t = 0.0;
      for (int k = 0; k < shape; ++k) t += rng.exponential(mean / shape);
      return t;
    }
  }
  return mean;
}

bool operator==(const SwitchSpec& a, const SwitchSpec& b) {
  return a.kind == b.kind && a.mean == b.mean && a.shape == b.shape && a.input == b.input;
}

double switch_lst(const SwitchSpec& spec, double s) {
  if (s < 0.0) throw std::domain_error("switch_lst: negative argument");
  return spec.lst(s);
}

void validate(const SwitchSpec& spec, int dim) {
  if (!(spec.mean > 0.0) || !std::isfinite(spec.mean))
    throw std::invalid_argument("switch: mean duration must be positive and finite");
  if (spec.kind == SwitchSpec::Kind::Erlang && spec.shape < 1)
    throw std::invalid_argument("switch: erlang shape must be >= 1");
  validate(spec.input, dim);
}

Increment sample_increment(const SubordinatorSpec& spec, double horizon, Rng& rng) {
  if (horizon < 0.0) throw std::domain_error("sample_increment: negative horizon");
  Increment inc;
  const int n = spec.dim();
  inc.total.assign(n, 0.0);
  for (int j = 0; j < n; ++j) inc.total[j] = spec.drift[j] * horizon;
  for (const auto& c : spec.components) {
    double t = rng.exponential(1.0 / c.rate);
    while (t <= horizon) {
      const double x = c.jump.sample(rng);
      JumpEvent ev;
      ev.time = t;
      ev.amount.assign(n, 0.0);
      for (int j = 0; j < n; ++j) ev.amount[j] = x * c.jump.scale[j];
      for (int j = 0; j < n; ++j) inc.total[j] += ev.amount[j];
      inc.events.push_back(std::move(ev));
      t += rng.exponential(1.0 / c.rate);
    }
  }
  std::sort(inc.events.begin(), inc.events.end(),
            [](const JumpEvent& a, const JumpEvent& b) { return a.time < b.time; });
  return inc;
}

}  // namespace polling
