// Copyright 2026 The qecc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qecc/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qecc/error.hpp"

namespace qecc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

// log of x^k e^{-x} / k!, with 0^0 = 1.
double log_poisson(double x, std::size_t k) {
  if (x == 0.0) return k == 0 ? 0.0 : kNegInf;
  const auto kd = static_cast<double>(k);
  return kd * std::log(x) - x - std::lgamma(kd + 1.0);
}

}  // namespace

TheoryParams TheoryParams::from_budget(std::size_t n_spins, std::size_t degree,
                                       std::size_t max_errors, double b2, double j2) {
  TheoryParams p;
  p.n_spins = n_spins;
  p.degree = degree;
  p.kappa = static_cast<double>(max_errors) / static_cast<double>(n_spins);
  p.b2 = b2;
  p.j2 = j2;
  return p;
}

void TheoryParams::validate() const {
  if (n_spins == 0) throw ConfigError("theory needs N >= 1");
  if (!(kappa > 0.0 && kappa <= 1.0)) throw ConfigError("kappa must be in (0, 1]");
  if (!(b2 >= 0.0) || !(j2 >= 0.0)) throw ConfigError("b2 and j2 must be >= 0");
  if (b0_corr && !(*b0_corr >= 0.0)) throw ConfigError("b0_corr must be >= 0");
  if (j0_corr && !(*j0_corr >= 0.0)) throw ConfigError("j0_corr must be >= 0");
}

std::size_t TheoryParams::max_errors() const {
  return static_cast<std::size_t>(std::floor(kappa * static_cast<double>(n_spins) * (1.0 + 1e-12)));
}

double TheoryParams::u() const { return std::sqrt(b2 + 2.0 * static_cast<double>(degree) * j2); }

ValidityFlags validity(const TheoryParams& p, double t) {
  ValidityFlags v;
  v.short_time = p.u() * t <= 0.5;
  v.few_errors = p.kappa <= 0.1;
  v.large_budget = p.max_errors() >= 10;
  return v;
}

double truncated_poisson_sum(double x, double y, std::size_t max_errors) {
  if (!(x >= 0.0) || !(y >= 0.0)) throw ConfigError("Poisson means must be >= 0");
  // log CDF of the single-error count a ~ Poisson(x), for a = 0..K.
  std::vector<double> log_cdf(max_errors + 1);
  double acc = kNegInf;
  for (std::size_t a = 0; a <= max_errors; ++a) {
    acc = log_add(acc, log_poisson(x, a));
    log_cdf[a] = acc;
  }
  double total = kNegInf;
  for (std::size_t b = 0; 2 * b <= max_errors; ++b) {
    total = log_add(total, log_poisson(y, b) + log_cdf[max_errors - 2 * b]);
  }
  return std::clamp(std::exp(total), 0.0, 1.0);
}

double f1_exact_sum(const TheoryParams& p, double t) {
  p.validate();
  if (t < 0.0) throw ConfigError("time must be >= 0");
  const auto n = static_cast<double>(p.n_spins);
  const auto d = static_cast<double>(p.degree);
  return truncated_poisson_sum(n * p.b2 * t * t, 2.0 * n * d * p.j2 * t * t, p.max_errors());
}

ErfBound f1_erf(const TheoryParams& p, double t) {
  p.validate();
  const auto n = static_cast<double>(p.n_spins);
  const auto d = static_cast<double>(p.degree);
  const double s = p.b2 + 4.0 * d * p.j2;
  ErfBound out;
  if (s == 0.0) {
    out.fidelity = 1.0;
    out.t_r = std::numeric_limits<double>::infinity();
    out.delta_t = 0.0;
    return out;
  }
  out.t_r = std::sqrt(p.kappa / s);
  out.delta_t = std::sqrt(1.0 / (2.0 * n)) * std::sqrt(p.b2 + 8.0 * d * p.j2) / s;
  out.fidelity = 0.5 + 0.5 * std::erf((out.t_r - t) / out.delta_t);
  return out;
}

double overlap_x0_squared(const TheoryParams& p, double t) {
  const double ut = p.u() * t;
  return std::exp(-static_cast<double>(p.n_spins) * ut * ut);
}

double x0_sample_exponent(const HamiltonianSample& h, const LatticeSpec& lattice, double t) {
  if (h.fields.size() != lattice.n_spins || h.couplings.size() != lattice.edges.size()) {
    throw ConfigError("Hamiltonian sample does not match lattice");
  }
  double fields = 0.0;
  for (const auto& b : h.fields) {
    for (double c : b) fields += c * c;
  }
  double edges = 0.0;
  for (const auto& j : h.couplings) {
    for (const auto& row : j) {
      for (double c : row) edges += c * c;
    }
  }
  const double ordered_pairs = 2.0 * edges;
  return std::exp(-t * t * fields - 2.0 * t * t * ordered_pairs);
}

double f1_time_dependent_exact_sum(const TheoryParams& p, double t) {
  p.validate();
  if (!p.b0_corr || !p.j0_corr) throw ConfigError("time-dependent bound needs b0_corr and j0_corr");
  if (t < 0.0) throw ConfigError("time must be >= 0");
  const auto n = static_cast<double>(p.n_spins);
  const auto d = static_cast<double>(p.degree);
  return truncated_poisson_sum(n * *p.b0_corr * t, 2.0 * n * d * *p.j0_corr * t, p.max_errors());
}

ErfBound f1_time_dependent(const TheoryParams& p, double t) {
  p.validate();
  if (!p.b0_corr || !p.j0_corr) throw ConfigError("time-dependent bound needs b0_corr and j0_corr");
  const auto n = static_cast<double>(p.n_spins);
  const auto d = static_cast<double>(p.degree);
  const double s = *p.b0_corr + 4.0 * d * *p.j0_corr;
  ErfBound out;
  if (s == 0.0) {
    out.fidelity = 1.0;
    out.t_r = std::numeric_limits<double>::infinity();
    return out;
  }
  out.t_r = p.kappa / s;
  out.delta_t = std::sqrt(2.0 * p.kappa / n) * std::sqrt(*p.b0_corr + 8.0 * d * *p.j0_corr) /
                std::pow(s, 1.5);
  out.fidelity = 0.5 + 0.5 * std::erf((out.t_r - t) / out.delta_t);
  return out;
}

EffectiveVariances effective_variances(double b2, double j2) {
  return {b2 / 3.0, j2 / 9.0 + 0.25 * (2.0 * j2 / 9.0)};
}

EffectiveVariances effective_variances(const std::vector<HamiltonianSample>& samples) {
  double bz = 0.0;
  double jzz = 0.0;
  double jt = 0.0;
  std::size_t n_fields = 0;
  std::size_t n_edges = 0;
  for (const auto& h : samples) {
    if (!h.xy_symmetric) throw ConfigError("effective variances need an xy-symmetric ensemble");
    for (const auto& b : h.fields) {
      bz += b[2] * b[2];
      ++n_fields;
    }
    for (const auto& j : h.couplings) {
      jzz += j[2][2] * j[2][2];
      const double s = j[0][0] + j[1][1];
      jt += s * s;
      ++n_edges;
    }
  }
  EffectiveVariances out;
  if (n_fields > 0) out.b2 = bz / static_cast<double>(n_fields);
  if (n_edges > 0) out.j2 = (jzz + 0.25 * jt) / static_cast<double>(n_edges);
  return out;
}

ErrorSplit optimal_error_split(std::size_t degree, double b2, double j2) {
  if (b2 == 0.0) return {std::numeric_limits<double>::infinity(), false};
  return {4.0 * static_cast<double>(degree) * j2 / b2, true};
}

std::optional<double> find_crossing(const std::function<double(double)>& f, double level,
                                    double lo, double hi, double tol) {
  const double flo = f(lo) - level;
  const double fhi = f(hi) - level;
  if (flo < 0.0 || fhi > 0.0) return std::nullopt;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) - level > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qecc
