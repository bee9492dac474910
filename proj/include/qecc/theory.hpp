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

#ifndef QECC_THEORY_HPP
#define QECC_THEORY_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "qecc/lattice.hpp"

namespace qecc {

/// Parameters of the code-independent fidelity bound. The error budget is
/// K = floor(kappa * N); a relative nudge of 1e-12 keeps kappa = K/N from
/// rounding down to K - 1.
struct TheoryParams {
  std::size_t n_spins = 0;
  std::size_t degree = 0;
  double kappa = 0.0;
  double b2 = 0.0;
  double j2 = 0.0;
  std::optional<double> b0_corr;  // b(t) = b0_corr |t| for short-correlated noise
  std::optional<double> j0_corr;

  static TheoryParams from_budget(std::size_t n_spins, std::size_t degree, std::size_t max_errors,
                                  double b2, double j2);

  void validate() const;
  std::size_t max_errors() const;
  /// sqrt(b2 + 2 d j2)
  double u() const;
};

/// Regime assumptions behind the closed forms; reported, not enforced.
struct ValidityFlags {
  bool short_time = true;   // U t <= 0.5
  bool few_errors = true;   // kappa <= 0.1
  bool large_budget = true; // K >= 10 (erf form)
};

ValidityFlags validity(const TheoryParams& p, double t);

/// e^{-(x+y)} sum_{a + 2b <= K} x^a/a! y^b/b!, evaluated in log space.
/// a counts single-site field errors, b interaction-induced error pairs.
double truncated_poisson_sum(double x, double y, std::size_t max_errors);

/// Exact truncated sum with x = N B^2 t^2 and y = 2 N d J^2 t^2.
double f1_exact_sum(const TheoryParams& p, double t);

struct ErfBound {
  double fidelity = 0.0;
  double t_r = 0.0;
  double delta_t = 0.0;
};

/// Large-K form: 1/2 + 1/2 erf((t_R - t)/dt) with
/// t_R = sqrt(kappa/(B^2 + 4dJ^2)), dt = sqrt(1/2N) sqrt(B^2 + 8dJ^2)/(B^2 + 4dJ^2).
ErfBound f1_erf(const TheoryParams& p, double t);

/// exp(-N (U t)^2), the ensemble-level squared overlap with the initial state.
double overlap_x0_squared(const TheoryParams& p, double t);

/// Realization-specific squared overlap estimate
/// exp[-t^2 sum_n |B_n|^2 - 2 t^2 sum_{n != m} sum_ab (J_nm^ab)^2],
/// with the ordered-pair sum taken as twice the edge sum. b0 is ignored.
double x0_sample_exponent(const HamiltonianSample& h, const LatticeSpec& lattice, double t);

/// Short-time-correlated noise: the same truncated sum with (Bt)^2 -> b0 t
/// and (Jt)^2 -> j0 t.
double f1_time_dependent_exact_sum(const TheoryParams& p, double t);

/// t_R = kappa/(b0 + 4 d j0), dt = sqrt(2 kappa/N) sqrt(b0 + 8 d j0)/(b0 + 4 d j0)^{3/2}.
ErfBound f1_time_dependent(const TheoryParams& p, double t);

struct EffectiveVariances {
  double b2 = 0.0;  // mean (B^z)^2
  double j2 = 0.0;  // mean (J^zz)^2 + 1/4 mean (J^xx + J^yy)^2
};

/// Closed form for the Gaussian ensemble: (b2/3, j2/6).
EffectiveVariances effective_variances(double b2, double j2);
/// Empirical estimate over a batch of samples (fields and edges pooled).
EffectiveVariances effective_variances(const std::vector<HamiltonianSample>& samples);

struct ErrorSplit {
  double ratio = 0.0;  // K_perp / K_par = 4 d J^2 / B^2
  bool defined = true; // false when B^2 == 0 (ratio reported as +inf)
};

ErrorSplit optimal_error_split(std::size_t degree, double b2, double j2);

/// First t in [lo, hi] where f(t) = level, for f decreasing through level.
/// Bisection to absolute tolerance `tol`. Returns nullopt if f does not
/// bracket the level on [lo, hi].
std::optional<double> find_crossing(const std::function<double(double)>& f, double level,
                                    double lo, double hi, double tol = 1e-12);

}  // namespace qecc

#endif  // QECC_THEORY_HPP
