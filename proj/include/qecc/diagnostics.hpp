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

#ifndef QECC_DIAGNOSTICS_HPP
#define QECC_DIAGNOSTICS_HPP

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "qecc/codes.hpp"
#include "qecc/lattice.hpp"
#include "qecc/pauli_state.hpp"
#include "qecc/propagator.hpp"

namespace qecc {

inline constexpr std::size_t kMaxDenseDiagnosticSpins = 12;

/// 1 / sum_i |<i|E>|^4 for every eigenstate |E> of H, where {|i>} is the
/// product eigenbasis of the non-interacting part sum_n (B_n + b0 z).sigma_n.
/// Sites with a zero field use the computational basis. Results follow the
/// ascending-energy order of the eigenstates.
std::vector<double> participation_ratio(const HamiltonianSample& h, const LatticeSpec& lattice);
/// Same, reusing an existing eigendecomposition of h.
std::vector<double> participation_ratio(const HamiltonianSample& h, const LatticeSpec& lattice,
                                        const SpectralPropagator& spectral);

using ErrorClass = std::pair<std::size_t, std::size_t>;  // (z_count, xy_count)

struct CensusReport {
  std::map<ErrorClass, double> weights;

  double total() const;
  /// Classes with xy_count == 0, excluding the identity class (0,0).
  double phase_only() const;
  /// Classes with xy_count > 0.
  double flip_containing() const;
  /// Classes with odd xy_count.
  double odd_flip() const;
};

/// Groups per-string weights by (z_count, xy_count).
CensusReport census_from_weights(std::span<const PauliString> strings, std::span<const double> weights);

/// Error-space weight of psi_t split by error class.
CensusReport error_census(const ErrorBasis& basis, const StateVector& psi_t);
CensusReport error_census(const StabilizerCode& code, const StateVector& psi0,
                          const StateVector& psi_t, std::size_t max_z, std::size_t max_xy);
/// Same split for the reference-entangled ideal code.
CensusReport error_census(const ReferenceCodeEvaluator& evaluator, double t);

struct VarianceReport {
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0;        // unbiased
  double bound = 0.0;           // mean (1 - mean)
  double slack = 0.0;           // 3 standard errors of the variance estimator
  bool passed = false;          // variance <= bound + slack
};

/// Checks 0 <= var F <= mean F (1 - mean F). Needs at least 2 samples.
VarianceReport variance_check(std::span<const double> samples);

struct F2Estimate {
  double value = 0.0;  // mean F - F1
  double sem = 0.0;
  bool consistent = true;  // value >= -3 sem
};

F2Estimate empirical_f2(double mean_f, double sem_f, double f1);

}  // namespace qecc

#endif  // QECC_DIAGNOSTICS_HPP
